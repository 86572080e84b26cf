#include "dynstr/lca.hpp"

namespace dynstr {

LcaTable::LcaTable(const Gst& g) {
    i32 n = g.node_count();
    first_.assign(n, -1);
    std::vector<i64> tour;
    tour.reserve(2 * n);
    std::vector<i32> level(n, 0);
    // iterative DFS emitting the Euler tour
    std::vector<std::pair<i32, i32>> stk; // node, next child idx
    stk.push_back({g.root(), g.child_begin(g.root())});
    first_[g.root()] = 0;
    tour.push_back(g.root());
    while (!stk.empty()) {
        auto& [v, it] = stk.back();
        if (it < g.child_end(v)) {
            i32 c = g.child_at(it++);
            level[c] = level[v] + 1;
            first_[c] = static_cast<i32>(tour.size());
            tour.push_back((static_cast<i64>(level[c]) << 32) | c);
            stk.push_back({c, g.child_begin(c)});
        } else {
            stk.pop_back();
            if (!stk.empty()) {
                i32 p = stk.back().first;
                tour.push_back((static_cast<i64>(level[p]) << 32) | p);
            }
        }
    }
    i32 m = static_cast<i32>(tour.size());
    int levels = floor_log2(m) + 1;
    table_.resize(levels);
    table_[0] = std::move(tour);
    for (int k = 1; k < levels; ++k) {
        i32 len = m - (1 << k) + 1;
        table_[k].resize(len);
        for (i32 i = 0; i < len; ++i)
            table_[k][i] = std::min(table_[k - 1][i], table_[k - 1][i + (1 << (k - 1))]);
    }
}

} // namespace dynstr
