#ifndef DYNSTR_LCA_HPP
#define DYNSTR_LCA_HPP

#include "dynstr/gst.hpp"

namespace dynstr {

// Constant-time LCA over a Gst tree via Euler tour + sparse min.
class LcaTable {
public:
    LcaTable() = default;
    explicit LcaTable(const Gst& g);

    i32 lca(i32 u, i32 v) const {
        i32 a = first_[u], b = first_[v];
        if (a > b) std::swap(a, b);
        int k = floor_log2(b - a + 1);
        i64 x = table_[k][a], y = table_[k][b - (1 << k) + 1];
        return static_cast<i32>((x < y ? x : y) & 0xffffffffLL);
    }

private:
    std::vector<i32> first_;
    std::vector<std::vector<i64>> table_; // (level << 32) | node
};

} // namespace dynstr

#endif
