#include "dynstr/gst.hpp"

#include <algorithm>

namespace dynstr {

Gst::Gst(PartedText text) : text_(std::move(text)), sa_(text_.raw()) {
    require(n() >= 1, "empty total input");
    build_tree();
    build_heavy();

    i32 parts = text_.part_count();
    part_prefix_.assign(parts, std::vector<i32>(n() + 2, 0));
    part_ranks_.assign(parts, {});
    for (i32 r = 1; r <= n(); ++r) {
        i32 p = text_.part_of(sa_.sa(r));
        for (i32 q = 0; q < parts; ++q)
            part_prefix_[q][r + 1] = part_prefix_[q][r] + (q == p ? 1 : 0);
        if (p >= 0) part_ranks_[p].push_back(r);
    }
}

void Gst::build_tree() {
    i32 m = n();
    par_.clear(); depth_.clear();
    auto new_node = [&](i32 d) {
        par_.push_back(-1);
        depth_.push_back(d);
        return static_cast<i32>(par_.size()) - 1;
    };
    new_node(0); // root

    leaf_of_rank_.assign(m + 1, -1);
    std::vector<i32> stk{0};
    auto node_depth = [&](i32 v) { return depth_[v]; };

    for (i32 r = 1; r <= m; ++r) {
        i32 h = (r == 1) ? 0 : sa_.lcp_at(r);
        i32 last = -1;
        while (node_depth(stk.back()) > h) {
            last = stk.back();
            stk.pop_back();
            if (node_depth(stk.back()) >= h) par_[last] = stk.back();
        }
        if (node_depth(stk.back()) < h) {
            // split: introduce an explicit node at depth h adopting `last`
            i32 u = new_node(h);
            par_[u] = stk.back();
            par_[last] = u;
            stk.push_back(u);
        }
        i32 pos = sa_.sa(r);
        i32 leaf = new_node(m - pos + 1);
        leaf_of_rank_[r] = leaf;
        stk.push_back(leaf);
    }
    while (stk.size() > 1) {
        i32 v = stk.back();
        stk.pop_back();
        par_[v] = stk.back();
    }

    i32 nodes = node_count();
    // children in CSR form; creation preserves left-to-right (rank) order of
    // subtrees, so re-bucketing by parent keeps children sorted by first char
    // as long as we bucket in rank order. Do a DFS-free two-pass instead:
    // order nodes by (parent, leftmost rank).
    lo_.assign(nodes, m + 1);
    hi_.assign(nodes, 0);
    for (i32 r = 1; r <= m; ++r) {
        i32 leaf = leaf_of_rank_[r];
        lo_[leaf] = hi_[leaf] = r;
    }
    // nodes were created before their parents finished, but parents always
    // have smaller depth; propagate ranges bottom-up in order of decreasing
    // depth (stable counting by depth would do; a simple sort is fine here)
    std::vector<i32> order(nodes);
    for (i32 v = 0; v < nodes; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](i32 a, i32 b) { return depth_[a] > depth_[b]; });
    for (i32 v : order) {
        if (v == 0) continue;
        i32 p = par_[v];
        lo_[p] = std::min(lo_[p], lo_[v]);
        hi_[p] = std::max(hi_[p], hi_[v]);
    }

    child_start_.assign(nodes + 1, 0);
    for (i32 v = 1; v < nodes; ++v) child_start_[par_[v] + 1]++;
    for (i32 v = 0; v < nodes; ++v) child_start_[v + 1] += child_start_[v];
    child_list_.assign(nodes - 1, -1);
    {
        std::vector<i32> fill(child_start_.begin(), child_start_.end() - 1);
        // bucket children sorted by their SA range so edges appear in
        // lexicographic order
        std::vector<i32> by_lo(order);
        std::sort(by_lo.begin(), by_lo.end(), [&](i32 a, i32 b) { return lo_[a] < lo_[b]; });
        for (i32 v : by_lo) {
            if (v == 0) continue;
            child_list_[fill[par_[v]]++] = v;
        }
    }

    leaf_node_.assign(m + 2, -1);
    for (i32 r = 1; r <= m; ++r) leaf_node_[sa_.sa(r)] = leaf_of_rank_[r];
}

void Gst::build_heavy() {
    i32 nodes = node_count();
    pid_.assign(nodes, -1);
    pix_.assign(nodes, -1);
    path_start_.clear();
    path_nodes_.clear();

    std::vector<i32> heavy(nodes, -1);
    for (i32 v = 0; v < nodes; ++v) {
        i32 best = -1, best_cnt = -1;
        for (i32 idx = child_begin(v); idx < child_end(v); ++idx) {
            i32 c = child_list_[idx];
            i32 cnt = leaf_count(c);
            if (cnt > best_cnt) { best_cnt = cnt; best = c; }
        }
        heavy[v] = best;
    }

    for (i32 v = 0; v < nodes; ++v) {
        bool is_top = (v == 0) || heavy[par_[v]] != v;
        if (!is_top) continue;
        i32 p = static_cast<i32>(path_start_.size());
        path_start_.push_back(static_cast<i32>(path_nodes_.size()));
        for (i32 u = v; u != -1; u = heavy[u]) {
            pid_[u] = p;
            pix_[u] = static_cast<i32>(path_nodes_.size()) - path_start_[p];
            path_nodes_.push_back(u);
        }
    }
    path_start_.push_back(static_cast<i32>(path_nodes_.size()));
}

i32 Gst::child_by_char(i32 v, i32 c) const {
    i32 b = child_begin(v), e = child_end(v);
    while (b < e) {
        i32 mid = (b + e) / 2;
        i32 fc = edge_first_char(child_list_[mid]);
        if (fc == c) return child_list_[mid];
        if (fc < c) b = mid + 1; else e = mid;
    }
    return -1;
}

std::vector<PathFragment> Gst::heavy_decomp_to_root(i32 v) const {
    std::vector<PathFragment> out;
    while (true) {
        i32 top = path_top(pid_[v]);
        out.push_back(PathFragment{top, v});
        if (top == 0) break;
        v = par_[top];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

NodeHandle Gst::locus(i32 i, i32 j) const {
    require(1 <= i && i <= j && j <= n(), "locus: invalid interval");
    i32 len = j - i + 1;
    i32 v = leaf_node_[i];
    require(v >= 0, "locus: no suffix at position");
    // climb whole heavy-path prefix fragments while the node above is still
    // deep enough
    while (true) {
        i32 top = path_top(pid_[v]);
        if (top == 0 || depth_[par_[top]] < len) { // answer within this fragment
            break;
        }
        v = par_[top];
    }
    // binary search inside the fragment [top .. v] for the shallowest node of
    // depth >= len
    i32 p = pid_[v];
    i32 b = 0, e = pix_[v];
    while (b < e) {
        i32 mid = (b + e) / 2;
        if (depth_[path_node(p, mid)] >= len) e = mid; else b = mid + 1;
    }
    return NodeHandle{path_node(p, b), len};
}

std::optional<SaRange> Gst::concat_ranges(SaRange ru, i32 len_u, SaRange rv, i32 len_v) const {
    if (len_v == 0) return ru.empty() ? std::nullopt : std::optional<SaRange>(ru);
    if (len_u == 0) return rv.empty() ? std::nullopt : std::optional<SaRange>(rv);
    if (ru.empty() || rv.empty()) return std::nullopt;
    // within ru, the rank of the suffix starting len_u later is monotone;
    // binary search the subinterval mapping into rv
    auto cont_rank = [&](i32 r) {
        i32 p = sa_.sa(r) + len_u;
        return p <= n() + 1 ? sa_.rank(p) : 0;
    };
    i32 lo = ru.lo, hi = ru.hi + 1;
    while (lo < hi) { // first r with cont_rank >= rv.lo
        i32 mid = (lo + hi) / 2;
        if (cont_rank(mid) >= rv.lo) hi = mid; else lo = mid + 1;
    }
    i32 first = lo;
    lo = ru.lo; hi = ru.hi + 1;
    while (lo < hi) { // first r with cont_rank > rv.hi
        i32 mid = (lo + hi) / 2;
        if (cont_rank(mid) > rv.hi) hi = mid; else lo = mid + 1;
    }
    i32 last = lo - 1;
    if (first > last) return std::nullopt;
    return SaRange{first, last};
}

i32 Gst::any_rank_in_part(SaRange r, i32 part) const {
    if (r.empty()) return -1;
    const auto& ranks = part_ranks_[part];
    auto it = std::lower_bound(ranks.begin(), ranks.end(), r.lo);
    if (it == ranks.end() || *it > r.hi) return -1;
    return *it;
}

Gst::Affix Gst::longest_affix_in_part(Ref u, Ref v, bool suffix_side, i32 part) const {
    if (suffix_side) {
        // longest suffix of UV occurring in the part: binary search over the
        // suffix length of V first, then extend leftward into U
        auto suffix_occurs = [&](i32 vtail, i32 utail) -> std::optional<SaRange> {
            // suffix = U[len-utail+1..] V[len-vtail+1..]
            std::optional<SaRange> r;
            i32 ulen = utail, vlen = vtail;
            if (ulen > 0) r = range_of(Ref{u.pos + u.len - ulen, ulen});
            if (vlen > 0) {
                SaRange rv = range_of(Ref{v.pos + v.len - vlen, vlen});
                r = r ? concat_ranges(*r, ulen, rv, vlen) : std::optional<SaRange>(rv);
            }
            if (!r) return std::nullopt;
            if (!range_hits_part(*r, part)) return std::nullopt;
            return r;
        };
        i32 lo = 0, hi = v.len;
        while (lo < hi) {
            i32 mid = (lo + hi + 1) / 2;
            if (suffix_occurs(mid, 0)) lo = mid; else hi = mid - 1;
        }
        i32 vtail = lo;
        i32 utail = 0;
        if (vtail == v.len) {
            lo = 0; hi = u.len;
            while (lo < hi) {
                i32 mid = (lo + hi + 1) / 2;
                if (suffix_occurs(vtail, mid)) lo = mid; else hi = mid - 1;
            }
            utail = lo;
        }
        Affix a;
        a.len = utail + vtail;
        if (a.len == 0) { a.witness = -1; return a; }
        auto r = suffix_occurs(vtail, utail);
        a.witness = any_occurrence_local(*r, part);
        return a;
    }
    // prefix side
    auto prefix_occurs = [&](i32 uhead, i32 vhead) -> std::optional<SaRange> {
        std::optional<SaRange> r;
        if (uhead > 0) r = range_of(Ref{u.pos, uhead});
        if (vhead > 0) {
            SaRange rv = range_of(Ref{v.pos, vhead});
            r = r ? concat_ranges(*r, uhead, rv, vhead) : std::optional<SaRange>(rv);
        }
        if (!r) return std::nullopt;
        if (!range_hits_part(*r, part)) return std::nullopt;
        return r;
    };
    i32 lo = 0, hi = u.len;
    while (lo < hi) {
        i32 mid = (lo + hi + 1) / 2;
        if (prefix_occurs(mid, 0)) lo = mid; else hi = mid - 1;
    }
    i32 uhead = lo, vhead = 0;
    if (uhead == u.len) {
        lo = 0; hi = v.len;
        while (lo < hi) {
            i32 mid = (lo + hi + 1) / 2;
            if (prefix_occurs(uhead, mid)) lo = mid; else hi = mid - 1;
        }
        vhead = lo;
    }
    Affix a;
    a.len = uhead + vhead;
    if (a.len == 0) { a.witness = -1; return a; }
    auto r = prefix_occurs(uhead, vhead);
    a.witness = any_occurrence_local(*r, part);
    return a;
}

} // namespace dynstr
