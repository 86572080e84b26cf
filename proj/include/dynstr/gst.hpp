#ifndef DYNSTR_GST_HPP
#define DYNSTR_GST_HPP

#include <optional>

#include "dynstr/suffix_array.hpp"
#include "dynstr/text.hpp"

namespace dynstr {

// Handle for a possibly implicit suffix-tree node: the explicit node at the
// bottom of the edge it lies on, plus its string depth.
struct NodeHandle {
    i32 edge = -1;  // explicit node id
    i32 depth = 0;  // D(parent(edge)) < depth <= D(edge)
};

// Inclusive rank interval in the suffix array. Ranks are over the non-empty
// suffixes (1..n); rank 0 is the empty suffix and never appears in a range.
struct SaRange {
    i32 lo = 1, hi = 0;
    bool empty() const { return hi < lo; }
    i32 size() const { return hi - lo + 1; }
};

// One prefix fragment of a heavy path: the path's topmost node down to
// `bottom`. Fragments of a root-to-v decomposition are connected by single
// light edges.
struct PathFragment {
    i32 top = -1;
    i32 bottom = -1;
};

// Generalized suffix tree bundle over a PartedText: suffix array, LCE, an
// explicit-node tree derived from LCP intervals, heavy-path decomposition,
// loci, SA ranges and range concatenation.
class Gst {
public:
    Gst() = default;
    explicit Gst(PartedText text);

    static Gst from_strings(const std::vector<std::string>& strings) {
        return Gst(PartedText(strings));
    }

    const PartedText& text() const { return text_; }
    const SuffixArray& sarr() const { return sa_; }
    i32 n() const { return sa_.n(); }

    // --- tree accessors -------------------------------------------------
    i32 node_count() const { return static_cast<i32>(par_.size()); }
    i32 root() const { return 0; }
    i32 parent(i32 v) const { return par_[v]; }
    i32 depth(i32 v) const { return depth_[v]; }
    i32 range_lo(i32 v) const { return lo_[v]; }
    i32 range_hi(i32 v) const { return hi_[v]; }
    i32 leaf_count(i32 v) const { return hi_[v] - lo_[v] + 1; }
    bool is_leaf(i32 v) const { return lo_[v] == hi_[v] && leaf_of_rank_[lo_[v]] == v; }
    i32 leaf_node(i32 pos) const { return leaf_node_[pos]; } // pos in [1, n]
    i32 first_leaf_pos(i32 v) const { return sa_.sa(lo_[v]); }

    i32 child_begin(i32 v) const { return child_start_[v]; }
    i32 child_end(i32 v) const { return child_start_[v + 1]; }
    i32 child_at(i32 idx) const { return child_list_[idx]; }
    i32 child_count(i32 v) const { return child_end(v) - child_begin(v); }
    // child whose edge starts with character c, or -1
    i32 child_by_char(i32 v, i32 c) const;
    // first character of the edge above v
    i32 edge_first_char(i32 v) const {
        return text_.at(first_leaf_pos(v) + depth_[par_[v]]);
    }

    // --- heavy paths ------------------------------------------------------
    i32 path_of(i32 v) const { return pid_[v]; }
    i32 path_index(i32 v) const { return pix_[v]; }
    i32 path_top(i32 p) const { return path_nodes_[path_start_[p]]; }
    i32 path_size(i32 p) const { return path_start_[p + 1] - path_start_[p]; }
    i32 path_node(i32 p, i32 idx) const { return path_nodes_[path_start_[p] + idx]; }
    i32 path_count() const { return static_cast<i32>(path_start_.size()) - 1; }
    // bottom of a heavy path is always a leaf
    i32 path_bottom(i32 p) const { return path_nodes_[path_start_[p + 1] - 1]; }

    // decomposition of the root-to-v path into heavy-path prefix fragments,
    // returned top-down; size is at most floor(log2(#leaves)) + 1
    std::vector<PathFragment> heavy_decomp_to_root(i32 v) const;

    // --- queries ----------------------------------------------------------
    // longest common prefix of the suffixes starting at global positions p, q
    i32 lce(i32 p, i32 q) const {
        require(p >= 1 && p <= n() + 1 && q >= 1 && q <= n() + 1, "lce: position out of range");
        return sa_.lce(p, q);
    }

    // lcp of two substring refs, capped by their lengths
    i32 lce_ref(Ref a, Ref b) const {
        if (a.len == 0 || b.len == 0) return 0;
        i32 ext = sa_.lce(a.pos, b.pos);
        return std::min(ext, std::min(a.len, b.len));
    }

    bool ref_less(Ref a, Ref b) const {
        i32 ext = lce_ref(a, b);
        if (ext == std::min(a.len, b.len)) return a.len < b.len;
        return text_.at(a.pos + ext) < text_.at(b.pos + ext);
    }

    bool ref_eq(Ref a, Ref b) const {
        return a.len == b.len && lce_ref(a, b) == a.len;
    }

    // locus of text[i..j]: the (possibly implicit) node whose path label is
    // text[i..j]; binary search over heavy paths, O(log n)
    NodeHandle locus(i32 i, i32 j) const;

    SaRange sa_range(NodeHandle h) const {
        require(h.edge >= 0, "sa_range: invalid handle");
        return SaRange{lo_[h.edge], hi_[h.edge]};
    }

    // range of UV given the ranges of substrings U and V, or nullopt when UV
    // does not occur; binary search refined by the rank of position+lenU
    std::optional<SaRange> concat_ranges(SaRange ru, i32 len_u, SaRange rv, i32 len_v) const;

    // does the range contain a suffix originating in the given part?
    bool range_hits_part(SaRange r, i32 part) const {
        if (r.empty()) return false;
        return part_prefix_[part][r.hi + 1] - part_prefix_[part][r.lo] > 0;
    }

    i32 part_hits(SaRange r, i32 part) const {
        if (r.empty()) return 0;
        return part_prefix_[part][r.hi + 1] - part_prefix_[part][r.lo];
    }

    // occurrences of L(v) within a part
    i32 occ_count(i32 v, i32 part) const {
        return part_prefix_[part][hi_[v] + 1] - part_prefix_[part][lo_[v]];
    }

    // some rank in r whose suffix originates in `part`, or -1
    i32 any_rank_in_part(SaRange r, i32 part) const;

    // local start position (within `part`) of some occurrence in the range,
    // or -1 when none
    i32 any_occurrence_local(SaRange r, i32 part) const {
        i32 rk = any_rank_in_part(r, part);
        return rk < 0 ? -1 : text_.local(part, sa_.sa(rk));
    }

    struct Affix {
        i32 len = 0;       // length of the longest prefix (or suffix) of UV occurring in the part
        i32 witness = -1;  // local start of one such occurrence
    };

    // longest prefix (side=false) or suffix (side=true) of UV occurring in
    // the given part; O(log^2 n) binary searches over concat_ranges
    Affix longest_affix_in_part(Ref u, Ref v, bool suffix_side, i32 part) const;

    // range of a substring ref (locus + sa_range)
    SaRange range_of(Ref r) const {
        if (r.len == 0) return SaRange{1, n()};
        NodeHandle h = locus(r.pos, r.pos + r.len - 1);
        return sa_range(h);
    }

private:
    void build_tree();
    void build_heavy();

    PartedText text_;
    SuffixArray sa_;

    std::vector<i32> par_, depth_, lo_, hi_;
    std::vector<i32> child_start_, child_list_;
    std::vector<i32> leaf_node_;     // suffix position -> leaf node id
    std::vector<i32> leaf_of_rank_;  // rank -> leaf node id
    std::vector<i32> pid_, pix_, path_start_, path_nodes_;
    std::vector<std::vector<i32>> part_prefix_;  // per part, ranks prefix sums
    std::vector<std::vector<i32>> part_ranks_;   // per part, sorted rank list
};

} // namespace dynstr

#endif
