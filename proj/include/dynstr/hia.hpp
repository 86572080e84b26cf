#ifndef DYNSTR_HIA_HPP
#define DYNSTR_HIA_HPP

#include <mutex>
#include <unordered_map>

#include "dynstr/internal_queries.hpp"
#include "dynstr/lca.hpp"

namespace dynstr {

// Answer to a (special/extended) HIA query: explicit ancestors u1 in T(X^R)
// and u2 in T(X), a leaf label inducing both, and the maximal total weight.
struct HiaAnswer {
    i32 u1 = -1, u2 = -1;
    i32 leaf = 0; // inducing label i in [1, |X|+1]
    i64 d1 = 0, d2 = 0;
    i64 total = 0;
};

// local interval of X; empty when hi < lo
struct Loc {
    i64 lo = 1, hi = 0;
    i64 len() const { return hi - lo + 1; }
};

struct ThreeSsResult {
    i64 total = 0;
    i64 xlen = 0;
    i64 wpos = 0; // start of XY inside X (local), 0 when total == 0
};

// Heaviest-induced-ancestor machinery over the suffix trees of X^R and X.
// Leaf i of t1 is the prefix X[1..i-1] (reversed), leaf i of t2 the suffix
// X[i..]. Weighted-point collections are bucketed per heavy-path pair and
// materialized on first use.
class HiaIndex {
public:
    // `part` indexes X inside the session text of `iq`; `rev_part` its reversal
    HiaIndex(const InternalQueries* iq, i32 part, i32 rev_part);

    const Gst& t1() const { return t1_; }
    const Gst& t2() const { return t2_; }
    i32 n() const { return n_; }

    i64 weight1(i32 v) const { return t1_.is_leaf(v) ? t1_.depth(v) - 1 : t1_.depth(v); }
    i64 weight2(i32 v) const { return t2_.is_leaf(v) ? t2_.depth(v) - 1 : t2_.depth(v); }

    i32 leaf1(i32 label) const { return leaf1_[label]; }
    i32 leaf2(i32 label) const { return leaf2_[label]; }

    // HIA query over explicit nodes; fixed: 0 none, 1 force u1=v1, 2 force u2=v2
    std::optional<HiaAnswer> hia_query(i32 v1, i32 v2, int fixed = 0) const {
        return extended_hia_query(v1, v2, 1, n_, fixed);
    }

    // window-constrained variant: the induced occurrence must fit in X[a..b]
    std::optional<HiaAnswer> extended_hia_query(i32 v1, i32 v2, i64 a, i64 b, int fixed = 0) const;

    // longest XY with X a suffix of X[u], Y a prefix of X[v], XY inside X[w]
    ThreeSsResult three_substrings_lcs(Loc u, Loc v, Loc w) const;

private:
    struct BPoint {
        i32 i, d1, d2;
    };
    struct BNode {
        i32 mn[3], mx[3];  // d1, d2, i
        i32 max_sum;
        i32 max_imd1, min_ipd2;
    };
    struct Bucket {
        std::vector<BPoint> pts;
        std::vector<BNode> agg;
        void build(i32 lo, i32 hi, int axis);
    };
    struct BQ {
        i64 d1_lo = kNegInf, d1_hi = kPosInf;
        i64 d2_lo = kNegInf, d2_hi = kPosInf;
        bool left_uses_d1 = true;
        i64 left_bound = kNegInf; // i - (left_uses_d1 ? d1 : 0) >= left_bound
        bool right_uses_d2 = true;
        i64 right_bound = kPosInf; // i + (right_uses_d2 ? d2 : 0) <= right_bound
        int objective = 0; // 0: d1+d2, 1: d2, 2: d1, 3: existence
    };

    const Bucket* bucket(i32 p1, i32 p2) const;
    static void bucket_query(const Bucket& b, i32 lo, i32 hi, const BQ& q, i32& best,
                             i64& best_obj);
    std::optional<BPoint> query_bucket(const Bucket& b, const BQ& q) const;
    std::optional<HiaAnswer> special_query(i32 e, i64 flen, i32 other, i64 a, i64 b,
                                           int side) const;
    std::optional<HiaAnswer> extended_core(i32 v1, i32 v2, i64 a, i64 b) const;
    // exact handling of optima whose ancestor depth is cut short by the
    // window rather than by the trees (the four point families cannot
    // represent those)
    void clamped_repair(i32 v1, i32 v2, i64 a, i64 b, int fixed,
                        std::optional<HiaAnswer>& best) const;
    static i32 ancestor_at_weight_leq(const Gst& t, i32 v, i64 bound);
    void slide_left(Loc u, Loc v, Loc w, ThreeSsResult& best) const;
    void slide_right(Loc u, Loc v, Loc w, ThreeSsResult& best) const;

    // node on path `pid` whose weight equals d (leaf/parent weight ties both
    // denote the same string)
    i32 node_at_weight(const Gst& t, i32 pid, i64 d) const;

    // explicit-part candidates accumulated into `best`
    void consider(std::optional<HiaAnswer>& best, const HiaAnswer& cand) const {
        if (!best || cand.total > best->total) best = cand;
    }

    const InternalQueries* iq_;
    i32 part_, rev_part_;
    i32 n_;
    Gst t1_, t2_;
    LcaTable lca1_, lca2_;
    std::vector<i32> leaf1_, leaf2_;
    std::vector<i32> label1_, label2_; // leaf node -> label
    mutable std::mutex mu_;
    mutable std::unordered_map<u64, std::unique_ptr<Bucket>> buckets_;
};

} // namespace dynstr

#endif
