#ifndef DYNSTR_INTERNAL_QUERIES_HPP
#define DYNSTR_INTERNAL_QUERIES_HPP

#include <memory>

#include "dynstr/ksub.hpp"
#include "dynstr/range_structures.hpp"
#include "dynstr/wavelet.hpp"

namespace dynstr {

// Arithmetic progression of lengths: first, first+diff, ...,
// first+(count-1)*diff.
struct ArithProg {
    i64 first = 0, diff = 0, count = 0;
    bool empty() const { return count == 0; }
    i64 last() const { return first + (count - 1) * diff; }
    i64 at(i64 i) const { return first + i * diff; }
};

// Closed form of f(w) = lcp(P^w X, Y) for integer w >= 0: piecewise linear
// with at most three pieces, capped by |P^w X| and |Y|.
struct PiecewiseLcp {
    i64 a = 0;     // lcp(P^inf, X)
    i64 b = 0;     // lcp(P^inf, Y)
    i64 p = 1;     // |P|
    i64 tail = 0;  // lcp(X[a+1..], Y[b+1..]) at the unique w with a+wp=b
    i64 xlen = 0, ylen = 0;

    i64 eval(i64 w) const {
        i64 awp = a + w * p;
        i64 raw;
        if (awp < b) raw = awp;
        else if (awp == b) raw = b + tail;
        else raw = b;
        raw = std::min(raw, w * p + xlen);
        raw = std::min(raw, ylen);
        return raw;
    }
};

// Builds the closed form with five LCE queries through seq_lcp (works over
// static slices and k-substrings alike).
PiecewiseLcp make_power_lcp(Seq P, Seq X, Seq Y);

struct LcsAnswer {
    i64 len = 0;
    i64 pos_s = 0, pos_t = 0; // 1-based local starts; 0 when len == 0
};

enum class Side { Prefix, Suffix };

// Which parts of the underlying PartedText play the roles of S, T and their
// reversals.
struct PartMap {
    i32 s = 0, t = 1, sr = 2, tr = 3;
};

// Internal (substring-parameterized) queries over the static pair (S, T).
class InternalQueries {
public:
    InternalQueries(const Gst* g, PartMap parts);

    const Gst& gst() const { return *g_; }
    const PartMap& parts() const { return parts_; }

    // --- periodicity kernel ---------------------------------------------
    // lengths L in [lo, hi] such that Y[1..L] = Z[|Z|-L+1..]; requires
    // hi <= 2*lo-1 so that the result is one arithmetic progression
    ArithProg psq_band(Ref y, Ref z, i64 lo, i64 hi) const;

    // Prefix-Suffix Query: lengths of prefixes of Y of length in [d, 2d)
    // that are suffixes of Z
    ArithProg prefix_suffix_query(Ref y, Ref z, i64 d) const {
        require(d >= 1, "prefix_suffix_query: d must be positive");
        return psq_band(y, z, d, 2 * d - 1);
    }

    // border lengths of u grouped in bands [2^r, 2^{ r+1}-1]
    std::vector<ArithProg> borders_progressions(Ref u) const;

    i64 shortest_period(Ref u) const;

    PiecewiseLcp lcp_power_prefix(Ref p, Ref x, Ref y) const {
        require(p.len >= 1, "lcp_power_prefix: empty P");
        return make_power_lcp(Seq::of_ref(*g_, p), Seq::of_ref(*g_, x), Seq::of_ref(*g_, y));
    }

    // --- special internal LCS queries -------------------------------------
    // LCS between a prefix/suffix of S (cut i) and a prefix/suffix of T
    // (cut j). A prefix cut i means S[1..i]; a suffix cut i means S[i..].
    LcsAnswer lcs_prefsuf(Side side_s, i64 i, Side side_t, i64 j) const;

    // LCS between S[a..b] and the whole T
    LcsAnswer lcs_substring_vs_T(i64 a, i64 b) const;

    // max prefix length of Y[1..cap] matching starting at global pos (helper)
    i64 lce_ref(Ref a, Ref b) const { return g_->lce_ref(a, b); }

    // global position of local position i of part `which`
    Ref s_suffix(i64 i) const { return part_suffix(parts_.s, i); }
    Ref t_suffix(i64 i) const { return part_suffix(parts_.t, i); }
    Ref part_suffix(i32 part, i64 i) const {
        i32 n = g_->text().part_len(part);
        return Ref{g_->text().global(part, static_cast<i32>(i)), static_cast<i32>(n - i + 1)};
    }
    // reversed-part ref covering the reversal of part-local [i..j]
    Ref rev_ref(i32 part, i32 rev_part, i64 i, i64 j) const {
        i32 n = g_->text().part_len(part);
        return Ref{g_->text().global(rev_part, static_cast<i32>(n - j + 1)),
                   static_cast<i32>(j - i + 1)};
    }

    const WaveletTree& rank_positions() const { return wt_; }

private:
    void build_prefsuf() const;
    void build_substring_vs_t() const;

    const Gst* g_;
    PartMap parts_;
    WaveletTree wt_; // rank -> suffix start position, for range successor

    // lazily built structures
    mutable std::unique_ptr<PointGridRmq> ss_fwd_, r1_fwd_, r2_fwd_;
    mutable std::unique_ptr<PointGridRmq> ss_rev_, r1_rev_, r2_rev_;
    struct SubVsT {
        std::vector<i32> b, bw;          // B[i], T-witness
        std::vector<std::vector<i32>> mx; // sparse max over B (argmax by index)
        std::vector<std::vector<i32>> mxk; // sparse max over B[i]+i
    };
    mutable std::unique_ptr<SubVsT> svt_;
};

} // namespace dynstr

#endif
