#ifndef DYNSTR_SUFFIX_ARRAY_HPP
#define DYNSTR_SUFFIX_ARRAY_HPP

#include "dynstr/common.hpp"

namespace dynstr {

// Sparse table for range-minimum over a static i32 array.
class MinSparseTable {
public:
    MinSparseTable() = default;
    explicit MinSparseTable(const std::vector<i32>& a);

    // min over a[l..r], inclusive 0-based; l <= r required
    i32 min(i32 l, i32 r) const {
        int k = floor_log2(r - l + 1);
        const i32* row = level_[k].data();
        i32 x = row[l];
        i32 y = row[r - (1 << k) + 1];
        return x < y ? x : y;
    }

private:
    std::vector<std::vector<i32>> level_;
};

// Suffix array over an i32 text (values >= 1), with inverse array, Kasai LCP
// and an RMQ table for O(1) longest-common-extension queries.
//
// Ranks are 0-based over n+1 entries: rank 0 is the empty suffix (position
// n+1), matching the convention that the SA explicitly lists the empty
// suffix.
class SuffixArray {
public:
    SuffixArray() = default;
    explicit SuffixArray(const std::vector<i32>& text_1based);

    i32 n() const { return n_; }

    // rank r in [0, n] -> suffix start (n+1 for the empty suffix)
    i32 sa(i32 r) const { return sa_[r]; }
    // position p in [1, n+1] -> rank in [0, n]
    i32 rank(i32 p) const { return isa_[p]; }

    // lcp of the suffixes at ranks r-1 and r (r >= 1)
    i32 lcp_at(i32 r) const { return lcp_[r]; }

    // longest common prefix of the suffixes starting at positions p and q
    i32 lce(i32 p, i32 q) const {
        if (p == q) return n_ - p + 1;
        i32 rp = isa_[p], rq = isa_[q];
        if (rp > rq) std::swap(rp, rq);
        return rmq_.min(rp + 1, rq);
    }

    // lexicographic comparison of suffixes by rank
    bool suffix_less(i32 p, i32 q) const { return isa_[p] < isa_[q]; }

private:
    i32 n_ = 0;
    std::vector<i32> sa_, isa_, lcp_;
    MinSparseTable rmq_;
};

} // namespace dynstr

#endif
