#ifndef DYNSTR_WAVELET_HPP
#define DYNSTR_WAVELET_HPP

#include <optional>

#include "dynstr/common.hpp"

namespace dynstr {

// Wavelet tree over a static integer sequence, used for range
// successor/predecessor: smallest (largest) value in a window of the
// sequence that is >= lo (<= hi). O(log U) per query.
class WaveletTree {
public:
    WaveletTree() = default;
    explicit WaveletTree(const std::vector<i32>& seq);

    i32 size() const { return n_; }

    // number of entries in seq[l..r] (0-based, inclusive) with value < x
    i32 count_less(i32 l, i32 r, i64 x) const;
    // k-th smallest value in seq[l..r], k >= 1
    i32 quantile(i32 l, i32 r, i32 k) const;

    // smallest value >= lo in the window, or nullopt
    std::optional<i32> successor(i32 l, i32 r, i32 lo) const {
        if (l > r) return std::nullopt;
        i32 below = count_less(l, r, lo);
        i32 total = r - l + 1;
        if (below == total) return std::nullopt;
        return quantile(l, r, below + 1);
    }

    // largest value <= hi in the window, or nullopt
    std::optional<i32> predecessor(i32 l, i32 r, i32 hi) const {
        if (l > r) return std::nullopt;
        i32 below = count_less(l, r, static_cast<i64>(hi) + 1);
        if (below == 0) return std::nullopt;
        return quantile(l, r, below);
    }

    i32 count_in(i32 l, i32 r, i32 lo, i32 hi) const {
        if (l > r || lo > hi) return 0;
        return count_less(l, r, static_cast<i64>(hi) + 1) - count_less(l, r, lo);
    }

private:
    struct Level {
        std::vector<u64> bits;
        std::vector<i32> rank_blocks; // ranks of set bits before each 64-bit word
        i32 zeros = 0;
        i32 rank1(i32 i) const { // set bits in [0, i)
            return rank_blocks[i >> 6] +
                   __builtin_popcountll(bits[i >> 6] & ((i & 63) ? (~0ULL >> (64 - (i & 63))) : 0));
        }
    };

    i32 n_ = 0;
    i32 max_val_ = 0;
    int height_ = 0;
    std::vector<Level> levels_;
};

} // namespace dynstr

#endif
