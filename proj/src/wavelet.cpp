#include "dynstr/wavelet.hpp"

namespace dynstr {

WaveletTree::WaveletTree(const std::vector<i32>& seq) {
    n_ = static_cast<i32>(seq.size());
    max_val_ = 0;
    for (i32 v : seq) {
        require(v >= 0, "wavelet: negative value");
        max_val_ = std::max(max_val_, v);
    }
    height_ = 1;
    while ((1LL << height_) <= max_val_) ++height_;
    levels_.resize(height_);

    std::vector<i32> cur = seq, nxt(seq.size());
    for (int lev = height_ - 1; lev >= 0; --lev) {
        Level& L = levels_[height_ - 1 - lev];
        i32 words = (n_ >> 6) + 1;
        L.bits.assign(words, 0);
        L.rank_blocks.assign(words + 1, 0);
        i32 zeros = 0;
        for (i32 i = 0; i < n_; ++i) {
            if ((cur[i] >> lev) & 1)
                L.bits[i >> 6] |= 1ULL << (i & 63);
            else
                ++zeros;
        }
        for (i32 w = 0; w < words; ++w)
            L.rank_blocks[w + 1] = L.rank_blocks[w] + __builtin_popcountll(L.bits[w]);
        L.zeros = zeros;
        i32 z = 0, o = zeros;
        for (i32 i = 0; i < n_; ++i) {
            if ((cur[i] >> lev) & 1) nxt[o++] = cur[i];
            else nxt[z++] = cur[i];
        }
        std::swap(cur, nxt);
    }
}

i32 WaveletTree::count_less(i32 l, i32 r, i64 x) const {
    if (l > r || x <= 0) return 0;
    if (x > max_val_) return r - l + 1;
    ++r; // half-open
    i32 acc = 0;
    for (int d = 0; d < height_; ++d) {
        const Level& L = levels_[d];
        int lev = height_ - 1 - d;
        i32 l1 = L.rank1(l), r1 = L.rank1(r);
        if ((x >> lev) & 1) {
            acc += (r - l) - (r1 - l1); // all zero-branch values are < x here
            l = L.zeros + l1;
            r = L.zeros + r1;
        } else {
            l -= l1;
            r -= r1;
        }
        if (l >= r) break;
    }
    return acc;
}

i32 WaveletTree::quantile(i32 l, i32 r, i32 k) const {
    ++r;
    i32 val = 0;
    for (int d = 0; d < height_; ++d) {
        const Level& L = levels_[d];
        i32 l1 = L.rank1(l), r1 = L.rank1(r);
        i32 zeros_here = (r - l) - (r1 - l1);
        if (k <= zeros_here) {
            l -= l1;
            r -= r1;
        } else {
            k -= zeros_here;
            val |= 1 << (height_ - 1 - d);
            l = L.zeros + l1;
            r = L.zeros + r1;
        }
    }
    return val;
}

} // namespace dynstr
