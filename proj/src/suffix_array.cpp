#include "dynstr/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace dynstr {

MinSparseTable::MinSparseTable(const std::vector<i32>& a) {
    i32 n = static_cast<i32>(a.size());
    if (n == 0) return;
    int levels = floor_log2(n) + 1;
    level_.resize(levels);
    level_[0] = a;
    for (int k = 1; k < levels; ++k) {
        i32 len = n - (1 << k) + 1;
        level_[k].resize(len);
        for (i32 i = 0; i < len; ++i)
            level_[k][i] = std::min(level_[k - 1][i], level_[k - 1][i + (1 << (k - 1))]);
    }
}

SuffixArray::SuffixArray(const std::vector<i32>& text) {
    n_ = static_cast<i32>(text.size()) - 1; // text is 1-based
    i32 m = n_ + 1;                         // include the empty suffix at position n+1

    // prefix-doubling with counting sort; rank of position n+1 is smallest
    std::vector<i32> r(m + 1), tmp(m + 1), cnt, order(m);
    std::iota(order.begin(), order.end(), 1);

    // initial ranks by character (position n+1 gets 0)
    {
        i32 maxc = 0;
        for (i32 i = 1; i <= n_; ++i) maxc = std::max(maxc, text[i]);
        i32 next_rank = 1;
        std::vector<i32> chr_rank(maxc + 1, 0);
        std::vector<bool> seen(maxc + 1, false);
        for (i32 i = 1; i <= n_; ++i) seen[text[i]] = true;
        for (i32 c = 0; c <= maxc; ++c)
            if (seen[c]) chr_rank[c] = next_rank++;
        for (i32 i = 1; i <= n_; ++i) r[i] = chr_rank[text[i]];
        r[n_ + 1] = 0; // empty suffix sorts first
    }

    std::vector<i32> sa(m), sa2(m);
    // sort by initial rank (stable counting sort)
    {
        i32 maxr = 0;
        for (i32 i = 1; i <= m; ++i) maxr = std::max(maxr, r[i]);
        cnt.assign(maxr + 2, 0);
        for (i32 i = 1; i <= m; ++i) cnt[r[i] + 1]++;
        for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (i32 i = 1; i <= m; ++i) sa[cnt[r[i]]++] = i;
    }

    for (i32 k = 1;; k <<= 1) {
        // sa currently sorted by (r[i], r[i+k/2...]) pairs of width k; refine to width 2k
        // second key: r[i+k] (0 when out of range)
        auto key2 = [&](i32 i) { return i + k <= m ? r[i + k] : 0; };
        // counting sort by key2, then stable by key1
        i32 maxr = 0;
        for (i32 i = 1; i <= m; ++i) maxr = std::max(maxr, r[i]);
        cnt.assign(maxr + 2, 0);
        for (i32 i = 1; i <= m; ++i) cnt[key2(i) + 1]++;
        for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (i32 idx = 0; idx < m; ++idx) sa2[cnt[key2(sa[idx])]++] = sa[idx];
        cnt.assign(maxr + 2, 0);
        for (i32 i = 1; i <= m; ++i) cnt[r[i] + 1]++;
        for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
        for (i32 idx = 0; idx < m; ++idx) sa[cnt[r[sa2[idx]]]++] = sa2[idx];

        // recompute ranks
        tmp[sa[0]] = 1;
        bool all_distinct = true;
        for (i32 idx = 1; idx < m; ++idx) {
            i32 a = sa[idx - 1], b = sa[idx];
            bool eq = r[a] == r[b] && key2(a) == key2(b);
            tmp[b] = tmp[a] + (eq ? 0 : 1);
            all_distinct &= !eq;
        }
        for (i32 i = 1; i <= m; ++i) r[i] = tmp[i];
        if (all_distinct || k > m) break;
    }

    sa_.assign(m, 0);
    isa_.assign(m + 1, 0);
    for (i32 idx = 0; idx < m; ++idx) {
        sa_[idx] = sa[idx];
        isa_[sa[idx]] = idx;
    }

    // Kasai over the non-empty suffixes; lcp_[r] = lcp(sa_[r-1], sa_[r])
    lcp_.assign(m, 0);
    i32 h = 0;
    for (i32 i = 1; i <= n_; ++i) {
        i32 ri = isa_[i];
        if (ri > 0) {
            i32 j = sa_[ri - 1];
            if (h > 0) --h;
            while (i + h <= n_ && j + h <= n_ && text[i + h] == text[j + h]) ++h;
            lcp_[ri] = h;
        } else {
            h = 0;
        }
    }
    rmq_ = MinSparseTable(lcp_);
}

} // namespace dynstr
