#include "dynstr/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace dynstr::oracle {

namespace {
constexpr i64 kGuard = 2000;
void guard(size_t n) { require(static_cast<i64>(n) <= kGuard, "oracle: input too large"); }
} // namespace

LcsWitness naive_lcs(const std::string& s, const std::string& t) {
    guard(s.size());
    guard(t.size());
    i64 n = s.size(), m = t.size();
    LcsWitness best;
    std::vector<i64> prev(m + 1, 0), cur(m + 1, 0);
    for (i64 i = 1; i <= n; ++i) {
        for (i64 j = 1; j <= m; ++j) {
            cur[j] = s[i - 1] == t[j - 1] ? prev[j - 1] + 1 : 0;
            if (cur[j] > best.len) best = LcsWitness{cur[j], i - cur[j] + 1, j - cur[j] + 1};
        }
        std::swap(prev, cur);
    }
    return best;
}

RepeatWitness naive_repeat(const std::string& s) {
    guard(s.size());
    i64 n = s.size();
    RepeatWitness best;
    std::vector<i64> prev(n + 1, 0), cur(n + 1, 0);
    for (i64 i = 1; i <= n; ++i) {
        for (i64 j = 1; j <= n; ++j) {
            if (i == j) { cur[j] = 0; continue; }
            cur[j] = s[i - 1] == s[j - 1] ? prev[j - 1] + 1 : 0;
            // occurrences starting at i-l+1 and j-l+1 may overlap; only the
            // start positions must differ, and i != j along the diagonal
            // keeps them distinct
            i64 l = cur[j];
            if (l > best.len) best = RepeatWitness{l, i - l + 1, j - l + 1};
        }
        std::swap(prev, cur);
    }
    return best;
}

PalWitness naive_lspal(const std::string& s) {
    guard(s.size());
    i64 n = s.size();
    PalWitness best;
    if (n == 0) return best;
    for (i64 c = 0; c < n; ++c) {
        i64 l = c, r = c;
        while (l >= 0 && r < n && s[l] == s[r]) { --l; ++r; }
        if (r - l - 1 > best.len) best = PalWitness{r - l - 1, l + 2};
        l = c; r = c + 1;
        while (l >= 0 && r < n && s[l] == s[r]) { --l; ++r; }
        if (r - l - 1 > best.len) best = PalWitness{r - l - 1, l + 2};
    }
    return best;
}

bool naive_is_lyndon(const std::string& s) {
    if (s.empty()) return false;
    for (size_t j = 1; j < s.size(); ++j)
        if (s.compare(s.substr(j)) >= 0) return false;
    return true;
}

std::vector<std::string> naive_lf(const std::string& s) {
    guard(s.size());
    // Duval's algorithm, written out directly
    std::vector<std::string> out;
    i64 n = s.size(), i = 0;
    while (i < n) {
        i64 j = i + 1, k = i;
        while (j < n && s[k] <= s[j]) {
            if (s[k] < s[j]) k = i; else ++k;
            ++j;
        }
        while (i <= k) {
            out.push_back(s.substr(i, j - k));
            i += j - k;
        }
    }
    return out;
}

ThreeSplit naive_three_substrings(const std::string& u, const std::string& v,
                                  const std::string& w) {
    guard(u.size());
    guard(v.size());
    guard(w.size());
    i64 nu = u.size(), nv = v.size(), nw = w.size();
    // xs[t]: longest common suffix of w[0..t-1] and u; ys[t]: longest common
    // prefix of w[t-1..] and v
    std::vector<i64> xs(nw + 2, 0), ys(nw + 2, 0);
    {
        std::vector<i64> prev(nu + 1, 0), cur(nu + 1, 0);
        for (i64 t = 1; t <= nw; ++t) {
            i64 rowmax = 0;
            for (i64 a = 1; a <= nu; ++a) {
                cur[a] = w[t - 1] == u[a - 1] ? prev[a - 1] + 1 : 0;
                if (a == nu) rowmax = cur[a];
            }
            xs[t] = rowmax;
            std::swap(prev, cur);
        }
    }
    for (i64 t = 1; t <= nw; ++t) {
        i64 l = 0;
        while (t - 1 + l < nw && l < nv && w[t - 1 + l] == v[l]) ++l;
        ys[t] = l;
    }
    ys[nw + 1] = 0;
    ThreeSplit best;
    for (i64 t = 0; t <= nw; ++t) {
        // split between w[t] and w[t+1]: X ends at t, Y starts at t+1
        i64 x = std::min(xs[t], t);
        i64 y = t < nw ? ys[t + 1] : 0;
        if (x + y > best.total) best = ThreeSplit{x + y, x, t - x + 1};
    }
    return best;
}

i64 naive_max_pair_lcp(const std::vector<std::pair<std::string, std::string>>& P,
                       const std::vector<std::pair<std::string, std::string>>& Q) {
    auto lcp = [](const std::string& a, const std::string& b) {
        size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return static_cast<i64>(k);
    };
    i64 best = INT64_MIN / 4;
    for (auto& p : P)
        for (auto& q : Q)
            best = std::max(best, lcp(p.first, q.first) + lcp(p.second, q.second));
    return best;
}

std::vector<i64> naive_borders(const std::string& u) {
    guard(u.size());
    std::vector<i64> out;
    i64 n = u.size();
    for (i64 l = 1; l < n; ++l)
        if (u.compare(0, l, u, n - l, l) == 0) out.push_back(l);
    return out;
}

i64 naive_period(const std::string& u) {
    require(!u.empty(), "naive_period: empty string");
    guard(u.size());
    i64 n = u.size();
    for (i64 p = 1; p < n; ++p) {
        bool ok = true;
        for (i64 i = 0; i + p < n; ++i)
            if (u[i] != u[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return n;
}

i64 naive_common_count(const std::string& s, const std::string& t, i64 len) {
    if (len == 0) return 1;
    std::unordered_set<std::string> a, common;
    for (i64 i = 0; i + len <= static_cast<i64>(s.size()); ++i) a.insert(s.substr(i, len));
    for (i64 i = 0; i + len <= static_cast<i64>(t.size()); ++i) {
        auto sub = t.substr(i, len);
        if (a.count(sub)) common.insert(sub);
    }
    return static_cast<i64>(common.size());
}

i64 naive_multi_count(const std::string& s, i64 len, i64 times) {
    if (len == 0) return 1;
    std::unordered_map<std::string, i64> cnt;
    for (i64 i = 0; i + len <= static_cast<i64>(s.size()); ++i) cnt[s.substr(i, len)]++;
    i64 out = 0;
    for (auto& [k, v] : cnt)
        if (v >= times) ++out;
    return out;
}

} // namespace dynstr::oracle
