#include "dynstr/internal_queries.hpp"

#include <algorithm>

namespace dynstr {

PiecewiseLcp make_power_lcp(Seq P, Seq X, Seq Y) {
    PiecewiseLcp f;
    f.p = P.len;
    f.xlen = X.len;
    f.ylen = Y.len;
    auto inf_lcp = [&](const Seq& w) -> i64 {
        // lcp(P^inf, W) from lcp(P, W) and the self-overlap lcp(W, W[p+1..])
        i64 l1 = seq_lcp(P, w);
        if (l1 < std::min(f.p, w.len)) return l1;
        if (w.len <= f.p) return w.len;
        i64 e = seq_lcp(w, w.drop(f.p));
        return std::min(f.p + e, w.len);
    };
    f.a = inf_lcp(X);
    f.b = inf_lcp(Y);
    if (f.b >= f.a && (f.b - f.a) % f.p == 0) f.tail = seq_lcp(X.drop(f.a), Y.drop(f.b));
    return f;
}

InternalQueries::InternalQueries(const Gst* g, PartMap parts) : g_(g), parts_(parts) {
    std::vector<i32> seq(g_->n() + 1, 0);
    for (i32 r = 0; r <= g_->n(); ++r) seq[r] = g_->sarr().sa(r);
    wt_ = WaveletTree(seq);
}

ArithProg InternalQueries::psq_band(Ref y, Ref z, i64 lo, i64 hi) const {
    hi = std::min({hi, static_cast<i64>(y.len), static_cast<i64>(z.len)});
    lo = std::max<i64>(lo, 1);
    if (lo > hi) return {};
    require(hi <= 2 * lo - 1, "psq_band: band wider than [d, 2d)");
    i64 m = hi;                        // window length at the end of Z
    i64 w0 = z.pos + z.len - m;        // global window start
    i64 wend = z.pos + z.len - 1;

    auto valid_lambda = [&](i64 lambda) -> bool {
        i64 o = wend - lambda + 1;
        i64 ext = seq_lcp(Seq::of_ref(*g_, y.take(static_cast<i32>(std::min<i64>(y.len, lambda)))),
                          Seq::of_ref(*g_, Ref{static_cast<i32>(o), static_cast<i32>(lambda)}));
        return ext == lambda;
    };

    SaRange R = g_->range_of(y.take(static_cast<i32>(lo)));
    auto o1 = wt_.successor(R.lo, R.hi, static_cast<i32>(w0));
    if (!o1 || *o1 > w0 + m - lo) return {};
    auto olast = wt_.predecessor(R.lo, R.hi, static_cast<i32>(w0 + m - lo));
    if (*olast == *o1) {
        i64 lambda = wend - *o1 + 1;
        if (valid_lambda(lambda)) return ArithProg{lambda, 1, 1};
        return {};
    }
    auto o2 = wt_.successor(R.lo, R.hi, *o1 + 1);
    i64 step = *o2 - *o1;
    i64 cnt = (*olast - *o1) / step + 1;
    if ((*olast - *o1) % step != 0 || cnt <= 4) {
        // tiny (or unexpectedly irregular) occurrence set: check each
        std::vector<i64> vals;
        i64 at = *o1;
        while (true) {
            i64 lambda = wend - at + 1;
            if (valid_lambda(lambda)) vals.push_back(lambda);
            auto nxt = wt_.successor(R.lo, R.hi, static_cast<i32>(at) + 1);
            if (!nxt || *nxt > w0 + m - lo) break;
            at = *nxt;
        }
        if (vals.empty()) return {};
        std::reverse(vals.begin(), vals.end()); // ascending lengths
        i64 diff = vals.size() >= 2 ? vals[1] - vals[0] : 1;
        return ArithProg{vals[0], diff, static_cast<i64>(vals.size())};
    }

    // periodic case: occurrences at o1, o1+step, ..., olast; the window
    // suffix at o equals B^w X with X the suffix at olast and B the leading
    // step-block, w = (olast-o)/step
    Seq X = Seq::of_ref(*g_, Ref{static_cast<i32>(*olast), static_cast<i32>(wend - *olast + 1)});
    Seq B = Seq::of_ref(*g_, Ref{static_cast<i32>(*o1), static_cast<i32>(step)});
    Seq Yfull = Seq::of_ref(*g_, y);
    PiecewiseLcp f = make_power_lcp(B, X, Yfull);
    i64 xlen = wend - *olast + 1;
    // valid(w) <=> f(w) == w*step + xlen, i.e. P^w X is a full prefix of Y
    i64 wlo = -1, whi = -2;
    if (f.a == xlen) {
        wlo = 0;
        whi = std::min(cnt - 1, (f.b - f.a) / step);
        // respect the |Y| cap
        whi = std::min(whi, (f.ylen - xlen) / step);
    } else if (f.b >= f.a && (f.b - f.a) % step == 0) {
        i64 ws = (f.b - f.a) / step;
        if (ws >= 0 && ws <= cnt - 1 && f.eval(ws) == ws * step + xlen) { wlo = whi = ws; }
    }
    if (wlo > whi) return {};
    return ArithProg{xlen + wlo * step, step, whi - wlo + 1};
}

std::vector<ArithProg> InternalQueries::borders_progressions(Ref u) const {
    std::vector<ArithProg> out;
    if (u.len <= 1) return out;
    for (i64 lo = 1; lo < u.len; lo <<= 1) {
        i64 hi = std::min<i64>(2 * lo - 1, u.len - 1);
        out.push_back(psq_band(u, u, lo, hi));
        if (hi == u.len - 1) break;
    }
    return out;
}

i64 InternalQueries::shortest_period(Ref u) const {
    require(u.len >= 1, "shortest_period: empty substring");
    if (u.len == 1) return 1;
    i64 lo = 1;
    std::vector<i64> los;
    for (; lo < u.len; lo <<= 1) los.push_back(lo);
    for (auto it = los.rbegin(); it != los.rend(); ++it) {
        i64 hi = std::min<i64>(2 * *it - 1, u.len - 1);
        ArithProg ap = psq_band(u, u, *it, hi);
        if (!ap.empty()) return u.len - ap.last();
    }
    return u.len;
}

// ---------------------------------------------------------------------------
// prefix/suffix LCS grids
// ---------------------------------------------------------------------------

void InternalQueries::build_prefsuf() const {
    if (ss_fwd_) return;
    auto build = [&](i32 pa, i32 pb, std::unique_ptr<PointGridRmq>& ss,
                     std::unique_ptr<PointGridRmq>& r1, std::unique_ptr<PointGridRmq>& r2) {
        const PartedText& tx = g_->text();
        i64 beg_a = tx.global(pa, 1), end_a = tx.global(pa, std::max(1, tx.part_len(pa)));
        i64 beg_b = tx.global(pb, 1), end_b = tx.global(pb, std::max(1, tx.part_len(pb)));
        std::vector<GridPoint> pss, pr1, pr2;
        for (i32 v = 1; v < g_->node_count(); ++v) {
            if (g_->depth(v) == 0) continue;
            i32 rlo = g_->range_lo(v), rhi = g_->range_hi(v);
            auto mina = wt_.successor(rlo, rhi, static_cast<i32>(beg_a));
            if (!mina || *mina > end_a) continue;
            auto minb = wt_.successor(rlo, rhi, static_cast<i32>(beg_b));
            if (!minb || *minb > end_b) continue;
            auto maxa = wt_.predecessor(rlo, rhi, static_cast<i32>(end_a));
            auto maxb = wt_.predecessor(rlo, rhi, static_cast<i32>(end_b));
            i64 d = g_->depth(v);
            i64 min_a = tx.local(pa, *mina), max_a = tx.local(pa, *maxa);
            i64 max_b = tx.local(pb, *maxb);
            pss.push_back(GridPoint{max_a, max_b, d, v});
            pr1.push_back(GridPoint{min_a + d - 1, max_b, d, v});
            pr2.push_back(GridPoint{min_a + d - 1, max_b, min_a, v});
        }
        ss = std::make_unique<PointGridRmq>(std::move(pss));
        r1 = std::make_unique<PointGridRmq>(std::move(pr1));
        r2 = std::make_unique<PointGridRmq>(std::move(pr2));
    };
    build(parts_.s, parts_.t, ss_fwd_, r1_fwd_, r2_fwd_);
    build(parts_.sr, parts_.tr, ss_rev_, r1_rev_, r2_rev_);
}

namespace {

// core computation on one pair of grids: LCS(S_(a), T_(b)) (both suffixes)
LcsAnswer suffix_suffix(const PointGridRmq& ss, i64 a, i64 b) {
    auto hit = ss.max_in(a, kPosInf, b, kPosInf);
    if (!hit || hit->w <= 0) return {};
    return LcsAnswer{hit->w, hit->x, hit->y};
}

// LCS(S^(a), T_(b)) via the r1/r2 grids
LcsAnswer prefix_suffix(const PointGridRmq& r1, const PointGridRmq& r2, i64 a, i64 b) {
    LcsAnswer best;
    auto h1 = r1.max_in(kNegInf, a - 1, b, kPosInf);
    if (h1 && h1->w > 0) best = LcsAnswer{h1->w, h1->x - h1->w + 1, h1->y};
    auto h2 = r2.min_in(a, kPosInf, b, kPosInf);
    if (h2 && h2->w <= a) {
        i64 len = a - h2->w + 1;
        if (len > best.len) best = LcsAnswer{len, h2->w, h2->y};
    }
    return best;
}

} // namespace

LcsAnswer InternalQueries::lcs_prefsuf(Side side_s, i64 i, Side side_t, i64 j) const {
    build_prefsuf();
    i64 ns = g_->text().part_len(parts_.s), nt = g_->text().part_len(parts_.t);
    if (side_s == Side::Prefix) require(i >= 0 && i <= ns, "lcs_prefsuf: cut outside [0,n]");
    else require(i >= 1 && i <= ns + 1, "lcs_prefsuf: cut outside range");
    if (side_t == Side::Prefix) require(j >= 0 && j <= nt, "lcs_prefsuf: cut outside [0,n]");
    else require(j >= 1 && j <= nt + 1, "lcs_prefsuf: cut outside range");

    bool s_empty = side_s == Side::Prefix ? i == 0 : i == ns + 1;
    bool t_empty = side_t == Side::Prefix ? j == 0 : j == nt + 1;
    if (s_empty || t_empty) return {};

    if (side_s == Side::Suffix && side_t == Side::Suffix) {
        return suffix_suffix(*ss_fwd_, i, j);
    }
    if (side_s == Side::Prefix && side_t == Side::Suffix) {
        return prefix_suffix(*r1_fwd_, *r2_fwd_, i, j);
    }
    if (side_s == Side::Suffix && side_t == Side::Prefix) {
        // reverse both: prefix of S^R (cut ns-i+1) vs suffix of T^R (cut nt-j+1)
        LcsAnswer rev = prefix_suffix(*r1_rev_, *r2_rev_, ns - i + 1, nt - j + 1);
        if (rev.len == 0) return rev;
        return LcsAnswer{rev.len, ns - (rev.pos_s + rev.len - 1) + 1,
                         nt - (rev.pos_t + rev.len - 1) + 1};
    }
    // prefix, prefix
    LcsAnswer rev = suffix_suffix(*ss_rev_, ns - i + 1, nt - j + 1);
    if (rev.len == 0) return rev;
    return LcsAnswer{rev.len, ns - (rev.pos_s + rev.len - 1) + 1,
                     nt - (rev.pos_t + rev.len - 1) + 1};
}

// ---------------------------------------------------------------------------
// substring vs whole T
// ---------------------------------------------------------------------------

void InternalQueries::build_substring_vs_t() const {
    if (svt_) return;
    auto out = std::make_unique<SubVsT>();
    i32 ns = g_->text().part_len(parts_.s);
    i32 nodes = g_->node_count();
    std::vector<i32> ell(nodes, 0), wit(nodes, 0);
    std::vector<i32> order(nodes);
    for (i32 v = 0; v < nodes; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](i32 x, i32 y) { return g_->depth(x) < g_->depth(y); });
    for (i32 v : order) {
        if (v == 0) continue;
        if (g_->occ_count(v, parts_.t) > 0) {
            ell[v] = g_->depth(v);
            wit[v] = g_->any_occurrence_local(SaRange{g_->range_lo(v), g_->range_hi(v)}, parts_.t);
        } else {
            ell[v] = ell[g_->parent(v)];
            wit[v] = wit[g_->parent(v)];
        }
    }
    out->b.assign(ns + 1, 0);
    out->bw.assign(ns + 1, 0);
    for (i32 i = 1; i <= ns; ++i) {
        i32 leaf = g_->leaf_node(g_->text().global(parts_.s, i));
        out->b[i] = std::min(ell[leaf], ns - i + 1);
        out->bw[i] = wit[leaf];
    }
    // sparse argmax tables over b and b[i]+i
    int levels = ns >= 1 ? floor_log2(ns) + 1 : 1;
    out->mx.assign(levels, std::vector<i32>(ns + 1));
    out->mxk.assign(levels, std::vector<i32>(ns + 1));
    for (i32 i = 1; i <= ns; ++i) out->mx[0][i] = out->mxk[0][i] = i;
    for (int k = 1; k < levels; ++k) {
        for (i32 i = 1; i + (1 << k) - 1 <= ns; ++i) {
            i32 x = out->mx[k - 1][i], y = out->mx[k - 1][i + (1 << (k - 1))];
            out->mx[k][i] = out->b[x] >= out->b[y] ? x : y;
            x = out->mxk[k - 1][i]; y = out->mxk[k - 1][i + (1 << (k - 1))];
            out->mxk[k][i] = out->b[x] + x >= out->b[y] + y ? x : y;
        }
    }
    svt_ = std::move(out);
}

LcsAnswer InternalQueries::lcs_substring_vs_T(i64 a, i64 b) const {
    i32 ns = g_->text().part_len(parts_.s);
    require(1 <= a && a <= b && b <= ns, "lcs_substring_vs_T: invalid interval");
    build_substring_vs_t();
    const SubVsT& s = *svt_;
    auto argmax_b = [&](i64 l, i64 r) {
        int k = floor_log2(r - l + 1);
        i32 x = s.mx[k][l], y = s.mx[k][r - (1 << k) + 1];
        return s.b[x] >= s.b[y] ? x : y;
    };
    auto max_bk = [&](i64 l, i64 r) {
        int k = floor_log2(r - l + 1);
        i32 x = s.mxk[k][l], y = s.mxk[k][r - (1 << k) + 1];
        return s.b[x] + x >= s.b[y] + y ? x : y;
    };
    // smallest k0 in [a,b] with B[k0]+k0 >= b+1 (b+1 if none)
    i64 k0 = b + 1;
    if (s.b[max_bk(a, b)] + max_bk(a, b) >= b + 1) {
        i64 lo = a, hi = b;
        while (lo < hi) {
            i64 mid = (lo + hi) / 2;
            i32 am = max_bk(lo, mid);
            if (s.b[am] + am >= b + 1) hi = mid; else lo = mid + 1;
        }
        k0 = lo;
    }
    LcsAnswer best;
    if (k0 > a) {
        i32 k = argmax_b(a, k0 - 1);
        if (s.b[k] > 0) best = LcsAnswer{s.b[k], k, s.bw[k]};
    }
    if (k0 <= b) {
        i64 len = b - k0 + 1;
        if (len > best.len) best = LcsAnswer{len, k0, s.bw[k0]};
    }
    return best;
}

} // namespace dynstr
