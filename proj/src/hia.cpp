#include "dynstr/hia.hpp"

#include <algorithm>

namespace dynstr {

HiaIndex::HiaIndex(const InternalQueries* iq, i32 part, i32 rev_part)
    : iq_(iq), part_(part), rev_part_(rev_part) {
    const PartedText& tx = iq->gst().text();
    n_ = tx.part_len(part);
    std::vector<i32> fwd(n_), rev(n_);
    for (i32 i = 1; i <= n_; ++i) {
        fwd[i - 1] = tx.at(tx.global(part, i));
        rev[n_ - i] = fwd[i - 1];
    }
    t1_ = Gst(PartedText::from_mapped({rev}));
    t2_ = Gst(PartedText::from_mapped({fwd}));
    lca1_ = LcaTable(t1_);
    lca2_ = LcaTable(t2_);

    leaf1_.assign(n_ + 2, -1);
    leaf2_.assign(n_ + 2, -1);
    label1_.assign(t1_.node_count(), -1);
    label2_.assign(t2_.node_count(), -1);
    for (i32 s = 1; s <= n_ + 1; ++s) {
        i32 v1 = t1_.leaf_node(s);
        i32 i1 = n_ - s + 2; // leaf of X^R at s is the prefix X[1..n-s+1]
        leaf1_[i1] = v1;
        label1_[v1] = i1;
        i32 v2 = t2_.leaf_node(s);
        leaf2_[s] = v2;
        label2_[v2] = s;
    }
}

void HiaIndex::Bucket::build(i32 lo, i32 hi, int axis) {
    i32 mid = lo + (hi - lo) / 2;
    auto key = [&](const BPoint& p) { return axis == 0 ? p.d1 : (axis == 1 ? p.d2 : p.i); };
    std::nth_element(pts.begin() + lo, pts.begin() + mid, pts.begin() + hi + 1,
                     [&](const BPoint& a, const BPoint& b) { return key(a) < key(b); });
    BNode& nd = agg[mid];
    nd.mn[0] = nd.mn[1] = nd.mn[2] = INT32_MAX;
    nd.mx[0] = nd.mx[1] = nd.mx[2] = INT32_MIN;
    nd.max_sum = INT32_MIN;
    nd.max_imd1 = INT32_MIN;
    nd.min_ipd2 = INT32_MAX;
    for (i32 k = lo; k <= hi; ++k) {
        const BPoint& p = pts[k];
        i32 c[3] = {p.d1, p.d2, p.i};
        for (int d = 0; d < 3; ++d) {
            nd.mn[d] = std::min(nd.mn[d], c[d]);
            nd.mx[d] = std::max(nd.mx[d], c[d]);
        }
        nd.max_sum = std::max(nd.max_sum, p.d1 + p.d2);
        nd.max_imd1 = std::max(nd.max_imd1, p.i - p.d1);
        nd.min_ipd2 = std::min(nd.min_ipd2, p.i + p.d2);
    }
    int nxt = (axis + 1) % 3;
    if (lo < mid) build(lo, mid - 1, nxt);
    if (mid < hi) build(mid + 1, hi, nxt);
}

const HiaIndex::Bucket* HiaIndex::bucket(i32 p1, i32 p2) const {
    u64 key = (static_cast<u64>(p1) << 32) | static_cast<u32>(p2);
    std::lock_guard<std::mutex> lk(mu_);
    auto it = buckets_.find(key);
    if (it != buckets_.end()) return it->second.get();
    auto b = std::make_unique<Bucket>();
    i32 top1 = t1_.path_top(p1), top2 = t2_.path_top(p2);
    i32 lo1 = t1_.range_lo(top1), hi1 = t1_.range_hi(top1);
    i32 lo2 = t2_.range_lo(top2), hi2 = t2_.range_hi(top2);
    i32 bot1 = t1_.path_bottom(p1), bot2 = t2_.path_bottom(p2);
    if (hi1 - lo1 <= hi2 - lo2) {
        for (i32 r = lo1; r <= hi1; ++r) {
            i32 pos = t1_.sarr().sa(r);
            i32 lab = n_ - pos + 2;
            i32 v2 = leaf2_[lab];
            i32 r2 = t2_.range_lo(v2);
            if (r2 < lo2 || r2 > hi2) continue;
            i32 v1 = t1_.leaf_node(pos);
            b->pts.push_back(BPoint{lab, static_cast<i32>(weight1(lca1_.lca(v1, bot1))),
                                    static_cast<i32>(weight2(lca2_.lca(v2, bot2)))});
        }
    } else {
        for (i32 r = lo2; r <= hi2; ++r) {
            i32 lab = t2_.sarr().sa(r);
            i32 v1 = leaf1_[lab];
            i32 r1 = t1_.range_lo(v1);
            if (r1 < lo1 || r1 > hi1) continue;
            i32 v2 = t2_.leaf_node(lab);
            b->pts.push_back(BPoint{lab, static_cast<i32>(weight1(lca1_.lca(v1, bot1))),
                                    static_cast<i32>(weight2(lca2_.lca(v2, bot2)))});
        }
    }
    if (!b->pts.empty()) {
        b->agg.assign(b->pts.size(), BNode{});
        b->build(0, static_cast<i32>(b->pts.size()) - 1, 0);
    }
    const Bucket* out = b.get();
    buckets_.emplace(key, std::move(b));
    return out;
}

void HiaIndex::bucket_query(const Bucket& b, i32 lo, i32 hi, const BQ& q, i32& best,
                            i64& best_obj) {
    if (lo > hi) return;
    i32 mid = lo + (hi - lo) / 2;
    const BNode& nd = b.agg[mid];
    if (nd.mn[0] > q.d1_hi || nd.mx[0] < q.d1_lo) return;
    if (nd.mn[1] > q.d2_hi || nd.mx[1] < q.d2_lo) return;
    if (q.left_uses_d1 ? nd.max_imd1 < q.left_bound : nd.mx[2] < q.left_bound) return;
    if (q.right_uses_d2 ? nd.min_ipd2 > q.right_bound : nd.mn[2] > q.right_bound) return;
    i64 bound;
    switch (q.objective) {
        case 0: bound = nd.max_sum; break;
        case 1: bound = nd.mx[1]; break;
        case 2: bound = nd.mx[0]; break;
        default: bound = 0; break;
    }
    if (best >= 0 && (q.objective == 3 || bound <= best_obj)) return;
    const BPoint& p = b.pts[mid];
    bool ok = p.d1 >= q.d1_lo && p.d1 <= q.d1_hi && p.d2 >= q.d2_lo && p.d2 <= q.d2_hi &&
              (q.left_uses_d1 ? p.i - p.d1 : p.i) >= q.left_bound &&
              (q.right_uses_d2 ? p.i + p.d2 : p.i) <= q.right_bound;
    if (ok) {
        i64 obj = q.objective == 0 ? p.d1 + p.d2
                                   : (q.objective == 1 ? p.d2 : (q.objective == 2 ? p.d1 : 0));
        if (best < 0 || obj > best_obj) {
            best = mid;
            best_obj = obj;
        }
    }
    bucket_query(b, lo, mid - 1, q, best, best_obj);
    bucket_query(b, mid + 1, hi, q, best, best_obj);
}

std::optional<HiaIndex::BPoint> HiaIndex::query_bucket(const Bucket& b, const BQ& q) const {
    if (b.pts.empty()) return std::nullopt;
    i32 best = -1;
    i64 best_obj = kNegInf;
    bucket_query(b, 0, static_cast<i32>(b.pts.size()) - 1, q, best, best_obj);
    if (best < 0) return std::nullopt;
    return b.pts[best];
}

i32 HiaIndex::node_at_weight(const Gst& t, i32 pid, i64 d) const {
    i32 lo = 0, hi = t.path_size(pid) - 1;
    const Gst* tp = &t;
    auto w = [&](i32 idx) {
        i32 v = tp->path_node(pid, idx);
        return tp->is_leaf(v) ? tp->depth(v) - 1 : tp->depth(v);
    };
    while (lo < hi) {
        i32 mid = (lo + hi) / 2;
        if (w(mid) >= d) hi = mid; else lo = mid + 1;
    }
    return t.path_node(pid, lo);
}

namespace {
// A leaf whose edge holds only the end-marker denotes the same string as its
// parent; redirect to the parent so weight gates and buckets see the node
// that actually owns the occurrences.
i32 canon_node(const Gst& t, i32 v) {
    if (v != t.root() && t.is_leaf(v) && t.depth(t.parent(v)) == t.depth(v) - 1)
        return t.parent(v);
    return v;
}
} // namespace

std::optional<HiaAnswer> HiaIndex::extended_hia_query(i32 v1, i32 v2, i64 a, i64 b,
                                                      int fixed) const {
    require(1 <= a && a <= b && b <= n_, "extended_hia_query: invalid window");
    require(fixed >= 0 && fixed <= 2, "extended_hia_query: bad fixed flag");
    std::optional<HiaAnswer> best;
    i32 c1 = canon_node(t1_, v1), c2 = canon_node(t2_, v2);
    if (fixed == 0) best = extended_core(c1, c2, a, b);
    else if (fixed == 1) best = special_query(c1, weight1(c1), c2, a, b, 1);
    else best = special_query(c2, weight2(c2), c1, a, b, 2);
    clamped_repair(c1, c2, a, b, fixed, best);
    // report the caller's nodes on forced sides
    if (best && fixed == 1) best->u1 = v1;
    if (best && fixed == 2) best->u2 = v2;
    return best;
}

i32 HiaIndex::ancestor_at_weight_leq(const Gst& t, i32 v, i64 bound) {
    auto wt = [&](i32 u) { return t.is_leaf(u) ? t.depth(u) - 1 : t.depth(u); };
    if (wt(v) <= bound) return v;
    while (true) {
        i32 top = t.path_top(t.path_of(v));
        if (top == t.root() || wt(top) <= bound) break;
        v = t.parent(top);
    }
    i32 p = t.path_of(v);
    i32 lo = 0, hi = t.path_index(v);
    while (lo < hi) { // deepest on-path node with weight <= bound
        i32 mid = (lo + hi + 1) / 2;
        if (wt(t.path_node(p, mid)) <= bound) lo = mid; else hi = mid - 1;
    }
    return t.path_node(p, lo);
}

void HiaIndex::clamped_repair(i32 v1, i32 v2, i64 a, i64 b, int fixed,
                              std::optional<HiaAnswer>& best) const {
    const PartedText& tx = iq_->gst().text();
    // left-clamped: the u1 side is cut by i - a (c = 0 pins the occurrence
    // to the window start with u1 the root)
    if (fixed != 1) {
        i64 w1v = weight1(v1);
        i64 s = t1_.first_leaf_pos(v1);
        Ref Y{tx.global(rev_part_, static_cast<i32>(s)), static_cast<i32>(w1v)};
        i64 zlen = n_ - a + 1;
        Ref Z{tx.global(rev_part_, 1), static_cast<i32>(zlen)};
        std::vector<i64> cands{0};
        for (i64 lo = 1; lo <= std::min(w1v, zlen); lo <<= 1) {
            ArithProg ap = iq_->psq_band(Y, Z, lo, 2 * lo - 1);
            for (i64 k = 0; k < ap.count; ++k) cands.push_back(ap.at(k));
        }
        {
            for (i64 c : cands) {
                i64 i = a + c;
                if (i > b + 1) continue;
                i32 u1 = ancestor_at_weight_leq(t1_, v1, c);
                i64 d1 = weight1(u1);
                i32 l2 = leaf2_[i];
                if (fixed == 2) {
                    // forced side: the (sentinel-free) label of v2 must occur at i
                    i64 d2 = weight2(v2);
                    if (i + d2 > b + 1) continue;
                    if (d2 > 0) {
                        if (i > n_) continue;
                        Ref lab{tx.global(part_, t2_.first_leaf_pos(v2)), static_cast<i32>(d2)};
                        if (seq_lcp(Seq::of_ref(iq_->gst(), iq_->part_suffix(part_, i)),
                                    Seq::of_ref(iq_->gst(), lab)) < d2)
                            continue;
                    }
                    consider(best, HiaAnswer{u1, v2, static_cast<i32>(i), d1, d2, d1 + d2});
                } else {
                    i32 m2 = lca2_.lca(l2, v2);
                    i64 bound2 = b + 1 - i;
                    i32 u2 = weight2(m2) <= bound2 ? m2 : ancestor_at_weight_leq(t2_, m2, bound2);
                    i64 d2 = weight2(u2);
                    consider(best, HiaAnswer{u1, u2, static_cast<i32>(i), d1, d2, d1 + d2});
                }
            }
        }
    }
    // right-clamped: the u2 side is cut by b + 1 - i
    if (fixed != 2) {
        i64 w2v = weight2(v2);
        i64 s = t2_.first_leaf_pos(v2);
        Ref Y{tx.global(part_, static_cast<i32>(s)), static_cast<i32>(w2v)};
        Ref Z{tx.global(part_, static_cast<i32>(a)), static_cast<i32>(b - a + 1)};
        std::vector<i64> cands{0};
        for (i64 lo = 1; lo <= std::min<i64>(w2v, b - a + 1); lo <<= 1) {
            ArithProg ap = iq_->psq_band(Y, Z, lo, 2 * lo - 1);
            for (i64 k = 0; k < ap.count; ++k) cands.push_back(ap.at(k));
        }
        {
            for (i64 c : cands) {
                i64 i = b + 1 - c;
                if (i < a) continue;
                i32 u2 = ancestor_at_weight_leq(t2_, v2, c);
                i64 d2 = weight2(u2);
                i32 l1 = leaf1_[i];
                if (fixed == 1) {
                    i64 d1 = weight1(v1);
                    if (i - d1 < a) continue;
                    if (d1 > 0) {
                        if (i < 2) continue;
                        Ref lab{tx.global(rev_part_, t1_.first_leaf_pos(v1)), static_cast<i32>(d1)};
                        if (seq_lcp(Seq::of_ref(iq_->gst(), iq_->part_suffix(rev_part_, n_ - i + 2)),
                                    Seq::of_ref(iq_->gst(), lab)) < d1)
                            continue;
                    }
                    consider(best, HiaAnswer{v1, u2, static_cast<i32>(i), d1, d2, d1 + d2});
                } else {
                    i32 m1 = lca1_.lca(l1, v1);
                    i64 bound1 = i - a;
                    i32 u1 = weight1(m1) <= bound1 ? m1 : ancestor_at_weight_leq(t1_, m1, bound1);
                    i64 d1 = weight1(u1);
                    consider(best, HiaAnswer{u1, u2, static_cast<i32>(i), d1, d2, d1 + d2});
                }
            }
        }
    }
}

std::optional<HiaAnswer> HiaIndex::extended_core(i32 v1, i32 v2, i64 a, i64 b) const {
    std::optional<HiaAnswer> best;
    {
        auto f1 = t1_.heavy_decomp_to_root(v1);
        auto f2 = t2_.heavy_decomp_to_root(v2);
        for (const auto& fr1 : f1) {
            i32 p1 = t1_.path_of(fr1.top);
            i64 w1 = weight1(fr1.bottom);
            for (const auto& fr2 : f2) {
                i32 p2 = t2_.path_of(fr2.top);
                i64 w2 = weight2(fr2.bottom);
                const Bucket* B = bucket(p1, p2);
                if (!B || B->pts.empty()) continue;
                BQ q;
                // type I: both ancestors strictly inside the fragments
                q = BQ{};
                q.d1_hi = w1 - 1;
                q.d2_hi = w2 - 1;
                q.left_bound = a;
                q.right_bound = b + 1;
                q.objective = 0;
                if (auto h = query_bucket(*B, q))
                    consider(best, HiaAnswer{node_at_weight(t1_, p1, h->d1),
                                             node_at_weight(t2_, p2, h->d2), h->i, h->d1, h->d2,
                                             static_cast<i64>(h->d1) + h->d2});
                // type II: u1 snaps to the fragment bottom
                q = BQ{};
                q.d1_lo = w1;
                q.d2_hi = w2 - 1;
                q.left_uses_d1 = false;
                q.left_bound = a + w1;
                q.right_bound = b + 1;
                q.objective = 1;
                if (auto h = query_bucket(*B, q))
                    consider(best, HiaAnswer{fr1.bottom, node_at_weight(t2_, p2, h->d2), h->i, w1,
                                             h->d2, w1 + h->d2});
                // type III: u2 snaps
                q = BQ{};
                q.d2_lo = w2;
                q.d1_hi = w1 - 1;
                q.left_bound = a;
                q.right_uses_d2 = false;
                q.right_bound = b + 1 - w2;
                q.objective = 2;
                if (auto h = query_bucket(*B, q))
                    consider(best, HiaAnswer{node_at_weight(t1_, p1, h->d1), fr2.bottom, h->i,
                                             h->d1, w2, h->d1 + w2});
                // type IV: both snap
                q = BQ{};
                q.d1_lo = w1;
                q.d2_lo = w2;
                q.left_uses_d1 = false;
                q.left_bound = a + w1;
                q.right_uses_d2 = false;
                q.right_bound = b + 1 - w2;
                q.objective = 3;
                if (auto h = query_bucket(*B, q))
                    consider(best, HiaAnswer{fr1.bottom, fr2.bottom, h->i, w1, w2, w1 + w2});
            }
        }
        return best;
    }
}

// Forced-side query: u_side is the string of length flen whose occurrences
// are the leaves below the explicit node e; the other side ranges over the
// explicit ancestors of `other`.
std::optional<HiaAnswer> HiaIndex::special_query(i32 e, i64 flen, i32 other, i64 a, i64 b,
                                                 int side) const {
    std::optional<HiaAnswer> best;
    if (side == 1) {
        i32 p1 = t1_.path_of(e);
        i64 t1gate = weight1(e);
        auto f2 = t2_.heavy_decomp_to_root(other);
        for (const auto& fr2 : f2) {
            i32 p2 = t2_.path_of(fr2.top);
            i64 w2 = weight2(fr2.bottom);
            const Bucket* B = bucket(p1, p2);
            if (!B || B->pts.empty()) continue;
            BQ q;
            q.d1_lo = t1gate;
            q.d2_hi = w2 - 1;
            q.left_uses_d1 = false;
            q.left_bound = a + flen;
            q.right_bound = b + 1;
            q.objective = 1;
            if (auto h = query_bucket(*B, q))
                consider(best, HiaAnswer{e, node_at_weight(t2_, p2, h->d2), h->i, flen, h->d2,
                                         flen + h->d2});
            q = BQ{};
            q.d1_lo = t1gate;
            q.d2_lo = w2;
            q.left_uses_d1 = false;
            q.left_bound = a + flen;
            q.right_uses_d2 = false;
            q.right_bound = b + 1 - w2;
            q.objective = 3;
            if (auto h = query_bucket(*B, q))
                consider(best, HiaAnswer{e, fr2.bottom, h->i, flen, w2, flen + w2});
        }
        return best;
    }
    i32 p2 = t2_.path_of(e);
    i64 t2gate = weight2(e);
    auto f1 = t1_.heavy_decomp_to_root(other);
    for (const auto& fr1 : f1) {
        i32 p1 = t1_.path_of(fr1.top);
        i64 w1 = weight1(fr1.bottom);
        const Bucket* B = bucket(p1, p2);
        if (!B || B->pts.empty()) continue;
        BQ q;
        q.d2_lo = t2gate;
        q.d1_hi = w1 - 1;
        q.left_bound = a;
        q.right_uses_d2 = false;
        q.right_bound = b + 1 - flen;
        q.objective = 2;
        if (auto h = query_bucket(*B, q))
            consider(best,
                     HiaAnswer{node_at_weight(t1_, p1, h->d1), e, h->i, h->d1, flen, h->d1 + flen});
        q = BQ{};
        q.d2_lo = t2gate;
        q.d1_lo = w1;
        q.left_uses_d1 = false;
        q.left_bound = a + w1;
        q.right_uses_d2 = false;
        q.right_bound = b + 1 - flen;
        q.objective = 3;
        if (auto h = query_bucket(*B, q))
            consider(best, HiaAnswer{fr1.bottom, e, h->i, w1, flen, w1 + flen});
    }
    return best;
}

// X window-clamped against the left end of W: X = X[a .. a+c-1] must be a
// suffix of U, i.e. c ranges over prefix-of-W = suffix-of-U overlaps; the
// Y side is then computed by direct LCE.
void HiaIndex::slide_left(Loc u, Loc v, Loc w, ThreeSsResult& best) const {
    if (u.len() == 0) return;
    i64 a = w.lo, b = w.hi;
    const Gst& g = iq_->gst();
    Ref wref{g.text().global(part_, static_cast<i32>(w.lo)), static_cast<i32>(w.len())};
    Ref uref{g.text().global(part_, static_cast<i32>(u.lo)), static_cast<i32>(u.len())};
    auto d2_at = [&](i64 i) -> i64 {
        // longest prefix of V starting at position i, clipped to the window
        if (v.len() == 0 || i > b) return 0;
        i64 ext = seq_lcp(Seq::of_ref(g, iq_->part_suffix(part_, i)),
                          Seq::of_ref(g, Ref{g.text().global(part_, static_cast<i32>(v.lo)),
                                             static_cast<i32>(v.len())}));
        return std::min(ext, b + 1 - i);
    };
    auto offer = [&](i64 c, i64 d2) {
        if (c + d2 > best.total) best = ThreeSsResult{c + d2, c, a};
    };
    offer(0, d2_at(a)); // occurrence pinned at the window start, X empty
    i64 cap = std::min(u.len(), w.len());
    for (i64 lo = 1; lo <= cap; lo <<= 1) {
        ArithProg ap = iq_->psq_band(wref, uref, lo, 2 * lo - 1);
        if (ap.empty()) continue;
        if (ap.count <= 4) {
            for (i64 k = 0; k < ap.count; ++k) {
                i64 c = ap.at(k);
                offer(c, d2_at(a + c));
            }
            continue;
        }
        // periodic batch: T_(a + c(w)) = B^w X with c(w) = c_max - w*p
        i64 p = ap.diff, cmax = ap.last();
        Seq X = Seq::of_ref(g, iq_->part_suffix(part_, a + cmax));
        Seq B = Seq::of_ref(g, Ref{g.text().global(part_, static_cast<i32>(a + cmax - p)),
                                   static_cast<i32>(p)});
        Seq Y = Seq::of_ref(g, Ref{g.text().global(part_, static_cast<i32>(v.lo)),
                                   static_cast<i32>(v.len())});
        PiecewiseLcp f = make_power_lcp(B, X, Y);
        auto value = [&](i64 wv) {
            i64 c = cmax - wv * p;
            i64 d2 = std::min(f.eval(wv), b + 1 - (a + c));
            return std::make_pair(c + std::max<i64>(d2, 0), c);
        };
        std::vector<i64> cand{0, ap.count - 1};
        if (ap.count <= 64) {
            for (i64 wv = 1; wv + 1 < ap.count; ++wv) cand.push_back(wv);
        } else {
            auto push3 = [&](i64 wv) {
                for (i64 d = -1; d <= 1; ++d) cand.push_back(wv + d);
            };
            push3((f.b - f.a) / f.p);
            push3((f.b - (b + 1 - a - cmax)) / p);
            push3((f.ylen - f.a) / f.p);
            push3((f.b - f.xlen) / f.p);
        }
        for (i64 wv : cand) {
            if (wv < 0 || wv >= ap.count) continue;
            auto [val, c] = value(wv);
            offer(c, val - c);
        }
    }
}

// symmetric: Y clamped against the right end of W
void HiaIndex::slide_right(Loc u, Loc v, Loc w, ThreeSsResult& best) const {
    if (v.len() == 0) return;
    i64 a = w.lo, b = w.hi;
    const Gst& g = iq_->gst();
    Ref wref{g.text().global(part_, static_cast<i32>(w.lo)), static_cast<i32>(w.len())};
    Ref vref{g.text().global(part_, static_cast<i32>(v.lo)), static_cast<i32>(v.len())};
    auto l1_at = [&](i64 cp) -> i64 {
        // longest suffix of U ending at position b - cp, clipped to the window
        if (u.len() == 0) return 0;
        i64 q = b - cp; // last position of the X part
        if (q < a) return 0;
        i64 ext = seq_lcp(Seq::of_ref(g, iq_->rev_ref(part_, rev_part_, 1, q)),
                          Seq::of_ref(g, iq_->rev_ref(part_, rev_part_, u.lo, u.hi)));
        return std::min(ext, q - a + 1);
    };
    auto offer = [&](i64 cp, i64 l1) {
        if (cp + l1 > best.total) best = ThreeSsResult{cp + l1, l1, b - cp - l1 + 1};
    };
    offer(0, l1_at(0)); // occurrence pinned at the window end, Y empty
    i64 cap = std::min(v.len(), w.len());
    for (i64 lo = 1; lo <= cap; lo <<= 1) {
        ArithProg ap = iq_->psq_band(vref, wref, lo, 2 * lo - 1);
        if (ap.empty()) continue;
        if (ap.count <= 4) {
            for (i64 k = 0; k < ap.count; ++k) {
                i64 cp = ap.at(k);
                offer(cp, l1_at(cp));
            }
            continue;
        }
        i64 p = ap.diff, cmax = ap.last();
        // (X[1..b-c(w)])^R = B^w X with c(w) = cmax - w*p
        i64 q0 = b - cmax;
        Seq X = Seq::of_ref(g, iq_->part_suffix(rev_part_, n_ - q0 + 1));
        Seq B = Seq::of_ref(g, iq_->rev_ref(part_, rev_part_, q0 + 1, q0 + p));
        Seq Y = Seq::of_ref(g, iq_->rev_ref(part_, rev_part_, u.lo, u.hi));
        PiecewiseLcp f = make_power_lcp(B, X, Y);
        auto value = [&](i64 wv) {
            i64 cp = cmax - wv * p;
            i64 l1 = std::min(f.eval(wv), (b - cp) - a + 1);
            return std::make_pair(cp + std::max<i64>(l1, 0), cp);
        };
        std::vector<i64> cand{0, ap.count - 1};
        if (ap.count <= 64) {
            for (i64 wv = 1; wv + 1 < ap.count; ++wv) cand.push_back(wv);
        } else {
            auto push3 = [&](i64 wv) {
                for (i64 d = -1; d <= 1; ++d) cand.push_back(wv + d);
            };
            push3((f.b - f.a) / f.p);
            push3((f.b - (b - a + 1 - cmax)) / p);
            push3((f.ylen - f.a) / f.p);
            push3((f.b - f.xlen) / f.p);
        }
        for (i64 wv : cand) {
            if (wv < 0 || wv >= ap.count) continue;
            auto [val, cp] = value(wv);
            offer(cp, val - cp);
        }
    }
}

ThreeSsResult HiaIndex::three_substrings_lcs(Loc u, Loc v, Loc w) const {
    if (w.len() <= 0) return ThreeSsResult{};
    ThreeSsResult best{0, 0, w.lo};
    i64 a = w.lo, b = w.hi;

    i32 lea1, e1 = -1, lea2, e2 = -1;
    bool expl1 = true, expl2 = true;
    if (u.len() > 0) {
        NodeHandle h = t1_.locus(static_cast<i32>(n_ - u.hi + 1), static_cast<i32>(n_ - u.lo + 1));
        expl1 = t1_.depth(h.edge) == h.depth;
        e1 = h.edge;
        lea1 = expl1 ? h.edge : t1_.parent(h.edge);
    } else {
        lea1 = t1_.root();
    }
    if (v.len() > 0) {
        NodeHandle h = t2_.locus(static_cast<i32>(v.lo), static_cast<i32>(v.hi));
        expl2 = t2_.depth(h.edge) == h.depth;
        e2 = h.edge;
        lea2 = expl2 ? h.edge : t2_.parent(h.edge);
    } else {
        lea2 = t2_.root();
    }
    auto upd = [&](const std::optional<HiaAnswer>& ha) {
        if (ha && ha->total > best.total)
            best = ThreeSsResult{ha->total, ha->d1, ha->leaf - ha->d1};
    };
    upd(extended_core(lea1, lea2, a, b));
    if (!expl1) upd(special_query(e1, u.len(), lea2, a, b, 1));
    if (!expl2) upd(special_query(e2, v.len(), lea1, a, b, 2));
    if (!expl1 && !expl2) {
        // the (whole U, whole V) combination
        const Bucket* B = bucket(t1_.path_of(e1), t2_.path_of(e2));
        if (B && !B->pts.empty()) {
            BQ q;
            q.d1_lo = weight1(e1);
            q.d2_lo = weight2(e2);
            q.left_uses_d1 = false;
            q.left_bound = a + u.len();
            q.right_uses_d2 = false;
            q.right_bound = b + 1 - v.len();
            q.objective = 3;
            if (auto h = query_bucket(*B, q)) {
                i64 total = u.len() + v.len();
                if (total > best.total) best = ThreeSsResult{total, u.len(), h->i - u.len()};
            }
        }
    }

    slide_left(u, v, w, best);
    slide_right(u, v, w, best);
    return best;
}

} // namespace dynstr
