#include "dynstr/decremental.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

namespace dynstr {

// ---------------------------------------------------------------------------
// DifferenceCover
// ---------------------------------------------------------------------------

DifferenceCover::DifferenceCover(i64 d) : d_(d) {
    require(d >= 1, "difference_cover: d must be positive");
    if (d == 6) {
        // residue set {2,3,5} mod 6, a perfect difference basis
        table_mode_ = true;
        period_ = 6;
        in_.assign(6, false);
        in_[2] = in_[3] = in_[5] = true;
        pair_for_delta_ = {{2, 2}, {2, 3}, {3, 5}, {2, 5}, {5, 3}, {3, 2}};
        return;
    }
    r_ = std::max<i64>(1, static_cast<i64>(std::sqrt(static_cast<double>(d))));
    while (r_ * r_ > d) --r_;
    period_ = r_ * r_;
    in_.assign(period_, false);
    for (i64 x = 0; x < r_; ++x) in_[x] = true;
    for (i64 x = 0; x < period_; x += r_) in_[x] = true;
}

std::vector<i64> DifferenceCover::members(i64 n) const {
    std::vector<i64> out;
    for (i64 x = 1; x <= n; ++x)
        if (in_[x % period_]) out.push_back(x);
    return out;
}

i64 DifferenceCover::h(i64 i, i64 j) const {
    if (table_mode_) {
        i64 delta = ((j - i) % period_ + period_) % period_;
        i64 c1 = pair_for_delta_[delta].first;
        return ((c1 - i) % period_ + period_) % period_;
    }
    // j + h lands on a residue < r_, i + h on a multiple of r_
    i64 t = ((j - i) % r_ + r_) % r_;
    return ((t - j) % period_ + period_) % period_;
}

// ---------------------------------------------------------------------------
// Two String Families LCP
// ---------------------------------------------------------------------------

MaxPairLcpResult two_string_families_lcp(const Gst& g, const std::vector<FamilyPair>& P,
                                         const std::vector<FamilyPair>& Q) {
    MaxPairLcpResult best;
    if (P.empty() || Q.empty()) return best;

    struct Item {
        Ref first, second;
        i32 family; // 0 = P, 1 = Q
        i32 id;
        i32 rank2 = 0;
    };
    std::vector<Item> items;
    for (auto& p : P) items.push_back(Item{p.first, p.second, 0, p.id});
    for (auto& q : Q) items.push_back(Item{q.first, q.second, 1, q.id});
    i32 n = static_cast<i32>(items.size());

    std::vector<i32> by2(n);
    for (i32 i = 0; i < n; ++i) by2[i] = i;
    std::sort(by2.begin(), by2.end(), [&](i32 x, i32 y) {
        if (g.ref_less(items[x].second, items[y].second)) return true;
        if (g.ref_less(items[y].second, items[x].second)) return false;
        return x < y;
    });
    for (i32 r = 0; r < n; ++r) items[by2[r]].rank2 = r;

    std::vector<i32> ord(n);
    for (i32 i = 0; i < n; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](i32 x, i32 y) {
        if (g.ref_less(items[x].first, items[y].first)) return true;
        if (g.ref_less(items[y].first, items[x].first)) return false;
        return x < y;
    });

    // Kruskal-style block merging in decreasing order of adjacent first-lcp;
    // when two blocks join, insert the smaller one's items into the larger
    // and probe the opposite family by second-component rank order.
    std::vector<i32> edges(std::max(0, n - 1));
    std::vector<i64> elcp(std::max(0, n - 1));
    for (i32 i = 0; i + 1 < n; ++i) {
        edges[i] = i;
        elcp[i] = g.lce_ref(items[ord[i]].first, items[ord[i + 1]].first);
    }
    std::sort(edges.begin(), edges.end(), [&](i32 a, i32 b) { return elcp[a] > elcp[b]; });

    std::vector<i32> dsu(n);
    for (i32 i = 0; i < n; ++i) dsu[i] = i;
    std::function<i32(i32)> find = [&](i32 x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };

    using Map = std::map<i32, i32>; // rank2 -> item index
    std::vector<std::array<Map, 2>> maps(n);
    for (i32 i = 0; i < n; ++i) {
        const Item& it = items[ord[i]];
        maps[i][it.family][it.rank2] = ord[i];
    }

    auto probe = [&](const Item& x, const Map& other) {
        if (other.empty()) return;
        auto eval = [&](i32 yidx) {
            const Item& y = items[yidx];
            i64 l1 = g.lce_ref(x.first, y.first);
            i64 l2 = g.lce_ref(x.second, y.second);
            i64 val = l1 + l2;
            if (val > best.value) {
                best.value = val;
                best.lcp1 = l1;
                best.lcp2 = l2;
                best.p_id = x.family == 0 ? x.id : y.id;
                best.q_id = x.family == 0 ? y.id : x.id;
            }
        };
        auto it = other.lower_bound(x.rank2);
        if (it != other.end()) eval(it->second);
        if (it != other.begin()) eval(std::prev(it)->second);
    };

    for (i32 e : edges) {
        i32 ra = find(e), rb = find(e + 1);
        if (ra == rb) continue;
        bool a_small = maps[ra][0].size() + maps[ra][1].size() <
                       maps[rb][0].size() + maps[rb][1].size();
        i32 small = a_small ? ra : rb, big = a_small ? rb : ra;
        for (int f = 0; f < 2; ++f) {
            for (auto& [rk, idx] : maps[small][f]) probe(items[idx], maps[big][1 - f]);
        }
        for (int f = 0; f < 2; ++f)
            maps[big][f].merge(maps[small][f]);
        dsu[small] = big;
    }
    return best;
}

// ---------------------------------------------------------------------------
// DecrementalBounded
// ---------------------------------------------------------------------------

void DecrementalBounded::RankMax::build(const std::vector<i32>& v) {
    val = v;
    bsize = std::max<i32>(1, static_cast<i32>(std::sqrt(static_cast<double>(v.size()))) + 1);
    bmax.assign(v.size() / bsize + 1, INT32_MIN);
    for (size_t i = 0; i < v.size(); ++i)
        bmax[i / bsize] = std::max(bmax[i / bsize], v[i]);
}

void DecrementalBounded::RankMax::update(i32 idx, i32 v) {
    if (v >= val[idx]) {
        val[idx] = v;
        bmax[idx / bsize] = std::max(bmax[idx / bsize], v);
        return;
    }
    i32 b = idx / bsize;
    val[idx] = v;
    i32 m = INT32_MIN;
    i32 lo = b * bsize, hi = std::min<i32>(static_cast<i32>(val.size()), lo + bsize);
    for (i32 i = lo; i < hi; ++i) m = std::max(m, val[i]);
    bmax[b] = m;
}

i32 DecrementalBounded::RankMax::find_ge(i32 lo, i32 hi, i32 need) const {
    if (lo > hi) return -1;
    i32 b0 = lo / bsize, b1 = hi / bsize;
    for (i32 b = b0; b <= b1; ++b) {
        if (bmax[b] < need) continue;
        i32 s = std::max(lo, b * bsize), e = std::min(hi, (b + 1) * bsize - 1);
        for (i32 i = s; i <= e; ++i)
            if (val[i] >= need) return i;
    }
    return -1;
}

DecrementalBounded::DecrementalBounded(const InternalQueries* iq, i64 d, Config cfg)
    : iq_(iq), g_(&iq->gst()), d_(d), cfg_(cfg) {
    require(d_ >= 1, "decremental: d must be positive");
    build_pruned();
    init_counts();
}

void DecrementalBounded::build_pruned() {
    i32 nodes = g_->node_count();
    live_.assign(nodes, false);
    for (i32 v = 0; v < nodes; ++v) {
        if (cfg_.same_string) {
            live_[v] = g_->occ_count(v, cfg_.part_a) >= cfg_.threshold_a;
        } else {
            live_[v] = g_->occ_count(v, cfg_.part_a) >= cfg_.threshold_a &&
                       g_->occ_count(v, cfg_.part_b) >= cfg_.threshold_b;
        }
    }
    live_[0] = true;

    // heavy decomposition of the live skeleton by live-leaf counts
    std::vector<i32> live_leaves(nodes, 0), heavy(nodes, -1);
    std::vector<i32> order(nodes);
    for (i32 v = 0; v < nodes; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](i32 a, i32 b) { return g_->depth(a) > g_->depth(b); });
    for (i32 v : order) {
        if (!live_[v]) continue;
        i32 best = -1, best_cnt = -1, kids = 0;
        for (i32 idx = g_->child_begin(v); idx < g_->child_end(v); ++idx) {
            i32 c = g_->child_at(idx);
            if (!live_[c]) continue;
            ++kids;
            if (live_leaves[c] > best_cnt) { best_cnt = live_leaves[c]; best = c; }
        }
        heavy[v] = best;
        live_leaves[v] = kids == 0 ? 1 : 0;
        for (i32 idx = g_->child_begin(v); idx < g_->child_end(v); ++idx) {
            i32 c = g_->child_at(idx);
            if (live_[c]) live_leaves[v] += live_leaves[c];
        }
    }

    ppid_.assign(nodes, -1);
    ppix_.assign(nodes, -1);
    paths_.clear();
    for (i32 v = 0; v < nodes; ++v) {
        if (!live_[v]) continue;
        bool is_top = v == 0 || heavy[g_->parent(v)] != v;
        if (!is_top) continue;
        Path p;
        p.lo = v == 0 ? 0 : g_->depth(g_->parent(v)) + 1;
        for (i32 u = v; u != -1; u = heavy[u]) {
            ppid_[u] = static_cast<i32>(paths_.size());
            ppix_[u] = static_cast<i32>(p.nodes.size());
            p.nodes.push_back(u);
            p.depths.push_back(g_->depth(u));
        }
        p.cap = static_cast<i32>(std::min<i64>(p.depths.back(), d_));
        p.inv_depth_a = p.inv_depth_b = kPosInf;
        paths_.push_back(std::move(p));
    }

    // per suffix position: deepest live depth on its walk (capped later)
    node_limit_.assign(g_->n() + 2, 0);
    std::vector<i32> deep(nodes, 0);
    std::sort(order.begin(), order.end(),
              [&](i32 a, i32 b) { return g_->depth(a) < g_->depth(b); });
    for (i32 v : order) {
        if (v == 0) { deep[v] = 0; continue; }
        deep[v] = live_[v] ? g_->depth(v) : deep[g_->parent(v)];
    }
    for (i32 pos = 1; pos <= g_->n(); ++pos) node_limit_[pos] = deep[g_->leaf_node(pos)];

    // R buckets and rank-max structures
    buckets_.assign(d_ + 1, {});
    for (i32 pid = 0; pid < static_cast<i32>(paths_.size()); ++pid) {
        paths_[pid].bucket = -1;
        bucket_move(pid);
    }
    for (int role = 0; role < (cfg_.same_string ? 1 : 2); ++role) {
        i32 part = role == 0 ? cfg_.part_a : cfg_.part_b;
        i32 plen = g_->text().part_len(part);
        lmax_[role].assign(plen + 2, 0);
        std::vector<i32> v(g_->n() + 1, INT32_MIN);
        for (i64 j = 1; j <= plen; ++j) {
            lmax_[role][j] = static_cast<i32>(std::min<i64>(plen - j + 1, d_));
            v[g_->sarr().rank(g_->text().global(part, static_cast<i32>(j)))] = lmax_[role][j];
        }
        rank_max_[role].build(v);
    }
}

void DecrementalBounded::init_counts() {
    A_.assign(d_ + 1, 0);
    std::vector<i64> term(d_ + 2, 0), branch(d_ + 2, 0);
    for (i32 v = 0; v < g_->node_count(); ++v) {
        if (!live_[v]) continue;
        i64 dep = g_->depth(v);
        if (dep > d_) continue;
        i32 kids = 0;
        for (i32 idx = g_->child_begin(v); idx < g_->child_end(v); ++idx)
            if (live_[g_->child_at(idx)]) ++kids;
        if (kids == 0) term[dep] += 1;
        else branch[dep] += kids - 1;
    }
    A_[0] = 1;
    for (i64 i = 1; i <= d_; ++i) A_[i] = A_[i - 1] - term[i - 1] + branch[i - 1];
    cur_max_ = d_;
    while (cur_max_ > 0 && A_[cur_max_] == 0) --cur_max_;
}

void DecrementalBounded::bucket_move(i32 pid) {
    Path& p = paths_[pid];
    i64 cap = path_cap(p);
    i32 want = (cap >= std::max<i32>(1, p.lo) && cap <= d_) ? static_cast<i32>(cap) : -1;
    if (want == p.bucket) return;
    if (p.bucket >= 0) {
        auto& b = buckets_[p.bucket];
        i32 last = b.back();
        b[p.bucket_pos] = last;
        paths_[last].bucket_pos = p.bucket_pos;
        b.pop_back();
    }
    p.bucket = want;
    if (want >= 0) {
        p.bucket_pos = static_cast<i32>(buckets_[want].size());
        buckets_[want].push_back(pid);
    } else {
        p.bucket_pos = -1;
    }
}

i64 DecrementalBounded::valid_occ(i32 pid, i64 delta, int role) const {
    const Path& p = paths_[pid];
    // first explicit on the path with depth >= delta
    i32 lo = 0, hi = static_cast<i32>(p.depths.size()) - 1;
    while (lo < hi) {
        i32 mid = (lo + hi) / 2;
        if (p.depths[mid] >= delta) hi = mid; else lo = mid + 1;
    }
    i32 v = p.nodes[lo];
    i32 part = role == 0 ? cfg_.part_a : cfg_.part_b;
    i64 occ = g_->occ_count(v, part);
    const IntervalTree& t = role == 0 ? p.invalid_a : p.invalid_b;
    return occ - t.count(delta);
}

void DecrementalBounded::update_inv_depth(i32 pid, int role) {
    Path& p = paths_[pid];
    i64& inv = role == 0 ? p.inv_depth_a : p.inv_depth_b;
    i64 threshold = role == 0 ? cfg_.threshold_a : cfg_.threshold_b;
    i64 hi = std::min<i64>(p.cap, inv - 1);
    i64 lo = std::max<i32>(1, p.lo);
    if (lo > hi) return;
    if (valid_occ(pid, hi, role) >= threshold) return; // nothing newly dead
    while (lo < hi) {
        i64 mid = (lo + hi) / 2;
        if (valid_occ(pid, mid, role) < threshold) hi = mid; else lo = mid + 1;
    }
    i64 fresh = lo;
    i64 other = role == 0 ? p.inv_depth_b : p.inv_depth_a;
    i64 dead_hi = std::min({inv - 1, other - 1, static_cast<i64>(p.cap)});
    if (fresh <= dead_hi) pendingA_.insert(fresh, dead_hi);
    inv = fresh;
    bucket_move(pid);
}

void DecrementalBounded::replace_event(int role, i64 c) {
    if (cfg_.same_string) role = 0;
    if (events_[role].count(c)) return;
    i32 part = role == 0 ? cfg_.part_a : cfg_.part_b;
    i64 plen = g_->text().part_len(part);
    i64 pred = pred_event(role, c);
    i64 succ = succ_event(role, c);

    i64 b_lo = (c + 1) / 2;
    i64 a_hi = c / 2;
    i64 b_cap = std::min(plen, (succ - 1) / 2);
    i64 a_lo = std::max<i64>({1, pred / 2 + 1, b_lo - d_ + 1});

    std::vector<i32> touched;
    for (i64 a = a_lo; a <= a_hi; ++a) {
        i64 glob = g_->text().global(part, static_cast<i32>(a));
        i64 b_hi = std::min({a + d_ - 1, b_cap, a + node_limit_[glob] - 1});
        if (b_hi < b_lo) continue;
        i64 dhi = b_hi - a + 1, dlo = b_lo - a + 1;
        // decompose the walk segment [dlo, dhi] into pruned-path fragments
        i64 delta = dhi;
        while (delta >= dlo) {
            NodeHandle h = g_->locus(static_cast<i32>(glob), static_cast<i32>(glob + delta - 1));
            i32 pid = ppid_[h.edge];
            Path& p = paths_[pid];
            i64 top = std::max<i64>(p.lo, dlo);
            (role == 0 ? p.invalid_a : p.invalid_b).insert(top, delta);
            touched.push_back(pid);
            delta = p.lo - 1;
        }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (i32 pid : touched) update_inv_depth(pid, role);

    // fold pending decrements into A
    if (pendingA_.inserted() > 0) {
        for (i64 r = 1; r <= d_; ++r) A_[r] -= pendingA_.count(r);
        pendingA_.clear();
        while (cur_max_ > 0 && A_[cur_max_] == 0) --cur_max_;
    }

    // valid-run lengths shrink around the event
    i64 j_lo = std::max<i64>({1, pred / 2 + 1, (c + 1) / 2 - d_});
    for (i64 j = j_lo; j <= std::min<i64>(plen, c / 2); ++j) {
        i32 nb = static_cast<i32>((c - 2 * j + 1) / 2);
        if (nb < lmax_[role][j]) {
            lmax_[role][j] = nb;
            rank_max_[role].update(g_->sarr().rank(g_->text().global(part, static_cast<i32>(j))), nb);
        }
    }
    events_[role].insert(c);
}

i64 DecrementalBounded::succ_event(int role, i64 c) const {
    auto it = events_[role].upper_bound(c);
    i32 part = role == 0 ? cfg_.part_a : cfg_.part_b;
    return it == events_[role].end() ? 2 * (static_cast<i64>(g_->text().part_len(part)) + 1)
                                     : *it;
}

i64 DecrementalBounded::pred_event(int role, i64 c) const {
    auto it = events_[role].lower_bound(c);
    if (it == events_[role].begin()) return 0;
    return *std::prev(it);
}

i64 DecrementalBounded::lmax(int role, i64 j) const {
    if (cfg_.same_string) role = 0;
    return lmax_[role][j];
}

DecrementalBounded::Witness DecrementalBounded::witness() const {
    Witness w;
    w.len = cur_max_;
    if (cur_max_ == 0) return w;
    i64 m = cur_max_;
    // some live path claims depth m
    for (i32 pid : buckets_[m]) {
        const Path& p = paths_[pid];
        i32 lo = 0, hi = static_cast<i32>(p.depths.size()) - 1;
        while (lo < hi) {
            i32 mid = (lo + hi) / 2;
            if (p.depths[mid] >= m) hi = mid; else lo = mid + 1;
        }
        i32 v = p.nodes[lo];
        i32 rk_a = rank_max_[0].find_ge(g_->range_lo(v), g_->range_hi(v), static_cast<i32>(m));
        if (rk_a < 0) continue;
        if (cfg_.same_string) {
            i32 rk_b = rank_max_[0].find_ge(g_->range_lo(v), rk_a - 1, static_cast<i32>(m));
            if (rk_b < 0) rk_b = rank_max_[0].find_ge(rk_a + 1, g_->range_hi(v), static_cast<i32>(m));
            if (rk_b < 0) continue;
            w.pos_a = g_->text().local(cfg_.part_a, g_->sarr().sa(rk_a));
            w.pos_b = g_->text().local(cfg_.part_a, g_->sarr().sa(rk_b));
        } else {
            i32 rk_b = rank_max_[1].find_ge(g_->range_lo(v), g_->range_hi(v), static_cast<i32>(m));
            if (rk_b < 0) continue;
            w.pos_a = g_->text().local(cfg_.part_a, g_->sarr().sa(rk_a));
            w.pos_b = g_->text().local(cfg_.part_b, g_->sarr().sa(rk_b));
        }
        return w;
    }
    return w; // positions zero: should not happen, callers assert in tests
}

// ---------------------------------------------------------------------------
// DecrementalLcs / DecrementalRepeat
// ---------------------------------------------------------------------------

DecrementalLcs::DecrementalLcs(const InternalQueries* iq, i64 d)
    : iq_(iq),
      bounded_(iq, d,
               DecrementalBounded::Config{iq->parts().s, iq->parts().t, 1, 1, false}),
      cover_(d) {}

DecrementalLcs::Answer DecrementalLcs::query() const {
    const Gst& g = iq_->gst();
    i64 m = bounded_.best_len();
    if (m < bounded_.d()) {
        auto w = bounded_.witness();
        return Answer{w.len, w.pos_a, w.pos_b};
    }
    // long case: anchor at difference-cover positions
    i32 ps = iq_->parts().s, pt = iq_->parts().t, psr = iq_->parts().sr, ptr = iq_->parts().tr;
    i64 ns = g.text().part_len(ps), nt = g.text().part_len(pt);
    auto fams = [&](int role, i32 part, i32 rev_part, i64 n) {
        std::vector<FamilyPair> out;
        for (i64 i : cover_.members(n)) {
            i64 right = bounded_.run_right(role, i);
            // a pair spanning the anchor would cross the gap (i-1, i)
            i64 left = bounded_.event_replaced(role, 2 * i - 1) ? 0 : bounded_.run_left(role, i);
            // left part reversed lives in the reversed text part
            Ref l = left > 0 ? Ref{g.text().global(rev_part, static_cast<i32>(n - (i - 1) + 1)),
                                   static_cast<i32>(left)}
                             : Ref{1, 0};
            Ref r = right > 0 ? Ref{g.text().global(part, static_cast<i32>(i)),
                                    static_cast<i32>(right)}
                              : Ref{1, 0};
            out.push_back(FamilyPair{l, r, static_cast<i32>(i)});
        }
        return out;
    };
    auto P = fams(0, ps, psr, ns);
    auto Q = fams(1, pt, ptr, nt);
    auto r = two_string_families_lcp(g, P, Q);
    if (r.value <= 0) { // should not happen when m == d
        auto w = bounded_.witness();
        return Answer{w.len, w.pos_a, w.pos_b};
    }
    return Answer{r.value, r.p_id - r.lcp1, r.q_id - r.lcp1};
}

DecrementalRepeat::DecrementalRepeat(const InternalQueries* iq, i64 d)
    : iq_(iq),
      bounded_(iq, d, DecrementalBounded::Config{iq->parts().s, iq->parts().s, 2, 2, true}),
      cover_(d) {}

DecrementalRepeat::Answer DecrementalRepeat::query() const {
    const Gst& g = iq_->gst();
    i64 m = bounded_.best_len();
    if (m < bounded_.d()) {
        auto w = bounded_.witness();
        return Answer{w.len, w.pos_a, w.pos_b};
    }
    i32 ps = iq_->parts().s, psr = iq_->parts().sr;
    i64 n = g.text().part_len(ps);
    auto members = cover_.members(n);
    std::vector<FamilyPair> all;
    for (i64 i : members) {
        i64 right = bounded_.run_right(0, i);
        i64 left = bounded_.event_replaced(0, 2 * i - 1) ? 0 : bounded_.run_left(0, i);
        Ref l = left > 0 ? Ref{g.text().global(psr, static_cast<i32>(n - (i - 1) + 1)),
                               static_cast<i32>(left)}
                         : Ref{1, 0};
        Ref r = right > 0
                    ? Ref{g.text().global(ps, static_cast<i32>(i)), static_cast<i32>(right)}
                    : Ref{1, 0};
        all.push_back(FamilyPair{l, r, static_cast<i32>(i)});
    }
    Answer best;
    int levels = 1;
    while ((1LL << levels) <= n) ++levels;
    for (int j = 0; j <= levels; ++j) {
        std::vector<FamilyPair> P, Q;
        for (auto& f : all) {
            if ((f.id >> j) & 1) Q.push_back(f);
            else P.push_back(f);
        }
        auto r = two_string_families_lcp(g, P, Q);
        if (r.value > best.len)
            best = Answer{r.value, r.p_id - r.lcp1, r.q_id - r.lcp1};
    }
    if (best.len <= 0) {
        auto w = bounded_.witness();
        return Answer{w.len, w.pos_a, w.pos_b};
    }
    return best;
}

} // namespace dynstr
