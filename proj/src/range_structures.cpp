#include "dynstr/range_structures.hpp"

#include <algorithm>

namespace dynstr {

// ---------------------------------------------------------------------------
// PointGridRmq
// ---------------------------------------------------------------------------

PointGridRmq::PointGridRmq(std::vector<GridPoint> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end(), [](const GridPoint& a, const GridPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    i32 n = static_cast<i32>(pts_.size());
    if (n == 0) return;
    seg_n_ = 1;
    while (seg_n_ < n) seg_n_ <<= 1;
    node_off_.assign(2 * seg_n_, 0);
    node_len_.assign(2 * seg_n_, 0);

    // total storage: one entry per point per level
    i32 levels = floor_log2(seg_n_) + 1;
    ys_.reserve(static_cast<size_t>(n) * levels);
    by_y_.reserve(static_cast<size_t>(n) * levels);

    // build bottom-up: leaves then merges (merge by y)
    std::vector<std::vector<i32>> tmp(2 * seg_n_);
    for (i32 i = 0; i < n; ++i) tmp[seg_n_ + i] = {i};
    for (i32 v = seg_n_ - 1; v >= 1; --v) {
        auto& a = tmp[2 * v];
        auto& b = tmp[2 * v + 1];
        auto& out = tmp[v];
        out.resize(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), [&](i32 p, i32 q) {
            if (pts_[p].y != pts_[q].y) return pts_[p].y < pts_[q].y;
            return p < q;
        });
    }
    auto better_max = [&](i32 p, i32 q) {
        if (p < 0) return q;
        if (q < 0) return p;
        if (pts_[p].w != pts_[q].w) return pts_[p].w > pts_[q].w ? p : q;
        return pts_[p].payload <= pts_[q].payload ? p : q;
    };
    auto better_min = [&](i32 p, i32 q) {
        if (p < 0) return q;
        if (q < 0) return p;
        if (pts_[p].w != pts_[q].w) return pts_[p].w < pts_[q].w ? p : q;
        return pts_[p].payload <= pts_[q].payload ? p : q;
    };
    for (i32 v = 1; v < 2 * seg_n_; ++v) {
        node_off_[v] = static_cast<i32>(ys_.size());
        node_len_[v] = static_cast<i32>(tmp[v].size());
        i32 run_max = -1, run_min = -1;
        for (i32 idx : tmp[v]) {
            ys_.push_back(pts_[idx].y);
            by_y_.push_back(idx);
        }
        pref_max_.resize(ys_.size());
        pref_min_.resize(ys_.size());
        for (i32 k = 0; k < node_len_[v]; ++k) {
            i32 idx = by_y_[node_off_[v] + k];
            run_max = better_max(run_max, idx);
            run_min = better_min(run_min, idx);
            pref_max_[node_off_[v] + k] = run_max;
            pref_min_[node_off_[v] + k] = run_min;
        }
        run_max = run_min = -1;
        suf_max_.resize(ys_.size());
        suf_min_.resize(ys_.size());
        for (i32 k = node_len_[v] - 1; k >= 0; --k) {
            i32 idx = by_y_[node_off_[v] + k];
            run_max = better_max(run_max, idx);
            run_min = better_min(run_min, idx);
            suf_max_[node_off_[v] + k] = run_max;
            suf_min_[node_off_[v] + k] = run_min;
        }
    }
}

std::optional<GridHit> PointGridRmq::query(i64 x1, i64 x2, i64 y1, i64 y2, bool want_max) const {
    if (pts_.empty() || x1 > x2 || y1 > y2) return std::nullopt;
    // find point-index interval [lo, hi) with x in [x1, x2]
    auto xless = [&](const GridPoint& p, i64 x) { return p.x < x; };
    i32 lo = static_cast<i32>(std::lower_bound(pts_.begin(), pts_.end(), x1, xless) - pts_.begin());
    i32 hi = static_cast<i32>(std::lower_bound(pts_.begin(), pts_.end(), x2 + 1, xless) - pts_.begin());
    if (lo >= hi) return std::nullopt;

    i32 best = -1;
    auto better = [&](i32 p, i32 q) {
        if (p < 0) return q;
        if (q < 0) return p;
        if (pts_[p].w != pts_[q].w)
            return (want_max ? pts_[p].w > pts_[q].w : pts_[p].w < pts_[q].w) ? p : q;
        return pts_[p].payload <= pts_[q].payload ? p : q;
    };

    // canonical segment-tree nodes over the leaf interval [lo, hi); when the
    // y-slice inside a node is neither a prefix nor a suffix of its y-order,
    // descend into children (one-sided y queries never do)
    std::vector<i32> work;
    i32 a = lo + seg_n_, b = hi + seg_n_;
    while (a < b) {
        if (a & 1) work.push_back(a++);
        if (b & 1) work.push_back(--b);
        a >>= 1; b >>= 1;
    }
    for (size_t wi = 0; wi < work.size(); ++wi) {
        i32 v = work[wi];
        i32 off = node_off_[v], len = node_len_[v];
        if (len == 0) continue;
        auto first = ys_.begin() + off, last = first + len;
        i32 k1 = static_cast<i32>(std::lower_bound(first, last, y1) - first);
        i32 k2 = static_cast<i32>(std::upper_bound(first, last, y2) - first) - 1;
        if (k1 > k2) continue;
        if (k1 == 0) {
            best = better(best, want_max ? pref_max_[off + k2] : pref_min_[off + k2]);
        } else if (k2 == len - 1) {
            best = better(best, want_max ? suf_max_[off + k1] : suf_min_[off + k1]);
        } else {
            work.push_back(2 * v);
            work.push_back(2 * v + 1);
        }
    }
    if (best < 0) return std::nullopt;
    return GridHit{pts_[best].x, pts_[best].y, pts_[best].w, pts_[best].payload};
}

std::optional<GridHit> PointGridRmq::max_in(i64 x1, i64 x2, i64 y1, i64 y2) const {
    return query(x1, x2, y1, y2, true);
}

std::optional<GridHit> PointGridRmq::min_in(i64 x1, i64 x2, i64 y1, i64 y2) const {
    return query(x1, x2, y1, y2, false);
}

// ---------------------------------------------------------------------------
// MultiDimRmq
// ---------------------------------------------------------------------------

MultiDimRmq::MultiDimRmq(int dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
    require(dim >= 1 && dim <= kMaxDim, "MultiDimRmq: dimension out of range");
    agg_.assign(pts_.size(), NodeAgg{});
    if (!pts_.empty()) build(0, static_cast<i32>(pts_.size()) - 1, 0);
}

void MultiDimRmq::build(i32 lo, i32 hi, int axis) {
    i32 mid = lo + (hi - lo) / 2;
    std::nth_element(pts_.begin() + lo, pts_.begin() + mid, pts_.begin() + hi + 1,
                     [&](const Point& a, const Point& b) { return a.x[axis] < b.x[axis]; });
    NodeAgg& a = agg_[mid];
    a.split = axis;
    for (int d = 0; d < dim_; ++d) { a.mn[d] = kPosInf; a.mx[d] = kNegInf; }
    a.wmax = kNegInf;
    for (i32 i = lo; i <= hi; ++i) {
        for (int d = 0; d < dim_; ++d) {
            a.mn[d] = std::min(a.mn[d], pts_[i].x[d]);
            a.mx[d] = std::max(a.mx[d], pts_[i].x[d]);
        }
        a.wmax = std::max(a.wmax, pts_[i].w);
    }
    int next = (axis + 1) % dim_;
    if (lo < mid) build(lo, mid - 1, next);
    if (mid < hi) build(mid + 1, hi, next);
}

void MultiDimRmq::query(i32 lo, i32 hi, const std::array<std::pair<i64, i64>, kMaxDim>& box,
                        i32& best, i64& best_w) const {
    if (lo > hi) return;
    i32 mid = lo + (hi - lo) / 2;
    const NodeAgg& a = agg_[mid];
    if (best >= 0 && a.wmax < best_w) return; // equal weights still explored for payload ties
    for (int d = 0; d < dim_; ++d) {
        if (a.mx[d] < box[d].first || a.mn[d] > box[d].second) return;
    }
    const Point& p = pts_[mid];
    bool inside = true;
    for (int d = 0; d < dim_; ++d)
        if (p.x[d] < box[d].first || p.x[d] > box[d].second) { inside = false; break; }
    if (inside) {
        if (p.w > best_w || (p.w == best_w && (best < 0 || p.payload < pts_[best].payload))) {
            best = mid;
            best_w = p.w;
        }
    }
    if (lo < mid) query(lo, mid - 1, box, best, best_w);
    if (mid < hi) query(mid + 1, hi, box, best, best_w);
}

std::optional<std::pair<MultiDimRmq::Point, i64>> MultiDimRmq::max_in(
    const std::array<std::pair<i64, i64>, kMaxDim>& box) const {
    if (pts_.empty()) return std::nullopt;
    i32 best = -1;
    i64 best_w = kNegInf;
    query(0, static_cast<i32>(pts_.size()) - 1, box, best, best_w);
    if (best < 0) return std::nullopt;
    return std::make_pair(pts_[best], pts_[best].w);
}

// ---------------------------------------------------------------------------
// IntervalTree
// ---------------------------------------------------------------------------

void IntervalTree::pull(i32 t) {
    Node& nd = nodes_[t];
    nd.subtree_sum = nd.delta;
    if (nd.left >= 0) nd.subtree_sum += nodes_[nd.left].subtree_sum;
    if (nd.right >= 0) nd.subtree_sum += nodes_[nd.right].subtree_sum;
}

void IntervalTree::split(i32 t, i64 key, i32& a, i32& b) {
    if (t < 0) { a = b = -1; return; }
    if (nodes_[t].key <= key) {
        split(nodes_[t].right, key, nodes_[t].right, b);
        a = t;
    } else {
        split(nodes_[t].left, key, a, nodes_[t].left);
        b = t;
    }
    pull(t);
}

i32 IntervalTree::merge(i32 a, i32 b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (nodes_[a].prio > nodes_[b].prio) {
        nodes_[a].right = merge(nodes_[a].right, b);
        pull(a);
        return a;
    }
    nodes_[b].left = merge(a, nodes_[b].left);
    pull(b);
    return b;
}

void IntervalTree::add(i64 key, i64 delta) {
    i32 a, b, c;
    split(root_, key - 1, a, b);
    split(b, key, b, c);
    if (b >= 0) { // keys are unique, so this part is a single node
        nodes_[b].delta += delta;
        pull(b);
    } else {
        rng_state_ = splitmix64(rng_state_);
        Node nd;
        nd.key = key;
        nd.delta = nd.subtree_sum = delta;
        nd.prio = rng_state_;
        nodes_.push_back(nd);
        b = static_cast<i32>(nodes_.size()) - 1;
    }
    root_ = merge(merge(a, b), c);
}

i64 IntervalTree::prefix_sum(i32 t, i64 r) const {
    i64 acc = 0;
    while (t >= 0) {
        if (nodes_[t].key <= r) {
            acc += nodes_[t].delta;
            if (nodes_[t].left >= 0) acc += nodes_[nodes_[t].left].subtree_sum;
            t = nodes_[t].right;
        } else {
            t = nodes_[t].left;
        }
    }
    return acc;
}

} // namespace dynstr
