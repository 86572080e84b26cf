#ifndef DYNSTR_RANGE_STRUCTURES_HPP
#define DYNSTR_RANGE_STRUCTURES_HPP

#include <array>
#include <limits>
#include <optional>

#include "dynstr/common.hpp"

namespace dynstr {

constexpr i64 kNegInf = std::numeric_limits<i64>::min() / 4;
constexpr i64 kPosInf = std::numeric_limits<i64>::max() / 4;

struct GridPoint {
    i64 x = 0, y = 0;
    i64 w = 0;
    i32 payload = -1;
};

struct GridHit {
    i64 x, y, w;
    i32 payload;
};

// Static 2D range-maximum (and minimum) structure over weighted points:
// a segment tree over rank-reduced x, each node holding its points sorted by
// y with prefix max/min tables. Queries are O(log^2 n). Ties in weight break
// toward the smaller payload id.
class PointGridRmq {
public:
    PointGridRmq() = default;
    explicit PointGridRmq(std::vector<GridPoint> pts);

    bool empty() const { return pts_.empty(); }
    std::optional<GridHit> max_in(i64 x1, i64 x2, i64 y1, i64 y2) const;
    std::optional<GridHit> min_in(i64 x1, i64 x2, i64 y1, i64 y2) const;

private:
    std::optional<GridHit> query(i64 x1, i64 x2, i64 y1, i64 y2, bool want_max) const;

    std::vector<GridPoint> pts_;  // sorted by x
    i32 seg_n_ = 0;
    // per segment-tree node: slice [off, off+len) of ys_ / by_y_ sorted by y
    std::vector<i32> node_off_, node_len_;
    std::vector<i64> ys_;
    std::vector<i32> by_y_;       // index into pts_
    std::vector<i32> pref_max_, suf_max_, pref_min_, suf_min_; // argmin/argmax into pts_
};

// Static D-dimensional range-maximum over weighted points (2 <= D <= 6),
// implemented as a kd-tree with per-subtree bounding boxes and weight bounds.
// Exact; query cost is output-pruned rather than worst-case polylog, which is
// the memory-lean tradeoff at these dimensions.
class MultiDimRmq {
public:
    static constexpr int kMaxDim = 6;

    struct Point {
        std::array<i64, kMaxDim> x{};
        i64 w = 0;
        i32 payload = -1;
    };

    MultiDimRmq() = default;
    MultiDimRmq(int dim, std::vector<Point> pts);

    int dim() const { return dim_; }
    bool empty() const { return pts_.empty(); }

    // box: dim_ pairs [lo, hi]; use kNegInf/kPosInf for unbounded sides
    std::optional<std::pair<Point, i64>> max_in(const std::array<std::pair<i64, i64>, kMaxDim>& box) const;

private:
    void build(i32 lo, i32 hi, int axis);
    void query(i32 lo, i32 hi, const std::array<std::pair<i64, i64>, kMaxDim>& box,
               i32& best, i64& best_w) const;

    int dim_ = 0;
    std::vector<Point> pts_;
    struct NodeAgg {
        std::array<i64, kMaxDim> mn{}, mx{};
        i64 wmax = kNegInf;
        i32 split = -1;
    };
    std::vector<NodeAgg> agg_; // per (lo,hi) recursion node, indexed by midpoint
};

// Interval tree over integer coordinates: insert intervals [p, q], query how
// many inserted intervals cover a point. Boundary events (p,+1), (q+1,-1) in
// a treap keyed by coordinate with subtree delta sums.
class IntervalTree {
public:
    IntervalTree() : rng_state_(0x9e3779b97f4a7c15ULL) {}

    void insert(i64 p, i64 q) {
        require(p <= q, "interval_insert: p > q");
        add(p, +1);
        add(q + 1, -1);
        ++count_;
    }

    // number of inserted intervals [p, q] with p <= r <= q
    i64 count(i64 r) const { return prefix_sum(root_, r); }

    i64 inserted() const { return count_; }
    void clear() { nodes_.clear(); root_ = -1; count_ = 0; }

private:
    struct Node {
        i64 key;
        i64 delta, subtree_sum;
        u64 prio;
        i32 left = -1, right = -1;
    };

    void add(i64 key, i64 delta);
    i64 prefix_sum(i32 t, i64 r) const;
    void pull(i32 t);
    void split(i32 t, i64 key, i32& a, i32& b); // a: keys <= key, b: rest
    i32 merge(i32 a, i32 b);

    std::vector<Node> nodes_;
    i32 root_ = -1;
    i64 count_ = 0;
    u64 rng_state_;
};

} // namespace dynstr

#endif
