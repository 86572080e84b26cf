#include "doctest.h"

#include <random>

#include "dynstr/range_structures.hpp"
#include "dynstr/wavelet.hpp"
#include "test_util.hpp"

using namespace dynstr;
using namespace dynstr::testutil;

TEST_CASE("grid rmq: tiny cases") {
    PointGridRmq empty(std::vector<GridPoint>{});
    CHECK(!empty.max_in(kNegInf, kPosInf, kNegInf, kPosInf));

    PointGridRmq g({{1, 1, 5, 0}, {3, 2, 7, 1}});
    auto a = g.max_in(1, 3, 1, 1);
    REQUIRE(a);
    CHECK(a->w == 5);
    auto b = g.max_in(0, 4, 0, 4);
    REQUIRE(b);
    CHECK(b->w == 7);
    CHECK(!g.max_in(4, 9, 0, 4));
}

TEST_CASE("grid rmq agrees with exhaustive scan") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 8; ++rep) {
        int n = rand_int(rng, 1, 1000);
        std::vector<GridPoint> pts(n);
        for (int i = 0; i < n; ++i)
            pts[i] = GridPoint{rand_int(rng, -50, 50), rand_int(rng, -50, 50),
                               rand_int(rng, -100, 100), i};
        PointGridRmq g(pts);
        for (int q = 0; q < 400; ++q) {
            i64 x1 = rand_int(rng, -60, 60), x2 = rand_int(rng, -60, 60);
            i64 y1 = rand_int(rng, -60, 60), y2 = rand_int(rng, -60, 60);
            if (x1 > x2) std::swap(x1, x2);
            if (y1 > y2) std::swap(y1, y2);
            if (q % 4 == 0) { x1 = kNegInf; }
            if (q % 5 == 0) { y2 = kPosInf; }
            i64 best = kNegInf;
            i64 bestmin = kPosInf;
            for (auto& p : pts)
                if (p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2) {
                    best = std::max(best, p.w);
                    bestmin = std::min(bestmin, p.w);
                }
            auto got = g.max_in(x1, x2, y1, y2);
            auto gotmin = g.min_in(x1, x2, y1, y2);
            if (best == kNegInf) {
                REQUIRE(!got);
                REQUIRE(!gotmin);
            } else {
                REQUIRE(got);
                REQUIRE(got->w == best);
                // payload identifies a point attaining the max
                REQUIRE(pts[got->payload].w == best);
                REQUIRE(gotmin->w == bestmin);
            }
        }
    }
}

TEST_CASE("multidim rmq: D=6 single point and empty box") {
    MultiDimRmq::Point p;
    p.x = {1, 2, 3, 4, 5, 6};
    p.w = 42;
    p.payload = 0;
    MultiDimRmq m(6, {p});
    std::array<std::pair<i64, i64>, 6> box;
    for (int d = 0; d < 6; ++d) box[d] = {p.x[d], p.x[d]};
    auto hit = m.max_in(box);
    REQUIRE(hit);
    CHECK(hit->second == 42);
    box[3] = {100, 200};
    CHECK(!m.max_in(box));
}

TEST_CASE("multidim rmq agrees with exhaustive scan (D=6)") {
    std::mt19937_64 rng(17);
    int n = 500;
    std::vector<MultiDimRmq::Point> pts(n);
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < 6; ++d) pts[i].x[d] = rand_int(rng, 0, 30);
        pts[i].w = rand_int(rng, -40, 40);
        pts[i].payload = i;
    }
    MultiDimRmq m(6, pts);
    for (int q = 0; q < 1000; ++q) {
        std::array<std::pair<i64, i64>, 6> box;
        for (int d = 0; d < 6; ++d) {
            i64 a = rand_int(rng, -2, 32), b = rand_int(rng, -2, 32);
            if (a > b) std::swap(a, b);
            box[d] = {a, b};
        }
        i64 best = kNegInf;
        for (auto& p : pts) {
            bool in = true;
            for (int d = 0; d < 6; ++d)
                if (p.x[d] < box[d].first || p.x[d] > box[d].second) { in = false; break; }
            if (in) best = std::max(best, p.w);
        }
        auto got = m.max_in(box);
        if (best == kNegInf) REQUIRE(!got);
        else {
            REQUIRE(got);
            REQUIRE(got->second == best);
        }
    }
}

TEST_CASE("interval tree basics") {
    IntervalTree t;
    CHECK(t.count(3) == 0);
    t.insert(2, 5);
    t.insert(4, 8);
    CHECK(t.count(4) == 2);
    CHECK(t.count(1) == 0);
    CHECK(t.count(6) == 1);
    CHECK_THROWS_AS(t.insert(5, 4), bad_query);
}

TEST_CASE("interval tree agrees with naive scan") {
    std::mt19937_64 rng(29);
    IntervalTree t;
    std::vector<std::pair<int, int>> naive;
    i64 last_count_at_zero = 0;
    for (int step = 0; step < 10000; ++step) {
        if (rng() % 2 == 0) {
            int p = rand_int(rng, -500, 500), q = rand_int(rng, -500, 500);
            if (p > q) std::swap(p, q);
            t.insert(p, q);
            naive.push_back({p, q});
        } else {
            int r = rand_int(rng, -600, 600);
            i64 expect = 0;
            for (auto& [p, q] : naive)
                if (p <= r && r <= q) ++expect;
            REQUIRE(t.count(r) == expect);
        }
        // monotone under inserted-set inclusion
        i64 now = t.count(0);
        REQUIRE(now >= last_count_at_zero);
        last_count_at_zero = now;
    }
}

TEST_CASE("wavelet tree successor and predecessor") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rand_int(rng, 1, 400);
        std::vector<i32> seq(n);
        for (auto& v : seq) v = rand_int(rng, 0, 300);
        WaveletTree wt(seq);
        for (int q = 0; q < 300; ++q) {
            int l = rand_int(rng, 0, n - 1), r = rand_int(rng, 0, n - 1);
            if (l > r) std::swap(l, r);
            int lo = rand_int(rng, -5, 310), hi = rand_int(rng, -5, 310);
            i32 expect_succ = -1, expect_pred = -1;
            for (int i = l; i <= r; ++i) {
                if (seq[i] >= lo && (expect_succ < 0 || seq[i] < expect_succ)) expect_succ = seq[i];
                if (seq[i] <= hi && (expect_pred < 0 || seq[i] > expect_pred)) expect_pred = seq[i];
            }
            auto s = wt.successor(l, r, lo);
            auto p = wt.predecessor(l, r, hi);
            REQUIRE((s ? *s : -1) == expect_succ);
            REQUIRE((p ? *p : -1) == expect_pred);
        }
    }
}
