#include "doctest.h"

#include <random>

#include "dynstr/hia.hpp"
#include "dynstr/oracle.hpp"
#include "test_util.hpp"

using namespace dynstr;
using namespace dynstr::testutil;
namespace orc = dynstr::oracle;

namespace {

struct Fixture {
    Gst g;
    InternalQueries iq;
    HiaIndex hia;
    std::string x;

    explicit Fixture(std::string s)
        : g(Gst::from_strings({s, std::string(s.rbegin(), s.rend())})),
          iq(&g, PartMap{0, 0, 1, 1}),
          hia(&iq, 0, 1),
          x(std::move(s)) {}
};

// exhaustive reference for extended HIA; induction follows the paper's
// sentinel-free weighted trees, i.e. a pair is induced by i when the
// sentinel-free labels occur around position i
std::optional<i64> brute_extended(const HiaIndex& h, const std::string& x, i32 v1, i32 v2,
                                  i64 a, i64 b, int fixed) {
    const Gst& t1 = h.t1();
    const Gst& t2 = h.t2();
    i32 n = static_cast<i32>(x.size());
    std::string xr(x.rbegin(), x.rend());
    std::vector<i32> anc1{v1}, anc2{v2};
    if (fixed != 1)
        for (i32 u = v1; u != 0;) { u = t1.parent(u); anc1.push_back(u); }
    if (fixed != 2)
        for (i32 u = v2; u != 0;) { u = t2.parent(u); anc2.push_back(u); }
    std::optional<i64> best;
    for (i32 u1 : anc1)
        for (i32 u2 : anc2) {
            i64 d1 = h.weight1(u1), d2 = h.weight2(u2);
            std::string s1r = xr.substr(t1.first_leaf_pos(u1) - 1, d1);
            std::string s1(s1r.rbegin(), s1r.rend());
            std::string s2 = x.substr(t2.first_leaf_pos(u2) - 1, d2);
            bool found = false;
            for (i64 i = 1; i <= n + 1 && !found; ++i) {
                if (i - d1 < a || i + d2 > b + 1) continue;
                if (i - 1 - d1 < 0 || i - 1 + d2 > n) continue;
                if (x.compare(i - 1 - d1, d1, s1) != 0) continue;
                if (x.compare(i - 1, d2, s2) != 0) continue;
                found = true;
            }
            if (found && (!best || d1 + d2 > *best)) best = d1 + d2;
        }
    return best;
}

} // namespace

TEST_CASE("hia: root pair and disjoint label windows") {
    Fixture f("banana");
    auto r = f.hia.hia_query(f.hia.t1().root(), f.hia.t2().root());
    REQUIRE(r);
    CHECK(r->total == 0);
    // impossible window
    CHECK_THROWS_AS(f.hia.extended_hia_query(0, 0, 3, 2), bad_query);
}

TEST_CASE("hia and extended hia agree with exhaustive enumeration") {
    std::mt19937_64 rng(211);
    for (int rep = 0; rep < 60; ++rep) {
        int n = rand_int(rng, 2, 36);
        Fixture f(random_string(rng, n, rand_int(rng, 1, 3)));
        const Gst& t1 = f.hia.t1();
        const Gst& t2 = f.hia.t2();
        for (int q = 0; q < 60; ++q) {
            i32 v1 = rand_int(rng, 0, t1.node_count() - 1);
            i32 v2 = rand_int(rng, 0, t2.node_count() - 1);
            i64 a = rand_int(rng, 1, n), b = rand_int(rng, 1, n);
            if (a > b) std::swap(a, b);
            int fixed = rand_int(rng, 0, 2);
            auto got = f.hia.extended_hia_query(v1, v2, a, b, fixed);
            auto expect = brute_extended(f.hia, f.x, v1, v2, a, b, fixed);
            REQUIRE(got.has_value() == expect.has_value());
            if (got) {
                REQUIRE(got->total == *expect);
                // the witness leaf induces the reported pair within the window
                REQUIRE(a <= got->leaf - got->d1);
                REQUIRE(got->leaf + got->d2 <= b + 1);
            }
            // unconstrained window coincides with the plain query
            if (q % 10 == 0) {
                auto full = f.hia.extended_hia_query(v1, v2, 1, n, fixed);
                auto plain = f.hia.hia_query(v1, v2, fixed);
                REQUIRE(full.has_value() == plain.has_value());
                if (full) REQUIRE(full->total == plain->total);
            }
        }
    }
}

TEST_CASE("three substrings lcs: pinned examples") {
    Fixture f("banana");
    auto r = f.hia.three_substrings_lcs(Loc{1, 3}, Loc{2, 4}, Loc{1, 6}); // ban, ana, banana
    CHECK(r.total == 6);
    CHECK(r.xlen == 3);
    // U empty: longest prefix of V occurring in W
    auto r2 = f.hia.three_substrings_lcs(Loc{1, 0}, Loc{2, 4}, Loc{1, 6});
    CHECK(r2.total == 3);
    CHECK(r2.xlen == 0);

    // window-clamped optimum needs an implicit mid-edge ancestor:
    // U = "zab", V = "cd", W = T[3..5] = "bcd" inside T = "zabcd"
    Fixture g("zabcd");
    auto r3 = g.hia.three_substrings_lcs(Loc{1, 3}, Loc{4, 5}, Loc{3, 5});
    CHECK(r3.total == 3);
    CHECK(r3.xlen == 1);
    CHECK(r3.wpos == 3);
}

TEST_CASE("three substrings lcs agrees with brute force") {
    std::mt19937_64 rng(223);
    for (int rep = 0; rep < 80; ++rep) {
        int n = rand_int(rng, 2, 50);
        int sigma = rand_int(rng, 1, 3);
        std::string x = random_string(rng, n, sigma);
        Fixture f(x);
        for (int q = 0; q < 60; ++q) {
            int u1 = rand_int(rng, 1, n), u2 = rand_int(rng, u1 - 1, n);
            int v1 = rand_int(rng, 1, n), v2 = rand_int(rng, v1 - 1, n);
            int w1 = rand_int(rng, 1, n), w2 = rand_int(rng, w1, n);
            Loc u{u1, u2}, v{v1, v2}, w{w1, w2};
            auto got = f.hia.three_substrings_lcs(u, v, w);
            std::string us = u2 >= u1 ? x.substr(u1 - 1, u2 - u1 + 1) : "";
            std::string vs = v2 >= v1 ? x.substr(v1 - 1, v2 - v1 + 1) : "";
            std::string ws = x.substr(w1 - 1, w2 - w1 + 1);
            auto expect = orc::naive_three_substrings(us, vs, ws);
            REQUIRE(got.total == expect.total);
            if (got.total > 0) {
                // verify the witness
                REQUIRE(got.wpos >= w.lo);
                REQUIRE(got.wpos + got.total - 1 <= w.hi);
                std::string xy = x.substr(got.wpos - 1, got.total);
                std::string xs = xy.substr(0, got.xlen), ys = xy.substr(got.xlen);
                REQUIRE(us.size() >= xs.size());
                REQUIRE(us.substr(us.size() - xs.size()) == xs);
                REQUIRE(vs.substr(0, ys.size()) == ys);
            }
        }
    }
}
