#include "doctest.h"

#include <random>
#include <set>

#include "dynstr/internal_queries.hpp"
#include "dynstr/oracle.hpp"
#include "test_util.hpp"

using namespace dynstr;
using namespace dynstr::testutil;
namespace orc = dynstr::oracle;

namespace {

// LCS supertext bundle: S, T, S^R, T^R
struct Pair {
    Gst g;
    InternalQueries iq;
    std::string s, t;

    Pair(std::string s_, std::string t_)
        : g(Gst::from_strings({s_, t_, std::string(s_.rbegin(), s_.rend()),
                               std::string(t_.rbegin(), t_.rend())})),
          iq(&g, PartMap{0, 1, 2, 3}),
          s(std::move(s_)),
          t(std::move(t_)) {}

    Ref s_ref(i64 i, i64 j) const { return Ref{g.text().global(0, (i32)i), (i32)(j - i + 1)}; }
    Ref t_ref(i64 i, i64 j) const { return Ref{g.text().global(1, (i32)i), (i32)(j - i + 1)}; }
};

std::vector<i64> flatten(const std::vector<ArithProg>& aps) {
    std::vector<i64> out;
    for (auto& ap : aps)
        for (i64 k = 0; k < ap.count; ++k) out.push_back(ap.at(k));
    std::sort(out.begin(), out.end());
    return out;
}

// naive prefix-of-y = suffix-of-z lengths in [lo, hi]
std::vector<i64> naive_psq(const std::string& y, const std::string& z, i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 l = lo; l <= std::min({hi, (i64)y.size(), (i64)z.size()}); ++l)
        if (y.compare(0, l, z, z.size() - l, l) == 0) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("piecewise lcp(P^w X, Y) matches naive construction") {
    // pinned example: P="ab", X="aa", Y="abababaa" -> f(0..5) = 1,3,5,8,7,7
    {
        Pair pr("abaaababababaa", "x");
        // P = s[1..2], X = s[3..4], Y = s[7..14]
        PiecewiseLcp f = pr.iq.lcp_power_prefix(pr.s_ref(1, 2), pr.s_ref(3, 4), pr.s_ref(7, 14));
        std::vector<i64> expect{1, 3, 5, 8, 7, 7};
        for (i64 w = 0; w < 6; ++w) CHECK(f.eval(w) == expect[w]);
    }
    // Y empty
    {
        Pair pr("ab", "x");
        PiecewiseLcp f = pr.iq.lcp_power_prefix(pr.s_ref(1, 2), pr.s_ref(1, 2), pr.s_ref(1, 0));
        for (i64 w = 0; w < 5; ++w) CHECK(f.eval(w) == 0);
    }
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 400; ++rep) {
        int n = rand_int(rng, 3, 40);
        std::string s = random_string(rng, n, rand_int(rng, 1, 2));
        Pair pr(s, "x");
        int p1 = rand_int(rng, 1, n), p2 = rand_int(rng, p1, n);
        int x1 = rand_int(rng, 1, n), x2 = rand_int(rng, x1 - 1, n); // allow empty X
        int y1 = rand_int(rng, 1, n), y2 = rand_int(rng, y1 - 1, n);
        PiecewiseLcp f = pr.iq.lcp_power_prefix(pr.s_ref(p1, p2), pr.s_ref(x1, x2), pr.s_ref(y1, y2));
        std::string P = s.substr(p1 - 1, p2 - p1 + 1);
        std::string X = x2 >= x1 ? s.substr(x1 - 1, x2 - x1 + 1) : "";
        std::string Y = y2 >= y1 ? s.substr(y1 - 1, y2 - y1 + 1) : "";
        i64 wmax = 4 * ((i64)Y.size() / (i64)P.size() + 2);
        std::string pw;
        for (i64 w = 0; w <= wmax; ++w) {
            std::string pwx = pw + X;
            size_t k = 0;
            while (k < pwx.size() && k < Y.size() && pwx[k] == Y[k]) ++k;
            REQUIRE(f.eval(w) == (i64)k);
            pw += P;
        }
    }
}

TEST_CASE("prefix_suffix_query: pinned examples") {
    Pair pr("aaaa", "aaaa");
    ArithProg ap = pr.iq.prefix_suffix_query(pr.s_ref(1, 4), pr.t_ref(1, 4), 2);
    CHECK(ap.first == 2);
    CHECK(ap.diff == 1);
    CHECK(ap.count == 2);

    Pair pr2("ab", "ab");
    CHECK(pr2.iq.prefix_suffix_query(pr2.s_ref(1, 2), pr2.t_ref(1, 2), 3).empty());
}

TEST_CASE("prefix_suffix_query agrees with naive enumeration") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 300; ++rep) {
        int n = rand_int(rng, 1, 60), m = rand_int(rng, 1, 60);
        int sigma = rand_int(rng, 1, 2);
        std::string s = random_string(rng, n, sigma), t = random_string(rng, m, sigma);
        Pair pr(s, t);
        int i1 = rand_int(rng, 1, n), i2 = rand_int(rng, i1, n);
        int j1 = rand_int(rng, 1, m), j2 = rand_int(rng, j1, m);
        std::string Y = s.substr(i1 - 1, i2 - i1 + 1), Z = t.substr(j1 - 1, j2 - j1 + 1);
        for (i64 d = 1; d <= (i64)Y.size(); d <<= 1) {
            ArithProg ap = pr.iq.prefix_suffix_query(pr.s_ref(i1, i2), pr.t_ref(j1, j2), d);
            std::vector<i64> got;
            for (i64 k = 0; k < ap.count; ++k) got.push_back(ap.at(k));
            REQUIRE(got == naive_psq(Y, Z, d, 2 * d - 1));
        }
    }
}

TEST_CASE("borders_progressions and shortest_period") {
    Pair pr("aaaa", "aabaa");
    auto b1 = flatten(pr.iq.borders_progressions(pr.s_ref(1, 4)));
    CHECK(b1 == std::vector<i64>{1, 2, 3});
    auto b2 = flatten(pr.iq.borders_progressions(pr.t_ref(1, 5)));
    CHECK(b2 == std::vector<i64>{1, 2});
    CHECK(pr.iq.borders_progressions(pr.s_ref(1, 1)).empty());
    CHECK(pr.iq.shortest_period(pr.s_ref(1, 4)) == 1);
    CHECK_THROWS_AS(pr.iq.shortest_period(pr.s_ref(1, 0)), bad_query);

    std::mt19937_64 rng(107);
    for (int rep = 0; rep < 400; ++rep) {
        int n = rand_int(rng, 1, 80);
        std::string s = random_string(rng, n, rand_int(rng, 1, 3));
        Pair p2(s, "x");
        int i1 = rand_int(rng, 1, n), i2 = rand_int(rng, i1, n);
        std::string U = s.substr(i1 - 1, i2 - i1 + 1);
        auto aps = p2.iq.borders_progressions(p2.s_ref(i1, i2));
        REQUIRE(flatten(aps) == orc::naive_borders(U));
        // progressions with >= 3 elements have diff equal to the borders' period
        for (auto& ap : aps)
            if (ap.count >= 3)
                for (i64 k = 0; k < ap.count; ++k)
                    REQUIRE(orc::naive_period(U.substr(0, ap.at(k))) == ap.diff);
        REQUIRE(p2.iq.shortest_period(p2.s_ref(i1, i2)) == orc::naive_period(U));
    }
}

TEST_CASE("lcs_prefsuf pinned and randomized") {
    Pair ex("caabaaa", "aaaaaab");
    auto full = ex.iq.lcs_prefsuf(Side::Suffix, 1, Side::Suffix, 1);
    CHECK(full.len == 3); // Example 1
    CHECK(ex.iq.lcs_prefsuf(Side::Prefix, 0, Side::Suffix, 1).len == 0);

    std::mt19937_64 rng(109);
    for (int rep = 0; rep < 120; ++rep) {
        int n = rand_int(rng, 1, 40), m = rand_int(rng, 1, 40);
        int sigma = rand_int(rng, 1, 3);
        std::string s = random_string(rng, n, sigma), t = random_string(rng, m, sigma);
        Pair pr(s, t);
        for (int q = 0; q < 40; ++q) {
            Side sd = rng() % 2 ? Side::Prefix : Side::Suffix;
            Side td = rng() % 2 ? Side::Prefix : Side::Suffix;
            i64 i = sd == Side::Prefix ? rand_int(rng, 0, n) : rand_int(rng, 1, n + 1);
            i64 j = td == Side::Prefix ? rand_int(rng, 0, m) : rand_int(rng, 1, m + 1);
            std::string ss = sd == Side::Prefix ? s.substr(0, i) : s.substr(i - 1);
            std::string tt = td == Side::Prefix ? t.substr(0, j) : t.substr(j - 1);
            auto got = pr.iq.lcs_prefsuf(sd, i, td, j);
            auto expect = orc::naive_lcs(ss, tt);
            REQUIRE(got.len == expect.len);
            if (got.len > 0) {
                // witness positions point at equal fragments inside the cuts
                i64 ps = got.pos_s, pt = got.pos_t;
                REQUIRE(s.substr(ps - 1, got.len) == t.substr(pt - 1, got.len));
                if (sd == Side::Prefix) REQUIRE(ps + got.len - 1 <= i);
                else REQUIRE(ps >= i);
                if (td == Side::Prefix) REQUIRE(pt + got.len - 1 <= j);
                else REQUIRE(pt >= j);
            }
        }
    }
}

TEST_CASE("lcs_substring_vs_T pinned and randomized") {
    Pair ex("caabaaa", "aaaaaab");
    CHECK(ex.iq.lcs_substring_vs_T(1, 7).len == 3);
    CHECK(ex.iq.lcs_substring_vs_T(5, 7).len == 3); // "aaa" occurs in T
    CHECK_THROWS_AS(ex.iq.lcs_substring_vs_T(3, 2), bad_query);

    std::mt19937_64 rng(113);
    for (int rep = 0; rep < 150; ++rep) {
        int n = rand_int(rng, 1, 50), m = rand_int(rng, 1, 50);
        int sigma = rand_int(rng, 1, 3);
        std::string s = random_string(rng, n, sigma), t = random_string(rng, m, sigma);
        Pair pr(s, t);
        for (int q = 0; q < 30; ++q) {
            int a = rand_int(rng, 1, n), b = rand_int(rng, a, n);
            auto got = pr.iq.lcs_substring_vs_T(a, b);
            auto expect = orc::naive_lcs(s.substr(a - 1, b - a + 1), t);
            REQUIRE(got.len == expect.len);
            if (got.len > 0) {
                REQUIRE(got.pos_s >= a);
                REQUIRE(got.pos_s + got.len - 1 <= b);
                REQUIRE(s.substr(got.pos_s - 1, got.len) == t.substr(got.pos_t - 1, got.len));
            }
        }
    }
}
