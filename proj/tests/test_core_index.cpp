#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "dynstr/gst.hpp"
#include "test_util.hpp"

using namespace dynstr;
using namespace dynstr::testutil;

namespace {

std::string materialize(const PartedText& t) {
    std::string s;
    for (i32 i = 1; i <= t.size(); ++i) {
        i32 c = t.at(i);
        s.push_back(c >= PartedText::kCharShift ? static_cast<char>(c - PartedText::kCharShift)
                                                : static_cast<char>(c)); // sentinel as raw small byte
    }
    return s;
}

// all start positions of `pat` in `s` (1-based)
std::vector<int> naive_occurrences(const std::string& s, const std::string& pat) {
    std::vector<int> out;
    if (pat.empty()) return out;
    for (size_t i = 0; i + pat.size() <= s.size(); ++i)
        if (s.compare(i, pat.size(), pat) == 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

} // namespace

TEST_CASE("gst: single character string") {
    Gst g = Gst::from_strings({"a"});
    CHECK(g.n() == 2);           // "a#"
    CHECK(g.node_count() == 3);  // root + leaf "a#" + leaf "#"
    CHECK(g.leaf_count(g.root()) == 2);
    CHECK_THROWS_AS(Gst::from_strings({""}), bad_query);
}

TEST_CASE("gst: deepest both-origin node of Example 1 pair has depth 3") {
    Gst g = Gst::from_strings({"caabaaa", "aaaaaab"});
    i32 best = 0;
    for (i32 v = 0; v < g.node_count(); ++v) {
        if (g.occ_count(v, 0) >= 1 && g.occ_count(v, 1) >= 1) best = std::max(best, g.depth(v));
    }
    CHECK(best == 3); // LCS "aab"
}

TEST_CASE("gst: occurrence counts on banana") {
    Gst g = Gst::from_strings({"banana"});
    NodeHandle h = g.locus(2, 4); // "ana"
    CHECK(h.depth == 3);
    CHECK(g.occ_count(h.edge, 0) == 2);
}

TEST_CASE("lce basics") {
    Gst g = Gst::from_strings({"caabaaa"});
    i32 n = g.n();
    CHECK(g.lce(2, 2) == n - 1);            // identity
    CHECK(g.lce(2, 5) == 2);                // "aabaaa#" vs "aaa#" share "aa"
    CHECK_THROWS_AS(g.lce(0, 1), bad_query);

    Gst g2 = Gst::from_strings({"ab", "ab"});
    // suffix "ab#1ab#2" vs "ab#2": mismatch at the sentinel
    CHECK(g2.lce(1, 4) == 2);
}

TEST_CASE("lce equals naive comparison, exhaustive on short strings") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        int len = rand_int(rng, 1, 60);
        std::string s = random_string(rng, len, rand_int(rng, 1, 3));
        Gst g = Gst::from_strings({s});
        std::string t = materialize(g.text());
        for (i32 i = 1; i <= g.n(); ++i)
            for (i32 j = 1; j <= g.n(); ++j)
                REQUIRE(g.lce(i, j) == naive_lcp(t, i, t, j));
    }
}

TEST_CASE("lce_reverse via reversed text") {
    // longest common suffix of prefixes of "abcab" ending at 2 and 5 is "ab"
    std::string s = "abcab";
    std::string rev(s.rbegin(), s.rend());
    Gst gr = Gst::from_strings({rev});
    int n = static_cast<int>(s.size());
    auto lcsuf = [&](int i, int j) {
        if (i == 0 || j == 0) return 0;
        return static_cast<int>(std::min<i32>(gr.lce(n - i + 1, n - j + 1),
                                              std::min(i, j)));
    };
    CHECK(lcsuf(2, 5) == 2);
    CHECK(lcsuf(0, 3) == 0);
    CHECK(lcsuf(5, 5) == 5);
}

TEST_CASE("locus trivial cases") {
    Gst g = Gst::from_strings({"banana"});
    // full suffix locus is a leaf
    NodeHandle h = g.locus(3, 6);
    CHECK(g.depth(h.edge) >= h.depth);
    SaRange r = g.sa_range(h);
    CHECK(r.size() == 1);
    // single character
    NodeHandle h1 = g.locus(1, 1);
    CHECK(h1.depth == 1);
    CHECK_THROWS_AS(g.locus(4, 3), bad_query);
}

TEST_CASE("sa_range of locus lists exactly the naive occurrences") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        int len = rand_int(rng, 2, 80);
        std::string s = random_string(rng, len, rand_int(rng, 2, 4));
        Gst g = Gst::from_strings({s});
        for (int q = 0; q < 250; ++q) {
            int i = rand_int(rng, 1, len);
            int j = rand_int(rng, i, len);
            NodeHandle h = g.locus(i, j);
            SaRange r = g.sa_range(h);
            std::vector<int> got;
            for (i32 k = r.lo; k <= r.hi; ++k) {
                i32 pos = g.sarr().sa(k);
                // occurrences may stick into the sentinel region only if they
                // are genuine text occurrences; length filter handles it
                if (pos + (j - i + 1) - 1 <= len) got.push_back(pos);
            }
            std::sort(got.begin(), got.end());
            auto expect = naive_occurrences(s, s.substr(i - 1, j - i + 1));
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("sa range of root and of 'an' in banana") {
    Gst g = Gst::from_strings({"banana"});
    CHECK(g.sa_range(NodeHandle{g.root(), 0}).size() == g.n());
    NodeHandle h = g.locus(2, 3); // "an"
    CHECK(g.sa_range(h).size() == 2);
}

TEST_CASE("concat_ranges") {
    Gst g = Gst::from_strings({"banana"});
    SaRange an = g.range_of(Ref{2, 2});
    SaRange a = g.range_of(Ref{2, 1});
    SaRange b = g.range_of(Ref{1, 1});

    auto ana = g.concat_ranges(an, 2, a, 1);
    REQUIRE(ana.has_value());
    CHECK(ana->size() == 2);
    // equals the range computed from a known occurrence of "ana"
    SaRange direct = g.range_of(Ref{2, 3});
    CHECK(ana->lo == direct.lo);
    CHECK(ana->hi == direct.hi);

    CHECK(!g.concat_ranges(an, 2, b, 1).has_value()); // "anb" does not occur
    auto same = g.concat_ranges(an, 2, SaRange{1, g.n()}, 0);
    REQUIRE(same.has_value());
    CHECK(same->lo == an.lo);
    CHECK(same->hi == an.hi);
}

TEST_CASE("concat_ranges present iff UV occurs (randomized)") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        int len = rand_int(rng, 2, 50);
        std::string s = random_string(rng, len, 2);
        Gst g = Gst::from_strings({s});
        for (int q = 0; q < 200; ++q) {
            int i = rand_int(rng, 1, len), j = rand_int(rng, i, len);
            int k = rand_int(rng, 1, len), l = rand_int(rng, k, len);
            std::string uv = s.substr(i - 1, j - i + 1) + s.substr(k - 1, l - k + 1);
            auto r = g.concat_ranges(g.range_of(Ref{i, j - i + 1}), j - i + 1,
                                     g.range_of(Ref{k, l - k + 1}), l - k + 1);
            auto occ = naive_occurrences(s, uv);
            REQUIRE(r.has_value() == !occ.empty());
            if (r) {
                std::vector<int> got;
                for (i32 rr = r->lo; rr <= r->hi; ++rr)
                    if (g.sarr().sa(rr) + (int)uv.size() - 1 <= len) got.push_back(g.sarr().sa(rr));
                std::sort(got.begin(), got.end());
                REQUIRE(got == occ);
            }
        }
    }
}

TEST_CASE("range_hits_part") {
    Gst g = Gst::from_strings({"ab", "ba"});
    CHECK(g.range_hits_part(SaRange{1, g.n()}, 1));
    // "ab" occurs only in S
    Ref ab{1, 2};
    CHECK(!g.range_hits_part(g.range_of(ab), 1));
    CHECK(g.range_hits_part(g.range_of(ab), 0));
}

TEST_CASE("longest_affix_in_part on Example 1 strings") {
    Gst g = Gst::from_strings({"caabaaa", "aaaaaab"});
    // U = "aaa" (suffix of S), V = "b": longest prefix of "aaab" occurring in T is all 4
    Ref u{g.text().global(0, 5), 3};
    Ref v{g.text().global(0, 4), 1};
    auto a = g.longest_affix_in_part(u, v, false, 1);
    CHECK(a.len == 4);
    REQUIRE(a.witness >= 1);
    // whole UV occurs in T
    Ref u2{g.text().global(0, 2), 2}; // "aa"
    auto a2 = g.longest_affix_in_part(u2, Ref{g.text().global(0, 4), 1}, false, 1); // "aab"
    CHECK(a2.len == 3);
    // empty U and V
    auto a3 = g.longest_affix_in_part(Ref{1, 0}, Ref{1, 0}, false, 1);
    CHECK(a3.len == 0);
    // suffix side: longest suffix of "caa" occurring in T is "aa"
    auto a4 = g.longest_affix_in_part(Ref{g.text().global(0, 1), 2}, Ref{g.text().global(0, 3), 1},
                                      true, 1);
    CHECK(a4.len == 2);
}

TEST_CASE("heavy decomposition size bound and path reconstruction") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 15; ++rep) {
        int len = rand_int(rng, 2, 120);
        std::string s = random_string(rng, len, rand_int(rng, 2, 3));
        Gst g = Gst::from_strings({s});
        i32 leaves = g.leaf_count(g.root());
        int bound = floor_log2(leaves) + 1;
        for (i32 v = 1; v < g.node_count(); ++v) {
            auto frags = g.heavy_decomp_to_root(v);
            REQUIRE((int)frags.size() <= bound);
            // fragments chain bottom-up via single light edges and end at v
            CHECK(frags.front().top == g.root());
            CHECK(frags.back().bottom == v);
            for (size_t k = 0; k + 1 < frags.size(); ++k)
                CHECK(g.parent(frags[k + 1].top) == frags[k].bottom);
            for (auto& f : frags) CHECK(g.path_of(f.top) == g.path_of(f.bottom));
        }
    }
}

TEST_CASE("heavy decomposition along one heavy path is a single fragment") {
    Gst g = Gst::from_strings({"aaaa"});
    i32 bottom = g.path_bottom(g.path_of(g.root()));
    auto frags = g.heavy_decomp_to_root(bottom);
    CHECK(frags.size() == 1);
    CHECK(frags[0].top == g.root());
    CHECK(frags[0].bottom == bottom);
}
