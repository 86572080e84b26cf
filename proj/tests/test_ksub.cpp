#include "doctest.h"

#include <random>
#include <string>

#include "dynstr/ksub.hpp"
#include "test_util.hpp"

using namespace dynstr;
using namespace dynstr::testutil;

namespace {

i32 mc(char c) { return static_cast<i32>(static_cast<unsigned char>(c)) + PartedText::kCharShift; }

std::string to_string(const std::vector<i32>& v) {
    std::string s;
    for (i32 c : v) s.push_back(static_cast<char>(c - PartedText::kCharShift));
    return s;
}

std::string naive_edit(std::string s, EditKind k, i64 pos, char c) {
    switch (k) {
        case EditKind::Substitute: s[pos - 1] = c; break;
        case EditKind::Insert: s.insert(s.begin() + (pos - 1), c); break;
        case EditKind::Delete: s.erase(s.begin() + (pos - 1)); break;
    }
    return s;
}

} // namespace

TEST_CASE("ksub: insertion splits a fragment") {
    Gst g = Gst::from_strings({"abcdefghij"});
    FingerprintTable fp(g.text(), 1);
    KSubstring s = KSubstring::whole_part(g, fp, 0);
    EditTrace tr;
    KSubstring s2 = s.applied(EditKind::Insert, 4, mc('x'), &tr);
    REQUIRE(s2.fragment_count() == 3);
    CHECK(s2.fragment(0).len == 3);
    CHECK(s2.fragment(1).is_char());
    CHECK(s2.fragment(2).len == 7);
    CHECK(to_string(s2.materialize()) == "abcxdefghij");
    CHECK(tr.kind == EditTrace::Gap);
    CHECK(tr.global == g.text().global(0, 3));

    // substitution inside the char fragment keeps k unchanged
    KSubstring s3 = s2.applied(EditKind::Substitute, 4, mc('y'), &tr);
    CHECK(s3.fragment_count() == 3);
    CHECK(tr.kind == EditTrace::None);
    CHECK(to_string(s3.materialize()) == "abcydefghij");

    // deleting the char fragment removes it
    KSubstring s4 = s3.applied(EditKind::Delete, 4, 0, &tr);
    CHECK(s4.fragment_count() == 2);
    CHECK(tr.kind == EditTrace::None);
    CHECK(to_string(s4.materialize()) == "abcdefghij");
}

TEST_CASE("ksub: Example 1 substitution") {
    Gst g = Gst::from_strings({"caabaaa", "aaaaaab"});
    FingerprintTable fp(g.text(), 1);
    KSubstring s = KSubstring::whole_part(g, fp, 0);
    KSubstring s2 = s.applied(EditKind::Substitute, 4, mc('a'), nullptr);
    CHECK(to_string(s2.materialize()) == "caaaaaa");
    CHECK(s2.fragment_count() == 3);

    KSubstring t = KSubstring::whole_part(g, fp, 1);
    CHECK(seq_lcp(Seq::of_ksub(s2, 2), Seq::of_ksub(t, 1)) == 6);
    CHECK(seq_lcp_fingerprint(Seq::of_ksub(s2, 2), Seq::of_ksub(t, 1)) == 6);
    // identical representation, same position
    CHECK(seq_lcp(Seq::of_ksub(s2, 3), Seq::of_ksub(s2, 3)) == 5);
}

TEST_CASE("ksub: random edit scripts match naive editing; fragment bound") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        int len = rand_int(rng, 1, 60);
        std::string base = random_string(rng, len, rand_int(rng, 1, 3));
        Gst g = Gst::from_strings({base});
        FingerprintTable fp(g.text(), rep);
        KSubstring s = KSubstring::whole_part(g, fp, 0);
        std::string ref = base;
        int edits = rand_int(rng, 1, 25);
        for (int e = 0; e < edits; ++e) {
            EditKind k = static_cast<EditKind>(rng() % 3);
            if (ref.empty()) k = EditKind::Insert;
            if (k == EditKind::Delete && ref.size() == 1) k = EditKind::Insert;
            i64 pos = rand_int(rng, 1, static_cast<int>(ref.size()) + (k == EditKind::Insert ? 1 : 0));
            char c = static_cast<char>('a' + rng() % 3);
            s = s.applied(k, pos, mc(c), nullptr);
            ref = naive_edit(ref, k, pos, c);
            REQUIRE(to_string(s.materialize()) == ref);
            REQUIRE(s.fragment_count() <= 2 * (e + 1) + 1);
            REQUIRE(s.size() == static_cast<i64>(ref.size()));
            if (!ref.empty()) {
                int p = rand_int(rng, 1, static_cast<int>(ref.size()));
                REQUIRE(s.char_at(p) == mc(ref[p - 1]));
            }
        }
    }
}

TEST_CASE("ksub: lce matches naive lcp on materialized strings") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 40; ++rep) {
        int len = rand_int(rng, 2, 50);
        std::string base = random_string(rng, len, 2);
        Gst g = Gst::from_strings({base});
        FingerprintTable fp(g.text(), 77);
        KSubstring a = KSubstring::whole_part(g, fp, 0);
        KSubstring b = KSubstring::whole_part(g, fp, 0);
        for (int e = 0; e < 6; ++e) {
            if (a.size() > 1)
                a = a.applied(EditKind::Substitute, rand_int(rng, 1, (int)a.size()), mc('a' + rng() % 2), nullptr);
            if (b.size() > 1)
                b = b.applied(static_cast<EditKind>(rng() % 2 == 0 ? 0 : 1),
                              rand_int(rng, 1, (int)b.size()), mc('a' + rng() % 2), nullptr);
        }
        std::string sa = to_string(a.materialize()), sb = to_string(b.materialize());
        for (int q = 0; q < 200; ++q) {
            int i = rand_int(rng, 1, (int)sa.size());
            int j = rand_int(rng, 1, (int)sb.size());
            i64 expect = naive_lcp(sa, i, sb, j);
            REQUIRE(seq_lcp(Seq::of_ksub(a, i), Seq::of_ksub(b, j)) == expect);
            REQUIRE(seq_lcp_fingerprint(Seq::of_ksub(a, i), Seq::of_ksub(b, j)) == expect);
        }
    }
}

TEST_CASE("kangaroo lce over substitution lists") {
    std::mt19937_64 rng(13);
    Gst g0 = Gst::from_strings({"caabaaa"});
    CHECK(kangaroo_lce(g0, {}, 2, 5) == g0.lce(2, 5));
    CHECK_THROWS_AS(kangaroo_lce(g0, {{4, mc('a')}, {2, mc('b')}}, 1, 2), bad_query);

    for (int rep = 0; rep < 40; ++rep) {
        int len = rand_int(rng, 2, 60);
        std::string base = random_string(rng, len, 2);
        Gst g = Gst::from_strings({base});
        std::string cur = base;
        std::vector<std::pair<i32, i32>> subs;
        int k = rand_int(rng, 0, std::min(5, len));
        std::vector<int> positions;
        for (int i = 1; i <= len; ++i) positions.push_back(i);
        std::shuffle(positions.begin(), positions.end(), rng);
        positions.resize(k);
        std::sort(positions.begin(), positions.end());
        for (int p : positions) {
            char c = static_cast<char>('a' + rng() % 3);
            cur[p - 1] = c;
            subs.push_back({p, mc(c)});
        }
        std::string curfull = cur;
        curfull.push_back(1); // sentinel slot compares unequal anyway
        for (int q = 0; q < 300; ++q) {
            int i = rand_int(rng, 1, len);
            int j = rand_int(rng, 1, len);
            i64 expect = naive_lcp(cur, i, cur, j);
            if (i == j) expect = g.n() - i + 1; // full remaining incl sentinel
            i64 got = kangaroo_lce(g, subs, i, j);
            if (i != j) REQUIRE(got == expect);
            else REQUIRE(got == expect);
        }
    }
}
