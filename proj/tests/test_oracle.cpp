#include "doctest.h"

#include "dynstr/oracle.hpp"
#include "test_util.hpp"

using namespace dynstr;
namespace orc = dynstr::oracle;
using namespace dynstr::testutil;

TEST_CASE("oracle pinned examples") {
    CHECK(orc::naive_lcs("caabaaa", "aaaaaab").len == 3);
    CHECK(orc::naive_lcs("abc", "abc").len == 3);
    CHECK(orc::naive_lcs("abc", "xyz").len == 0);
    CHECK(orc::naive_repeat("banana").len == 3);
    CHECK(orc::naive_lspal("baca").len == 3);
    auto lf = orc::naive_lf("ccbcebcdbc");
    REQUIRE(lf == std::vector<std::string>{"c", "c", "bce", "bcd", "bc"});
    CHECK(orc::naive_lf("banana") == std::vector<std::string>{"b", "an", "an", "a"});
    CHECK(orc::naive_lf("aaa") == std::vector<std::string>{"a", "a", "a"});
}

TEST_CASE("oracle lf output is a valid Lyndon factorization") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 200; ++rep) {
        std::string s = random_string(rng, rand_int(rng, 1, 40), rand_int(rng, 1, 3));
        auto lf = orc::naive_lf(s);
        std::string cat;
        for (size_t i = 0; i < lf.size(); ++i) {
            REQUIRE(orc::naive_is_lyndon(lf[i]));
            if (i) REQUIRE(lf[i - 1] >= lf[i]);
            cat += lf[i];
        }
        REQUIRE(cat == s);
    }
}

TEST_CASE("oracle three substrings") {
    auto r = orc::naive_three_substrings("ban", "ana", "banana");
    CHECK(r.total == 6);
    CHECK(r.xlen == 3);
    auto r2 = orc::naive_three_substrings("nan", "nas", "banana");
    CHECK(r2.total == 3);
    auto r3 = orc::naive_three_substrings("", "ana", "banana");
    CHECK(r3.total == 3);
    CHECK(r3.xlen == 0);
    // window-limited: "b" + "cd" inside "bcd"
    auto r4 = orc::naive_three_substrings("zab", "cd", "bcd");
    CHECK(r4.total == 3);
    CHECK(r4.xlen == 1);
}

TEST_CASE("oracle borders and period") {
    CHECK(orc::naive_borders("aaaa") == std::vector<i64>{1, 2, 3});
    CHECK(orc::naive_borders("aabaa") == std::vector<i64>{1, 2});
    CHECK(orc::naive_borders("ab").empty());
    CHECK(orc::naive_period("aaaa") == 1);
    CHECK(orc::naive_period("aabaab") == 3);
    CHECK(orc::naive_period("abc") == 3);
}

TEST_CASE("oracle guards large inputs") {
    std::string big(2001, 'a');
    CHECK_THROWS_AS(orc::naive_period(big), bad_query);
}
