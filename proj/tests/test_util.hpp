#ifndef DYNSTR_TEST_UTIL_HPP
#define DYNSTR_TEST_UTIL_HPP

#include <random>
#include <string>

#include "dynstr/common.hpp"

namespace dynstr::testutil {

inline std::string random_string(std::mt19937_64& rng, int len, int alphabet) {
    std::string s(len, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % alphabet);
    return s;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
}

// naive lcp of two std::string suffixes (1-based positions)
inline int naive_lcp(const std::string& a, int i, const std::string& b, int j) {
    int k = 0;
    while (i - 1 + k < (int)a.size() && j - 1 + k < (int)b.size() &&
           a[i - 1 + k] == b[j - 1 + k])
        ++k;
    return k;
}

} // namespace dynstr::testutil

#endif
