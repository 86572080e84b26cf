#ifndef DYNSTR_ORACLE_HPP
#define DYNSTR_ORACLE_HPP

#include <string>
#include <vector>

#include "dynstr/common.hpp"

// Brute-force reference implementations, direct transcriptions of the
// definitions. Deliberately quadratic/cubic and independent of the optimized
// code paths; input sizes are guarded.

namespace dynstr::oracle {

struct LcsWitness {
    i64 len = 0;
    i64 pos_s = 0, pos_t = 0; // 1-based starts, 0 when len == 0
};

// longest common substring via dynamic programming over suffix matches
LcsWitness naive_lcs(const std::string& s, const std::string& t);

// longest substring occurring at least twice (overlaps allowed)
struct RepeatWitness {
    i64 len = 0;
    i64 pos1 = 0, pos2 = 0;
};
RepeatWitness naive_repeat(const std::string& s);

// longest palindromic substring
struct PalWitness {
    i64 len = 0;
    i64 pos = 0;
};
PalWitness naive_lspal(const std::string& s);

// Lyndon helpers
bool naive_is_lyndon(const std::string& s);
std::vector<std::string> naive_lf(const std::string& s); // non-increasing Lyndon factorization

// longest XY with X a suffix of u, Y a prefix of v and XY a substring of w
struct ThreeSplit {
    i64 total = 0;
    i64 xlen = 0;
    i64 wpos = 0; // 1-based start of XY inside w, 0 when total == 0
};
ThreeSplit naive_three_substrings(const std::string& u, const std::string& v,
                                  const std::string& w);

// max over pairs of lcp(P1,Q1)+lcp(P2,Q2)
i64 naive_max_pair_lcp(const std::vector<std::pair<std::string, std::string>>& P,
                       const std::vector<std::pair<std::string, std::string>>& Q);

std::vector<i64> naive_borders(const std::string& u); // all border lengths, increasing
i64 naive_period(const std::string& u);

// distinct substrings of length len occurring in both s and t
i64 naive_common_count(const std::string& s, const std::string& t, i64 len);
// distinct substrings of length len occurring at least `times` times in s
i64 naive_multi_count(const std::string& s, i64 len, i64 times);

} // namespace dynstr::oracle

#endif
