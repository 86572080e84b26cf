#ifndef DYNSTR_PALINDROMES_HPP
#define DYNSTR_PALINDROMES_HPP

#include "dynstr/repeats.hpp"

namespace dynstr {

// maximal palindrome per center; centers are indexed by 2*center, i.e.
// entry k (0-based) covers doubled center k+2 in [2, 2n]
struct MpsEntry {
    i64 start = 0, end = -1; // empty for even centers between mismatched chars
    i64 len() const { return end - start + 1; }
};

std::vector<MpsEntry> compute_mps(const std::vector<i32>& chars);

struct PalAnswer {
    i64 len = 0;
    i64 pos = 0;
};

// Static structures for internal longest-palindrome queries: the maximal
// palindromes of the base string on three 2-d grids.
struct PalIndex {
    MonoIndex base;
    std::unique_ptr<PointGridRmq> containment_, prefix_, suffix_;

    int built = 0;
    int total_steps() const { return base.total_steps() + 1; }
    bool done() const { return built >= total_steps(); }
    void build_step();
    void build_all() { while (!done()) build_step(); }
};

enum class PalMode { Any, Prefix, Suffix };

// longest palindrome inside base[i..j]; Prefix/Suffix restrict to palindromes
// anchored at the interval ends
PalAnswer internal_lspal(const PalIndex& ix, i64 i, i64 j, PalMode mode);

PalAnswer k_substring_lspal(const PalIndex& ix, const KSubstring& sp, const KSubstring& spr);

class DynamicPal {
public:
    struct Config {
        i32 kappa = 0;
        bool deamortize = true;
        u64 seed = 42;
    };

    DynamicPal(std::string s, Config cfg);
    explicit DynamicPal(std::string s);

    PalAnswer apply(const EditOp& e);
    PalAnswer current() const;
    std::string materialize() const;
    i64 kappa() const { return kappa_; }
    i64 max_lag() const { return max_lag_; }

private:
    Config cfg_;
    i64 kappa_ = 1;
    std::unique_ptr<PalIndex> ix_;
    KSubstring sp_, spr_;
    i64 edits_since_snapshot_ = 0;
    i64 max_lag_ = 0;
    std::unique_ptr<PalIndex> pending_;
    std::vector<EditOp> buffer_;
    int steps_per_tick_ = 1;
};

} // namespace dynstr

#endif
