#ifndef DYNSTR_DYNAMIC_LCS_HPP
#define DYNSTR_DYNAMIC_LCS_HPP

#include <functional>

#include "dynstr/decremental.hpp"
#include "dynstr/hia.hpp"

namespace dynstr {

// Snapshot bundle over frozen base strings (S0, T0): supertext [S,T,S^R,T^R]
// with all static structures; built in stages so a rebuild can be spread
// over several queries.
struct LcsIndex {
    std::string s0, t0;
    u64 seed = 42;
    i64 dec_d = 0; // 0: no decremental component

    std::unique_ptr<Gst> g;
    std::unique_ptr<FingerprintTable> fp;
    std::unique_ptr<InternalQueries> iq;
    std::unique_ptr<HiaIndex> hia_t; // trees of T, for S-side cross queries
    std::unique_ptr<HiaIndex> hia_s;
    std::unique_ptr<DecrementalLcs> dec;
    std::vector<std::vector<i32>> char_occ; // global positions per character

    int built = 0;
    int total_steps() const { return 5; }
    bool done() const { return built >= total_steps(); }
    void build_step();
    void build_all() { while (!done()) build_step(); }

    i64 ns() const { return static_cast<i64>(s0.size()); }
    i64 nt() const { return static_cast<i64>(t0.size()); }
};

struct CaseAnswer {
    i64 len = 0;
    i64 pos_s = 0, pos_t = 0;
    int tag = 0; // 0 none, 1 internal/decremental, 2 one-sided-S, 3 one-sided-T, 4 two-sided, 5 unit
};

// Cross-substring query context: F is the side whose fragment boundaries the
// candidate must cover; G the other side. Both are k-substrings over the same
// session index. For the longest-repeat problem the two sides are the same
// representation and same-start candidate pairs are excluded.
struct CrossCtx {
    const InternalQueries* iq;
    const HiaIndex* hia_g; // suffix-tree pair over G's base string
    const KSubstring *f, *fr, *g, *gr;
    i32 part_f, part_fr, part_g, part_gr;
    bool exclude_same_start = false;
};

// longest common substring covering >= 1 fragment boundary of F, occurring
// inside a single fragment of G; returns current-coordinate positions
CaseAnswer cross_one_sided(const CrossCtx& c);

// candidates covering >= 1 boundary on each side
CaseAnswer cross_two_sided(const CrossCtx& c);

// LCS after one substitution per string (both reverted afterwards)
LcsAnswer lcs_one_sub_per_string(const LcsIndex& ix, i64 i, i32 alpha, i64 j, i32 beta);

// LCS(S', T) for a k-substring S' of S, T static
LcsAnswer k_substring_lcs(const LcsIndex& ix, const KSubstring& sp, const KSubstring& spr);

// first current-string position holding character ch, or 0
i64 find_char_in_rep(const LcsIndex& ix, const KSubstring& rep, i32 ch);

// Fully dynamic LCS session: edits in either string, answers after each edit.
class DynamicLcs {
public:
    struct Config {
        i32 kappa = 0;      // 0: auto (~n^(1/3))
        bool deamortize = true;
        u64 seed = 42;
        i64 dec_d = 0;      // 0: auto (~n^(2/3))
    };

    DynamicLcs(std::string s, std::string t, Config cfg);
    DynamicLcs(std::string s, std::string t);

    LcsAnswer apply(const EditOp& e);
    LcsAnswer current() const;

    std::string materialize_s() const;
    std::string materialize_t() const;

    // instrumentation for the deamortization contract
    i64 kappa() const { return kappa_; }
    i64 max_lag() const { return max_lag_; }
    i64 max_fragments() const { return max_frags_; }

private:
    void start_rebuild();
    void finish_rebuild();
    void tick_rebuild();
    void route_event(i32 target, const EditTrace& tr);

    Config cfg_;
    i64 kappa_ = 1;
    std::unique_ptr<LcsIndex> ix_;
    KSubstring sp_, tp_, spr_, tpr_;
    std::vector<i64> cnt_s_, cnt_t_;
    i64 edits_since_snapshot_ = 0;
    i64 max_lag_ = 0, max_frags_ = 0;

    std::unique_ptr<LcsIndex> pending_;
    std::vector<EditOp> buffer_;
    int steps_per_tick_ = 1;
};

// One-sided fully dynamic LCS (edits in S only), time-sliced over the
// k-substring structure.
class OneSidedLcs {
public:
    struct Config {
        i32 kappa = 0; // 0: auto (~sqrt(n))
        bool deamortize = true;
        u64 seed = 42;
    };

    OneSidedLcs(std::string s, std::string t, Config cfg);
    OneSidedLcs(std::string s, std::string t);

    LcsAnswer apply(const EditOp& e); // target must be S
    LcsAnswer current() const;
    i64 kappa() const { return kappa_; }
    i64 max_lag() const { return max_lag_; }
    i64 max_fragments() const { return max_frags_; }

private:
    Config cfg_;
    i64 kappa_ = 1;
    std::unique_ptr<LcsIndex> ix_;
    KSubstring sp_, spr_;
    i64 edits_since_snapshot_ = 0;
    i64 max_lag_ = 0, max_frags_ = 0;
    std::unique_ptr<LcsIndex> pending_;
    std::vector<EditOp> buffer_;
    int steps_per_tick_ = 1;
};

} // namespace dynstr

#endif
