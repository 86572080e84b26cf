#ifndef DYNSTR_REPEATS_HPP
#define DYNSTR_REPEATS_HPP

#include "dynstr/dynamic_lcs.hpp"

namespace dynstr {

// Snapshot bundle for the single-string problems: supertext [S, S^R].
struct MonoIndex {
    std::string s0;
    u64 seed = 42;
    i64 dec_d = 0;       // > 0: build the decremental longest-repeat state
    bool with_hia = true;

    std::unique_ptr<Gst> g;
    std::unique_ptr<FingerprintTable> fp;
    std::unique_ptr<InternalQueries> iq;
    std::unique_ptr<HiaIndex> hia;
    std::unique_ptr<DecrementalRepeat> dec;
    std::vector<std::vector<i32>> char_occ;

    int built = 0;
    int total_steps() const { return 4; }
    bool done() const { return built >= total_steps(); }
    void build_step();
    void build_all() { while (!done()) build_step(); }

    i64 n() const { return static_cast<i64>(s0.size()); }
};

struct RepeatAnswer {
    i64 len = 0;
    i64 pos1 = 0, pos2 = 0; // distinct occurrence starts
};

// longest repeat of the represented string (two occurrences, overlaps allowed)
RepeatAnswer k_substring_repeat(const MonoIndex& ix, const KSubstring& sp, const KSubstring& spr);

// Fully dynamic longest repeat session.
class DynamicRepeat {
public:
    struct Config {
        i32 kappa = 0;
        bool deamortize = true;
        u64 seed = 42;
        i64 dec_d = 0;
    };

    DynamicRepeat(std::string s, Config cfg);
    explicit DynamicRepeat(std::string s);

    RepeatAnswer apply(const EditOp& e);
    RepeatAnswer current() const;
    std::string materialize() const;

    i64 kappa() const { return kappa_; }
    i64 max_lag() const { return max_lag_; }

private:
    void tick_rebuild();

    Config cfg_;
    i64 kappa_ = 1;
    std::unique_ptr<MonoIndex> ix_;
    KSubstring sp_, spr_;
    std::vector<i64> cnt_;
    i64 edits_since_snapshot_ = 0;
    i64 max_lag_ = 0;
    std::unique_ptr<MonoIndex> pending_;
    std::vector<EditOp> buffer_;
    int steps_per_tick_ = 1;
};

} // namespace dynstr

#endif
