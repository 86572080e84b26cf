#ifndef DYNSTR_DECREMENTAL_HPP
#define DYNSTR_DECREMENTAL_HPP

#include <set>

#include "dynstr/internal_queries.hpp"

namespace dynstr {

// Difference d-cover of the positive integers: members(n) has O(n/sqrt(d))
// elements and h(i,j) in [0,d) satisfies i+h, j+h in the cover.
class DifferenceCover {
public:
    explicit DifferenceCover(i64 d);

    i64 d() const { return d_; }
    i64 period() const { return period_; }
    bool contains(i64 x) const { return x >= 1 && in_[x % period_]; }
    std::vector<i64> members(i64 n) const;
    i64 h(i64 i, i64 j) const;

private:
    i64 d_ = 1, period_ = 1, r_ = 1;
    bool table_mode_ = false;
    std::vector<bool> in_;
    std::vector<std::pair<i64, i64>> pair_for_delta_; // table mode
};

// Two String Families LCP: strings are substring refs into the session text;
// maxPairLCP(P, Q) = max lcp(P1,Q1) + lcp(P2,Q2).
struct FamilyPair {
    Ref first, second;
    i32 id = 0;
};

struct MaxPairLcpResult {
    i64 value = kNegInf;
    i32 p_id = -1, q_id = -1;
    i64 lcp1 = 0, lcp2 = 0;
};

MaxPairLcpResult two_string_families_lcp(const Gst& g, const std::vector<FamilyPair>& P,
                                         const std::vector<FamilyPair>& Q);

// Decremental bounded-length machinery over the common suffix tree: maintains
// A[i] = number of distinct length-i strings with a non-invalidated occurrence
// in each of the two roles. Replacements are described by event coordinates on
// a doubled grid: even 2q kills every fragment containing position q,
// odd 2g+1 kills every fragment containing both g and g+1.
class DecrementalBounded {
public:
    struct Config {
        i32 part_a = 0, part_b = 1; // occurrence roles
        i64 threshold_a = 1;        // required non-invalidated occurrences per role
        i64 threshold_b = 1;
        bool same_string = false;   // repeat mode: one string, threshold 2
    };

    DecrementalBounded(const InternalQueries* iq, i64 d, Config cfg);

    i64 d() const { return d_; }

    // current max length with A[len] > 0 (0 when only the empty string is live)
    i64 best_len() const { return cur_max_; }
    i64 a_value(i64 i) const { return A_[i]; }

    struct Witness {
        i64 len = 0;
        i64 pos_a = 0, pos_b = 0; // local starts in part_a / part_b
    };
    Witness witness() const;

    // replace event c (doubled coordinate) in role 0 (part_a string) or 1;
    // duplicate events are ignored
    void replace_event(int role, i64 c);

    bool event_replaced(int role, i64 c) const {
        return events_[role].count(c) > 0;
    }

    // longest valid run starting at local position j, capped at d
    i64 lmax(int role, i64 j) const;
    // pred/succ over replaced event coordinates
    i64 succ_event(int role, i64 c) const;
    i64 pred_event(int role, i64 c) const;
    // uncapped valid run to the right of i / to the left of i-1
    i64 run_right(int role, i64 i) const {
        if (cfg_.same_string) role = 0;
        i32 part = role == 0 ? cfg_.part_a : cfg_.part_b;
        i64 plen = g_->text().part_len(part);
        i64 succ = succ_event(role, 2 * i - 1);
        return std::min(plen - i + 1, (succ - 2 * i + 1) / 2);
    }
    i64 run_left(int role, i64 i) const {
        if (cfg_.same_string) role = 0;
        i64 pred = pred_event(role, 2 * (i - 1) + 1);
        return (i - 1) - pred / 2;
    }

private:
    struct Path {
        std::vector<i32> nodes;     // top-down, explicit nodes of the pruned tree
        std::vector<i32> depths;
        i32 lo = 0;                 // depth range covered: [lo, bottom depth]
        i32 cap = 0;                // min(bottom depth, d)
        IntervalTree invalid_a, invalid_b;
        i64 inv_depth_a, inv_depth_b; // min depth invalidated per role
        i32 bucket = -1;            // current R bucket, -1 = out
        i32 bucket_pos = -1;
    };

    void build_pruned();
    void init_counts();
    i64 path_cap(const Path& p) const { return std::min<i64>(p.cap, std::min(p.inv_depth_a, p.inv_depth_b) - 1); }
    void bucket_move(i32 pid);
    // count of non-invalidated occurrences of the node at depth delta on path pid
    i64 valid_occ(i32 pid, i64 delta, int role) const;
    void update_inv_depth(i32 pid, int role);
    // sqrt-bucket max structure over SA ranks per role
    struct RankMax {
        std::vector<i32> val;
        std::vector<i32> bmax;
        i32 bsize = 1;
        void build(const std::vector<i32>& v);
        void update(i32 idx, i32 v);
        i32 find_ge(i32 lo, i32 hi, i32 need) const; // any idx with val >= need
    };

    const InternalQueries* iq_;
    const Gst* g_;
    i64 d_;
    Config cfg_;

    // pruned tree (nodes live in both roles)
    std::vector<bool> live_;
    std::vector<i32> ppid_, ppix_;   // per gst node: pruned path id/index
    std::vector<Path> paths_;
    std::vector<i32> node_limit_;    // per suffix position: max live depth (B_common)
    std::vector<i64> A_;
    i64 cur_max_ = 0;
    IntervalTree pendingA_;
    std::vector<std::vector<i32>> buckets_; // R: bucket[len] -> path ids
    std::set<i64> events_[2];
    std::vector<i32> lmax_[2];
    RankMax rank_max_[2];
};

// Full decremental LCS: bounded part plus the difference-cover long case.
class DecrementalLcs {
public:
    DecrementalLcs(const InternalQueries* iq, i64 d);

    struct Answer {
        i64 len = 0;
        i64 pos_s = 0, pos_t = 0;
    };

    void replace_event(int role, i64 c) { bounded_.replace_event(role, c); }
    bool event_replaced(int role, i64 c) const { return bounded_.event_replaced(role, c); }
    Answer query() const;
    i64 d() const { return bounded_.d(); }
    const DecrementalBounded& bounded() const { return bounded_; }

private:
    const InternalQueries* iq_;
    DecrementalBounded bounded_;
    DifferenceCover cover_;
};

// Decremental longest repeat (two occurrences in one string).
class DecrementalRepeat {
public:
    DecrementalRepeat(const InternalQueries* iq, i64 d);

    struct Answer {
        i64 len = 0;
        i64 pos1 = 0, pos2 = 0;
    };

    void replace_event(i64 c) { bounded_.replace_event(0, c); }
    bool event_replaced(i64 c) const { return bounded_.event_replaced(0, c); }
    Answer query() const;
    i64 d() const { return bounded_.d(); }
    const DecrementalBounded& bounded() const { return bounded_; }

private:
    const InternalQueries* iq_;
    DecrementalBounded bounded_;
    DifferenceCover cover_;
};

} // namespace dynstr

#endif
