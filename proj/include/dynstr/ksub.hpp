#ifndef DYNSTR_KSUB_HPP
#define DYNSTR_KSUB_HPP

#include "dynstr/gst.hpp"

namespace dynstr {

// Double Karp-Rabin fingerprints modulo 2^61-1 with seeded random bases.
struct HashPair {
    u64 a = 0, b = 0;
    bool operator==(const HashPair&) const = default;
};

class FingerprintTable {
public:
    static constexpr u64 kMod = (1ULL << 61) - 1;

    FingerprintTable() = default;
    FingerprintTable(const PartedText& text, u64 seed);

    // hash of text[l..r]
    HashPair range(i32 l, i32 r) const {
        return HashPair{sub(pre_a_[r], mul(pre_a_[l - 1], pow_a(r - l + 1))),
                        sub(pre_b_[r], mul(pre_b_[l - 1], pow_b(r - l + 1)))};
    }

    HashPair of_char(i32 c) const { return HashPair{static_cast<u64>(c), static_cast<u64>(c)}; }

    HashPair append(HashPair h, HashPair tail, i64 tail_len) const {
        return HashPair{add(mul(h.a, pow_a(tail_len)), tail.a),
                        add(mul(h.b, pow_b(tail_len)), tail.b)};
    }

    static u64 mul(u64 x, u64 y) {
        __uint128_t z = static_cast<__uint128_t>(x) * y;
        u64 lo = static_cast<u64>(z & kMod), hi = static_cast<u64>(z >> 61);
        u64 r = lo + hi;
        if (r >= kMod) r -= kMod;
        return r;
    }
    static u64 add(u64 x, u64 y) {
        u64 r = x + y;
        if (r >= kMod) r -= kMod;
        return r;
    }
    static u64 sub(u64 x, u64 y) { return add(x, kMod - y); }

    u64 pow_a(i64 e) const { return power(base_a_, e); }
    u64 pow_b(i64 e) const { return power(base_b_, e); }

private:
    u64 power(u64 base, i64 e) const {
        if (e < static_cast<i64>(pows_a_.size())) {
            return base == base_a_ ? pows_a_[e] : pows_b_[e];
        }
        u64 r = 1, b = base;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    u64 base_a_ = 0, base_b_ = 0;
    std::vector<u64> pre_a_, pre_b_;
    std::vector<u64> pows_a_, pows_b_;
};

enum class EditKind { Substitute, Insert, Delete };

struct EditOp {
    i32 target = 0; // 0 = S, 1 = T
    EditKind kind = EditKind::Substitute;
    i64 pos = 1;    // 1-based position in the current string
    i32 ch = 0;     // mapped character value (byte + kCharShift), for sub/ins
};

// What an edit touched in the frozen base text: a base position (substitution
// or deletion of an original character) or a base gap g (insertion splitting
// between original positions g and g+1). Edits on previously inserted
// characters touch nothing.
struct EditTrace {
    enum Kind { None, Position, Gap } kind = None;
    i32 global = 0; // global base coordinate of the position / left end of the gap
};

// A string represented as a concatenation of fragments, each either a
// substring of the frozen base text or a single character.
class KSubstring {
public:
    struct Fragment {
        i32 pos = 0; // > 0: global base start; == 0: single character
        i32 len = 0;
        i32 ch = 0;

        bool is_char() const { return pos == 0; }
    };

    KSubstring() = default;
    KSubstring(const Gst* base, const FingerprintTable* fp) : base_(base), fp_(fp) {}

    // whole part of the base text as a 1-substring
    static KSubstring whole_part(const Gst& base, const FingerprintTable& fp, i32 part);

    i64 size() const { return len_; }
    i32 fragment_count() const { return static_cast<i32>(frags_.size()); }
    const Fragment& fragment(i32 i) const { return frags_[i]; }
    // 1-based start position of fragment i in the represented string
    i64 fragment_start(i32 i) const { return pref_[i] + 1; }
    const Gst* base() const { return base_; }
    const FingerprintTable* fp() const { return fp_; }

    i32 char_at(i64 i) const;
    std::vector<i32> materialize() const;

    // fragment containing position i and the 1-based offset within it
    i32 locate(i64 i, i64* off) const;

    // apply an edit, returning the new value; O(k)
    KSubstring applied(EditKind kind, i64 pos, i32 ch, EditTrace* trace = nullptr) const;

    // fragment index (if any) whose base interval contains global base pos;
    // fragments hold pairwise disjoint, increasing base intervals
    i32 fragment_of_base(i32 global_pos, i64* cur_pos) const;

    HashPair hash_prefix(i64 i) const; // hash of the first i characters
    HashPair hash_range(i64 l, i64 r) const {
        HashPair hr = hash_prefix(r), hl = hash_prefix(l - 1);
        return HashPair{FingerprintTable::sub(hr.a, FingerprintTable::mul(hl.a, fp_->pow_a(r - l + 1))),
                        FingerprintTable::sub(hr.b, FingerprintTable::mul(hl.b, fp_->pow_b(r - l + 1)))};
    }

private:
    void reindex();

    const Gst* base_ = nullptr;
    const FingerprintTable* fp_ = nullptr;
    std::vector<Fragment> frags_;
    std::vector<i64> pref_;   // pref_[i] = total length before fragment i (size k+1)
    std::vector<HashPair> hpref_;
    i64 len_ = 0;
};

// A readable slice of either the frozen base text or a represented string.
struct Seq {
    const KSubstring* ks = nullptr; // null: static slice of gst text
    const Gst* g = nullptr;
    i64 pos = 1; // 1-based start (global for static, string position for ksub)
    i64 len = 0;

    Seq drop(i64 k) const { return Seq{ks, g, pos + k, len - k}; }
    Seq take(i64 k) const { return Seq{ks, g, pos, k}; }

    static Seq of_ref(const Gst& g, Ref r) { return Seq{nullptr, &g, r.pos, r.len}; }
    static Seq of_ksub(const KSubstring& s, i64 from) {
        return Seq{&s, s.base(), from, s.size() - from + 1};
    }
    static Seq of_ksub_range(const KSubstring& s, i64 from, i64 len) {
        return Seq{&s, s.base(), from, len};
    }
};

// Longest common prefix of two slices, capped by their lengths. Walks
// fragments with O(1) static LCE per hop (kangaroo method); beyond a hop
// budget it switches to fingerprint binary search (Monte Carlo, seeded).
i64 seq_lcp(const Seq& a, const Seq& b);

// fingerprint-only variant, exposed for direct testing
i64 seq_lcp_fingerprint(const Seq& a, const Seq& b);

// LCE in a string obtained from the text by the given substitutions
// (position, new char), sorted by position; O(k) static LCE calls.
i64 kangaroo_lce(const Gst& g, const std::vector<std::pair<i32, i32>>& subs, i32 i, i32 j);

} // namespace dynstr

#endif
