#include "dynstr/ksub.hpp"

#include <algorithm>

namespace dynstr {

FingerprintTable::FingerprintTable(const PartedText& text, u64 seed) {
    u64 s1 = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
    u64 s2 = splitmix64(s1);
    base_a_ = 1000 + s1 % (kMod - 2000);
    base_b_ = 1000 + s2 % (kMod - 2000);
    i32 n = text.size();
    pre_a_.assign(n + 1, 0);
    pre_b_.assign(n + 1, 0);
    pows_a_.assign(2 * n + 2, 1);
    pows_b_.assign(2 * n + 2, 1);
    for (i32 i = 1; i <= n; ++i) {
        pre_a_[i] = add(mul(pre_a_[i - 1], base_a_), static_cast<u64>(text.at(i)));
        pre_b_[i] = add(mul(pre_b_[i - 1], base_b_), static_cast<u64>(text.at(i)));
    }
    for (size_t i = 1; i < pows_a_.size(); ++i) {
        pows_a_[i] = mul(pows_a_[i - 1], base_a_);
        pows_b_[i] = mul(pows_b_[i - 1], base_b_);
    }
}

KSubstring KSubstring::whole_part(const Gst& base, const FingerprintTable& fp, i32 part) {
    KSubstring s(&base, &fp);
    i32 len = base.text().part_len(part);
    if (len > 0) s.frags_.push_back(Fragment{base.text().global(part, 1), len, 0});
    s.reindex();
    return s;
}

void KSubstring::reindex() {
    i32 k = fragment_count();
    pref_.assign(k + 1, 0);
    hpref_.assign(k + 1, HashPair{});
    for (i32 i = 0; i < k; ++i) {
        pref_[i + 1] = pref_[i] + frags_[i].len;
        HashPair h = frags_[i].is_char() ? fp_->of_char(frags_[i].ch)
                                         : fp_->range(frags_[i].pos, frags_[i].pos + frags_[i].len - 1);
        hpref_[i + 1] = fp_->append(hpref_[i], h, frags_[i].len);
    }
    len_ = pref_[k];
}

i32 KSubstring::locate(i64 i, i64* off) const {
    i32 f = static_cast<i32>(std::upper_bound(pref_.begin(), pref_.end(), i - 1) - pref_.begin()) - 1;
    *off = i - pref_[f];
    return f;
}

i32 KSubstring::char_at(i64 i) const {
    require(i >= 1 && i <= len_, "char_at: out of range");
    i64 off;
    i32 f = locate(i, &off);
    const Fragment& fr = frags_[f];
    return fr.is_char() ? fr.ch : base_->text().at(fr.pos + static_cast<i32>(off) - 1);
}

std::vector<i32> KSubstring::materialize() const {
    std::vector<i32> out;
    out.reserve(len_);
    for (const auto& fr : frags_) {
        if (fr.is_char()) out.push_back(fr.ch);
        else
            for (i32 t = 0; t < fr.len; ++t) out.push_back(base_->text().at(fr.pos + t));
    }
    return out;
}

i32 KSubstring::fragment_of_base(i32 global_pos, i64* cur_pos) const {
    // base intervals appear in increasing order along the fragment list
    i32 lo = 0, hi = fragment_count() - 1, found = -1;
    while (lo <= hi) {
        i32 mid = (lo + hi) / 2;
        // skip char fragments by scanning to the nearest ref; lists are short
        i32 m = mid;
        while (m <= hi && frags_[m].is_char()) ++m;
        if (m > hi) { hi = mid - 1; continue; }
        if (frags_[m].pos + frags_[m].len - 1 < global_pos) {
            lo = m + 1;
        } else if (frags_[m].pos > global_pos) {
            hi = mid - 1;
        } else {
            found = m;
            break;
        }
    }
    if (found >= 0 && cur_pos)
        *cur_pos = pref_[found] + (global_pos - frags_[found].pos) + 1;
    return found;
}

KSubstring KSubstring::applied(EditKind kind, i64 pos, i32 ch, EditTrace* trace) const {
    KSubstring out(base_, fp_);
    if (trace) *trace = EditTrace{};
    i64 max_pos = kind == EditKind::Insert ? len_ + 1 : len_;
    require(pos >= 1 && pos <= max_pos, "edit position out of range");

    out.frags_.reserve(frags_.size() + 2);
    if (kind == EditKind::Insert && pos == len_ + 1) {
        out.frags_ = frags_;
        out.frags_.push_back(Fragment{0, 1, ch});
        out.reindex();
        return out;
    }

    i64 off;
    i32 f = locate(pos, &off);
    for (i32 i = 0; i < f; ++i) out.frags_.push_back(frags_[i]);
    const Fragment& fr = frags_[f];

    auto push_ref = [&](i32 p, i32 l) {
        if (l > 0) out.frags_.push_back(Fragment{p, l, 0});
    };

    switch (kind) {
        case EditKind::Substitute:
            if (fr.is_char()) {
                out.frags_.push_back(Fragment{0, 1, ch});
            } else {
                push_ref(fr.pos, static_cast<i32>(off) - 1);
                out.frags_.push_back(Fragment{0, 1, ch});
                push_ref(fr.pos + static_cast<i32>(off), fr.len - static_cast<i32>(off));
                if (trace) *trace = EditTrace{EditTrace::Position, fr.pos + static_cast<i32>(off) - 1};
            }
            break;
        case EditKind::Delete:
            if (fr.is_char()) {
                // drop it
            } else {
                push_ref(fr.pos, static_cast<i32>(off) - 1);
                push_ref(fr.pos + static_cast<i32>(off), fr.len - static_cast<i32>(off));
                if (trace) *trace = EditTrace{EditTrace::Position, fr.pos + static_cast<i32>(off) - 1};
            }
            break;
        case EditKind::Insert:
            if (fr.is_char() || off == 1) {
                out.frags_.push_back(Fragment{0, 1, ch});
                out.frags_.push_back(fr);
            } else {
                push_ref(fr.pos, static_cast<i32>(off) - 1);
                out.frags_.push_back(Fragment{0, 1, ch});
                push_ref(fr.pos + static_cast<i32>(off) - 1, fr.len - static_cast<i32>(off) + 1);
                if (trace) *trace = EditTrace{EditTrace::Gap, fr.pos + static_cast<i32>(off) - 2};
            }
            break;
    }
    for (i32 i = f + 1; i < fragment_count(); ++i) out.frags_.push_back(frags_[i]);
    out.reindex();
    return out;
}

HashPair KSubstring::hash_prefix(i64 i) const {
    if (i <= 0) return HashPair{};
    i64 off;
    i32 f = locate(i, &off);
    const Fragment& fr = frags_[f];
    HashPair part = fr.is_char() ? fp_->of_char(fr.ch)
                                 : fp_->range(fr.pos, fr.pos + static_cast<i32>(off) - 1);
    return fp_->append(hpref_[f], part, off);
}

namespace {

struct Cursor {
    const Seq* s;
    i64 t = 0; // matched so far

    // current contiguous piece: base ref (glob, len) or char
    bool piece(i32& glob, i64& len, i32& ch) const {
        i64 p = s->pos + t;
        if (!s->ks) {
            glob = static_cast<i32>(p);
            len = s->len - t;
            ch = 0;
            return true;
        }
        i64 off;
        i32 f = s->ks->locate(p, &off);
        const auto& fr = s->ks->fragment(f);
        if (fr.is_char()) {
            ch = fr.ch;
            len = 1;
            glob = 0;
            return false;
        }
        glob = fr.pos + static_cast<i32>(off) - 1;
        len = std::min<i64>(fr.len - off + 1, s->len - t);
        ch = 0;
        return true;
    }
};

i32 seq_char(const Seq& s, i64 off1) {
    i64 p = s.pos + off1 - 1;
    return s.ks ? s.ks->char_at(p) : s.g->text().at(p);
}

HashPair seq_hash(const Seq& s, i64 len, const FingerprintTable& fp) {
    if (s.ks) return s.ks->hash_range(s.pos, s.pos + len - 1);
    return fp.range(static_cast<i32>(s.pos), static_cast<i32>(s.pos + len - 1));
}

} // namespace

i64 seq_lcp_fingerprint(const Seq& a, const Seq& b) {
    i64 cap = std::min(a.len, b.len);
    if (cap <= 0) return 0;
    // both sides share the same base text; static/static pairs never call this
    const FingerprintTable* fp = a.ks ? a.ks->fp() : b.ks->fp();
    i64 lo = 0, hi = cap; // invariant: first lo chars equal
    while (lo < hi) {
        i64 mid = (lo + hi + 1) / 2;
        if (seq_hash(a, mid, *fp) == seq_hash(b, mid, *fp)) lo = mid; else hi = mid - 1;
    }
    // boundary re-check: the last matched character must agree; on a
    // fingerprint collision fall back to an exact scan
    if (lo > 0 && seq_char(a, lo) != seq_char(b, lo)) {
        i64 t = 0;
        while (t < cap && seq_char(a, t + 1) == seq_char(b, t + 1)) ++t;
        return t;
    }
    return lo;
}

i64 seq_lcp(const Seq& a, const Seq& b) {
    i64 cap = std::min(a.len, b.len);
    if (cap <= 0) return 0;
    if (!a.ks && !b.ks) {
        i32 ext = a.g->lce(static_cast<i32>(a.pos), static_cast<i32>(b.pos));
        return std::min<i64>(ext, cap);
    }
    Cursor ca{&a}, cb{&b};
    const Gst* g = a.g ? a.g : b.g;
    int hops = 0;
    i64 t = 0;
    while (t < cap) {
        if (++hops > 64) {
            // long periodic walk: fall back to fingerprint binary search on
            // the remainder
            return t + seq_lcp_fingerprint(a.drop(t), b.drop(t));
        }
        ca.t = cb.t = t;
        i32 g1, g2, c1, c2;
        i64 l1, l2;
        bool ref1 = ca.piece(g1, l1, c1);
        bool ref2 = cb.piece(g2, l2, c2);
        if (ref1 && ref2) {
            i64 step = std::min({l1, l2, cap - t});
            i64 e = g->lce(g1, g2);
            if (e < step) return t + e;
            t += step;
        } else {
            i32 x = ref1 ? g->text().at(g1) : c1;
            i32 y = ref2 ? g->text().at(g2) : c2;
            if (x != y) return t;
            t += 1;
        }
    }
    return cap;
}

i64 kangaroo_lce(const Gst& g, const std::vector<std::pair<i32, i32>>& subs, i32 i, i32 j) {
    for (size_t t = 1; t < subs.size(); ++t)
        require(subs[t - 1].first < subs[t].first, "kangaroo_lce: substitutions must be sorted");
    i32 n = g.n();
    auto char_at = [&](i32 p) -> i32 {
        auto it = std::lower_bound(subs.begin(), subs.end(), std::make_pair(p, INT32_MIN));
        if (it != subs.end() && it->first == p) return it->second;
        return g.text().at(p);
    };
    auto next_sub_at_or_after = [&](i32 p) -> i32 {
        auto it = std::lower_bound(subs.begin(), subs.end(), std::make_pair(p, INT32_MIN));
        return it == subs.end() ? n + 1 : it->first;
    };
    i64 t = 0;
    while (i + t <= n && j + t <= n) {
        i32 p = static_cast<i32>(i + t), q = static_cast<i32>(j + t);
        i32 stop = std::min(next_sub_at_or_after(p) - p, next_sub_at_or_after(q) - q);
        if (stop > 0) {
            i64 e = g.lce(p, q);
            if (e < stop) return t + e;
            t += stop;
        } else {
            if (char_at(p) != char_at(q)) return t;
            t += 1;
        }
    }
    return t;
}

} // namespace dynstr
