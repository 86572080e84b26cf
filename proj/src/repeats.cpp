#include "dynstr/repeats.hpp"

#include <algorithm>
#include <cmath>

namespace dynstr {

namespace {
std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }
} // namespace

void MonoIndex::build_step() {
    switch (built) {
        case 0:
            g = std::make_unique<Gst>(PartedText({s0, reversed(s0)}));
            break;
        case 1: {
            fp = std::make_unique<FingerprintTable>(g->text(), seed);
            iq = std::make_unique<InternalQueries>(g.get(), PartMap{0, 0, 1, 1});
            i32 maxc = 0;
            for (i32 p = 1; p <= g->n(); ++p) maxc = std::max(maxc, g->text().at(p));
            char_occ.assign(maxc + 1, {});
            i32 plen = g->text().part_len(0);
            for (i32 j = 1; j <= plen; ++j) {
                i32 gp = g->text().global(0, j);
                char_occ[g->text().at(gp)].push_back(gp);
            }
            break;
        }
        case 2:
            if (with_hia) hia = std::make_unique<HiaIndex>(iq.get(), 0, 1);
            break;
        case 3:
            if (dec_d > 0) dec = std::make_unique<DecrementalRepeat>(iq.get(), dec_d);
            break;
        default:
            break;
    }
    ++built;
}

namespace {

// longest suffix of a fragment occurring in part 0, as a local interval
Loc frag_suffix_in_s(const Gst& g, const KSubstring::Fragment& fr) {
    if (fr.is_char()) {
        i32 child = g.child_by_char(g.root(), fr.ch);
        if (child < 0) return Loc{1, 0};
        SaRange r = g.sa_range(NodeHandle{child, 1});
        if (!g.range_hits_part(r, 0)) return Loc{1, 0};
        i64 st = g.any_occurrence_local(r, 0);
        return Loc{st, st};
    }
    i64 lo = 0, hi = fr.len;
    auto ok = [&](i64 l) {
        if (l == 0) return true;
        SaRange r = g.range_of(Ref{fr.pos + fr.len - static_cast<i32>(l), static_cast<i32>(l)});
        return g.range_hits_part(r, 0);
    };
    while (lo < hi) {
        i64 mid = (lo + hi + 1) / 2;
        if (ok(mid)) lo = mid; else hi = mid - 1;
    }
    if (lo == 0) return Loc{1, 0};
    SaRange r = g.range_of(Ref{fr.pos + fr.len - static_cast<i32>(lo), static_cast<i32>(lo)});
    i64 st = g.any_occurrence_local(r, 0);
    return Loc{st, st + lo - 1};
}

// base end position of the fragment left of boundary i, or 0 for a char
i64 fprev_self_hi(const Gst& g, const KSubstring& sp, i32 i) {
    const auto& fr = sp.fragment(i - 1);
    if (fr.is_char()) return 0;
    return g.text().local(0, fr.pos) + fr.len - 1;
}

// crossing candidates whose in-window occurrence is pinned at the window
// start (w.lo): XY = W[1..x+y] with x >= 1, x a prefix-of-W = suffix-of-U
// overlap; exact over every arithmetic progression of overlaps
void pinned_start_candidates(const MonoIndex& ix, Loc U, Loc V, Loc W, i64 bF, i64 w_cur,
                             RepeatAnswer& best) {
    if (U.len() == 0) return;
    const Gst& g = *ix.g;
    Ref wref{g.text().global(0, static_cast<i32>(W.lo)), static_cast<i32>(W.len())};
    Ref uref{g.text().global(0, static_cast<i32>(U.lo)), static_cast<i32>(U.len())};
    Ref vref = V.len() > 0 ? Ref{g.text().global(0, static_cast<i32>(V.lo)),
                                 static_cast<i32>(V.len())}
                           : Ref{1, 0};
    auto offer = [&](i64 x, i64 ext) {
        i64 total = x + ext;
        if (total > best.len) best = RepeatAnswer{total, bF - x, w_cur};
    };
    auto ext_at = [&](i64 x) -> i64 {
        if (V.len() == 0 || W.lo + x > W.hi + 1) return 0;
        i64 e = seq_lcp(Seq::of_ref(g, ix.iq->part_suffix(0, W.lo + x)), Seq::of_ref(g, vref));
        return std::min(e, W.len() - x);
    };
    i64 cap = std::min(U.len(), W.len());
    for (i64 lo = 1; lo <= cap; lo <<= 1) {
        ArithProg ap = ix.iq->psq_band(wref, uref, lo, 2 * lo - 1);
        if (ap.empty()) continue;
        if (ap.count <= 4) {
            for (i64 k = 0; k < ap.count; ++k) offer(ap.at(k), ext_at(ap.at(k)));
            continue;
        }
        i64 p = ap.diff, cmax = ap.last();
        Seq X = Seq::of_ref(g, ix.iq->part_suffix(0, W.lo + cmax));
        Seq B = Seq::of_ref(g, Ref{g.text().global(0, static_cast<i32>(W.lo + cmax - p)),
                                   static_cast<i32>(p)});
        PiecewiseLcp f = make_power_lcp(B, X, Seq::of_ref(g, vref));
        std::vector<i64> cand{0, ap.count - 1};
        if (ap.count <= 64) {
            for (i64 w = 1; w + 1 < ap.count; ++w) cand.push_back(w);
        } else {
            auto push3 = [&](i64 w) {
                for (i64 d = -1; d <= 1; ++d) cand.push_back(w + d);
            };
            push3((f.b - f.a) / p);
            push3((f.ylen - f.a) / p);
            push3((f.b - f.xlen) / p);
            push3((f.b - (W.len() - cmax)) / p);
        }
        for (i64 w : cand) {
            if (w < 0 || w >= ap.count) continue;
            i64 x = cmax - w * p;
            i64 ext = std::min(f.eval(w), W.len() - x);
            offer(x, std::max<i64>(ext, 0));
        }
    }
}

// crossing candidates whose in-window occurrence ends at the window end:
// XY = W-suffix of length ext + y with y >= 1 a prefix-of-V = suffix-of-W
// overlap
void pinned_end_candidates(const MonoIndex& ix, Loc U, Loc V, Loc W, i64 bF, i64 w_cur,
                           RepeatAnswer& best) {
    if (V.len() == 0) return;
    const Gst& g = *ix.g;
    i64 n = g.text().part_len(0);
    Ref wref{g.text().global(0, static_cast<i32>(W.lo)), static_cast<i32>(W.len())};
    Ref vref{g.text().global(0, static_cast<i32>(V.lo)), static_cast<i32>(V.len())};
    auto offer = [&](i64 y, i64 ext) {
        i64 total = y + ext;
        if (total > best.len)
            best = RepeatAnswer{total, bF - ext, w_cur + (W.hi - y - ext + 1 - W.lo)};
    };
    auto ext_at = [&](i64 y) -> i64 {
        if (U.len() == 0) return 0;
        i64 q = W.hi - y;
        if (q < W.lo) return 0;
        i64 e = seq_lcp(Seq::of_ref(g, ix.iq->part_suffix(1, n - q + 1)),
                        Seq::of_ref(g, ix.iq->rev_ref(0, 1, U.lo, U.hi)));
        return std::min(e, q - W.lo + 1);
    };
    i64 cap = std::min(V.len(), W.len());
    for (i64 lo = 1; lo <= cap; lo <<= 1) {
        ArithProg ap = ix.iq->psq_band(vref, wref, lo, 2 * lo - 1);
        if (ap.empty()) continue;
        if (ap.count <= 4) {
            for (i64 k = 0; k < ap.count; ++k) offer(ap.at(k), ext_at(ap.at(k)));
            continue;
        }
        i64 p = ap.diff, cmax = ap.last();
        i64 q0 = W.hi - cmax;
        Seq X = Seq::of_ref(g, ix.iq->part_suffix(1, n - q0 + 1));
        Seq B = Seq::of_ref(g, ix.iq->rev_ref(0, 1, q0 + 1, q0 + p));
        PiecewiseLcp f = make_power_lcp(B, X, Seq::of_ref(g, ix.iq->rev_ref(0, 1, U.lo, U.hi)));
        std::vector<i64> cand{0, ap.count - 1};
        if (ap.count <= 64) {
            for (i64 w = 1; w + 1 < ap.count; ++w) cand.push_back(w);
        } else {
            auto push3 = [&](i64 w) {
                for (i64 d = -1; d <= 1; ++d) cand.push_back(w + d);
            };
            push3((f.b - f.a) / p);
            push3((f.ylen - f.a) / p);
            push3((f.b - f.xlen) / p);
            push3((f.b - (W.len() - cmax)) / p);
        }
        for (i64 w : cand) {
            if (w < 0 || w >= ap.count) continue;
            i64 y = cmax - w * p;
            i64 ext = std::min(f.eval(w), (W.hi - y) - W.lo + 1);
            offer(y, std::max<i64>(ext, 0));
        }
    }
}

// one-sided cross candidates for the repeat problem: one occurrence covers a
// boundary, the other sits inside a fragment of the same string; the windows
// adjacent to the boundary are trimmed around the trivial self-match and the
// pinned candidates evaluated directly
RepeatAnswer repeat_cross_one_sided(const MonoIndex& ix, const KSubstring& sp, i64 floor_len) {
    RepeatAnswer best;
    best.len = floor_len;
    const Gst& g = *ix.g;
    i32 k = sp.fragment_count();
    if (k <= 1) return RepeatAnswer{};

    struct Window {
        Loc w;
        i64 cur_start;
    };
    std::vector<Window> windows;
    for (i32 j = 0; j < k; ++j) {
        const auto& fr = sp.fragment(j);
        if (fr.is_char() || fr.len < 2) continue;
        i64 lo = g.text().local(0, fr.pos);
        windows.push_back(Window{Loc{lo, lo + fr.len - 1}, sp.fragment_start(j)});
    }
    if (windows.empty()) return RepeatAnswer{};

    auto frag_range = [&](const KSubstring::Fragment& fr) -> std::optional<SaRange> {
        if (fr.is_char()) {
            i32 child = g.child_by_char(g.root(), fr.ch);
            if (child < 0) return std::nullopt;
            return g.sa_range(NodeHandle{child, 1});
        }
        return g.range_of(Ref{fr.pos, fr.len});
    };

    // sliding longest-prefix window over fragments, occurrences in S itself
    i64 jn = 0, wstart = 0, wlen = 0;
    auto win_range = [&]() {
        return wlen == 0 ? SaRange{1, g.n()}
                         : g.range_of(Ref{g.text().global(0, static_cast<i32>(wstart)),
                                          static_cast<i32>(wlen)});
    };
    for (i32 i = 0; i < k; ++i) {
        if (static_cast<i64>(i) > jn) {
            jn = i;
            wlen = 0;
        } else if (i > 0) {
            i64 drop = sp.fragment(i - 1).len;
            if (wlen >= drop) {
                wstart += drop;
                wlen -= drop;
            } else {
                jn = i;
                wlen = 0;
            }
        }
        while (jn < k) {
            const auto& fr = sp.fragment(static_cast<i32>(jn));
            auto rf = frag_range(fr);
            if (!rf) break;
            auto merged = g.concat_ranges(win_range(), static_cast<i32>(wlen), *rf, fr.len);
            if (!merged || !g.range_hits_part(*merged, 0)) break;
            wstart = g.any_occurrence_local(*merged, 0);
            wlen += fr.len;
            ++jn;
        }
        if (i == 0) continue;

        i64 pstart = wstart, plen = wlen;
        if (jn < k) {
            const auto& fr = sp.fragment(static_cast<i32>(jn));
            i64 lo = 0, hi = fr.is_char() ? 1 : fr.len;
            auto try_head = [&](i64 l) -> std::optional<std::pair<i64, i64>> {
                if (l == 0) return std::make_pair(wstart, wlen);
                std::optional<SaRange> rfh;
                if (fr.is_char()) rfh = frag_range(fr);
                else rfh = g.range_of(Ref{fr.pos, static_cast<i32>(l)});
                if (!rfh) return std::nullopt;
                auto merged = g.concat_ranges(win_range(), static_cast<i32>(wlen), *rfh,
                                              static_cast<i32>(l));
                if (!merged || !g.range_hits_part(*merged, 0)) return std::nullopt;
                return std::make_pair(g.any_occurrence_local(*merged, 0), wlen + l);
            };
            while (lo < hi) {
                i64 mid = (lo + hi + 1) / 2;
                if (try_head(mid)) lo = mid; else hi = mid - 1;
            }
            if (auto o = try_head(lo)) {
                pstart = o->first;
                plen = o->second;
            }
        }
        Loc Uloc = frag_suffix_in_s(g, sp.fragment(i - 1));
        Loc Vloc = plen > 0 ? Loc{pstart, pstart + plen - 1} : Loc{1, 0};
        if (Uloc.len() + Vloc.len() <= best.len) continue;
        i64 bF = sp.fragment_start(i);
        // base intervals of the fragments adjacent to this boundary: their
        // windows contain the trivial self-match, which is not a repeat
        i64 self_lo = sp.fragment(i).is_char() ? 0 : g.text().local(0, sp.fragment(i).pos);
        i64 self_hi = fprev_self_hi(g, sp, i);
        for (const auto& w : windows) {
            if (std::min<i64>(Uloc.len() + Vloc.len(), w.w.len()) <= best.len) continue;
            bool starts_self = w.w.lo == self_lo && w.cur_start == bF;
            bool ends_self = self_hi > 0 && w.w.hi == self_hi &&
                             w.cur_start + w.w.len() == bF;
            Loc query_w = w.w;
            if (starts_self) query_w.lo += 1;
            if (ends_self) query_w.hi -= 1;
            if (query_w.len() > 0) {
                ThreeSsResult ts = ix.hia->three_substrings_lcs(Uloc, Vloc, query_w);
                if (ts.total > best.len) {
                    i64 posF = bF - ts.xlen;
                    i64 posG = w.cur_start + (ts.wpos - w.w.lo);
                    if (posF != posG) best = RepeatAnswer{ts.total, posF, posG};
                }
            }
            // candidates whose in-window occurrence sits exactly at the
            // trimmed position, evaluated directly
            if (starts_self) pinned_start_candidates(ix, Uloc, Vloc, w.w, bF, w.cur_start, best);
            if (ends_self) pinned_end_candidates(ix, Uloc, Vloc, w.w, bF, w.cur_start, best);
        }
    }
    if (best.len <= floor_len) return RepeatAnswer{};
    return best;
}

// first current position at or after `from` holding character ch, or 0
i64 find_char_in_mono(const MonoIndex& ix, const KSubstring& rep, i32 ch, i64 from) {
    const auto& occ = ix.char_occ;
    for (i32 f = 0; f < rep.fragment_count(); ++f) {
        const auto& fr = rep.fragment(f);
        i64 fs = rep.fragment_start(f);
        if (fs + fr.len - 1 < from) continue;
        if (fr.is_char()) {
            if (fr.ch == ch && fs >= from) return fs;
            continue;
        }
        if (ch >= static_cast<i32>(occ.size())) continue;
        const auto& v = occ[ch];
        i32 lo_glob = fr.pos + static_cast<i32>(std::max<i64>(0, from - fs));
        auto it = std::lower_bound(v.begin(), v.end(), lo_glob);
        if (it != v.end() && *it <= fr.pos + fr.len - 1) return fs + (*it - fr.pos);
    }
    return 0;
}

} // namespace

RepeatAnswer k_substring_repeat(const MonoIndex& ix, const KSubstring& sp, const KSubstring& spr) {
    RepeatAnswer best;
    // unit case is handled by the session (character counts); here only >= 1
    // via the decremental state and the boundary cases
    if (ix.dec) {
        auto a = ix.dec->query();
        if (a.len >= 1) {
            i64 c1 = 0, c2 = 0;
            i32 f1 = sp.fragment_of_base(ix.g->text().global(0, static_cast<i32>(a.pos1)), &c1);
            i32 f2 = sp.fragment_of_base(ix.g->text().global(0, static_cast<i32>(a.pos2)), &c2);
            if (f1 >= 0 && f2 >= 0 && c1 != c2) best = RepeatAnswer{a.len, c1, c2};
        }
    }
    RepeatAnswer one = repeat_cross_one_sided(ix, sp, best.len);
    if (one.len > best.len) best = one;
    CrossCtx c{ix.iq.get(), ix.hia.get(), &sp, &spr, &sp, &spr, 0, 1, 0, 1, true};
    CaseAnswer two = cross_two_sided(c);
    if (two.len > best.len) best = RepeatAnswer{two.len, two.pos_s, two.pos_t};
    return best;
}

DynamicRepeat::DynamicRepeat(std::string s) : DynamicRepeat(std::move(s), Config()) {}

DynamicRepeat::DynamicRepeat(std::string s, Config cfg) : cfg_(cfg) {
    i64 n = std::max<i64>(1, static_cast<i64>(s.size()));
    kappa_ = cfg.kappa > 0 ? cfg.kappa
                           : std::max<i64>(4, static_cast<i64>(std::llround(std::cbrt(static_cast<double>(n)))));
    i64 d = cfg.dec_d > 0 ? cfg.dec_d
                          : std::max<i64>(1, static_cast<i64>(std::llround(
                                                 std::pow(static_cast<double>(n), 2.0 / 3.0))));
    ix_ = std::make_unique<MonoIndex>();
    ix_->s0 = std::move(s);
    ix_->seed = cfg.seed;
    ix_->dec_d = d;
    ix_->build_all();
    sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
    spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 1);
    cnt_.assign(512, 0);
    for (char ch : ix_->s0) cnt_[static_cast<unsigned char>(ch) + PartedText::kCharShift]++;
    steps_per_tick_ = static_cast<int>((ix_->total_steps() + kappa_ - 1) / kappa_) + 1;
}

std::string DynamicRepeat::materialize() const {
    std::string out;
    for (i32 v : sp_.materialize()) out.push_back(static_cast<char>(v - PartedText::kCharShift));
    return out;
}

void DynamicRepeat::tick_rebuild() {
    auto fresh_index = [&]() {
        auto nx = std::make_unique<MonoIndex>();
        nx->s0 = materialize();
        nx->seed = cfg_.seed;
        nx->dec_d = ix_->dec_d;
        return nx;
    };
    if (!cfg_.deamortize) {
        if (edits_since_snapshot_ >= kappa_) {
            ix_ = fresh_index();
            ix_->build_all();
            sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
            spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 1);
            edits_since_snapshot_ = 0;
        }
        return;
    }
    if (!pending_ && edits_since_snapshot_ >= kappa_) {
        pending_ = fresh_index();
        buffer_.clear();
    }
    if (pending_) {
        for (int s = 0; s < steps_per_tick_ && !pending_->done(); ++s) pending_->build_step();
        if (edits_since_snapshot_ >= 2 * kappa_) {
            pending_->build_all();
            ix_ = std::move(pending_);
            sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
            spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 1);
            for (const EditOp& e : buffer_) {
                i64 len = sp_.size();
                EditTrace tr;
                sp_ = sp_.applied(e.kind, e.pos, e.ch, &tr);
                i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
                spr_ = spr_.applied(e.kind, mpos, e.ch, nullptr);
                if (ix_->dec && tr.kind != EditTrace::None) {
                    i64 local = ix_->g->text().local(0, tr.global);
                    ix_->dec->replace_event(tr.kind == EditTrace::Position ? 2 * local
                                                                           : 2 * local + 1);
                }
            }
            buffer_.clear();
            edits_since_snapshot_ = kappa_;
        }
    }
}

RepeatAnswer DynamicRepeat::apply(const EditOp& e) {
    i64 len = sp_.size();
    if (e.kind != EditKind::Insert) {
        require(e.pos >= 1 && e.pos <= len, "dynamic_repeat_edit: position out of range");
        cnt_[sp_.char_at(e.pos)]--;
    } else {
        require(e.pos >= 1 && e.pos <= len + 1, "dynamic_repeat_edit: position out of range");
    }
    if (e.kind != EditKind::Delete) cnt_[e.ch]++;
    EditTrace tr;
    sp_ = sp_.applied(e.kind, e.pos, e.ch, &tr);
    i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
    spr_ = spr_.applied(e.kind, mpos, e.ch, nullptr);
    if (ix_->dec && tr.kind != EditTrace::None) {
        i64 local = ix_->g->text().local(0, tr.global);
        ix_->dec->replace_event(tr.kind == EditTrace::Position ? 2 * local : 2 * local + 1);
    }
    if (pending_) buffer_.push_back(e);
    ++edits_since_snapshot_;
    tick_rebuild();
    max_lag_ = std::max(max_lag_, edits_since_snapshot_);
    return current();
}

RepeatAnswer DynamicRepeat::current() const {
    RepeatAnswer best = k_substring_repeat(*ix_, sp_, spr_);
    if (best.len < 1) {
        // unit case: any character appearing twice
        for (i32 ch = 0; ch < 512; ++ch) {
            if (cnt_[ch] >= 2) {
                i64 p1 = find_char_in_mono(*ix_, sp_, ch, 1);
                i64 p2 = p1 > 0 ? find_char_in_mono(*ix_, sp_, ch, p1 + 1) : 0;
                if (p1 > 0 && p2 > 0) {
                    best = RepeatAnswer{1, p1, p2};
                    break;
                }
            }
        }
    }
    return best;
}

} // namespace dynstr
