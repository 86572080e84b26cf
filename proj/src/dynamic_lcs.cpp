#include "dynstr/dynamic_lcs.hpp"

#include <algorithm>
#include <cmath>

namespace dynstr {

namespace {

std::string reversed(const std::string& s) { return std::string(s.rbegin(), s.rend()); }

// a border-processing operand: substring of the base text or a single char
struct Piece {
    Ref ref{1, 0};
    i32 ch = 0;
    bool is_char = false;
    i64 len() const { return is_char ? 1 : ref.len; }
};

Piece piece_of(const KSubstring::Fragment& fr) {
    Piece p;
    if (fr.is_char()) {
        p.is_char = true;
        p.ch = fr.ch;
    } else {
        p.ref = Ref{fr.pos, fr.len};
    }
    return p;
}

std::optional<SaRange> range_of_char(const Gst& g, i32 c) {
    i32 child = g.child_by_char(g.root(), c);
    if (child < 0) return std::nullopt;
    return g.sa_range(NodeHandle{child, 1});
}

std::optional<SaRange> range_of_piece(const Gst& g, const Piece& p) {
    if (p.is_char) return range_of_char(g, p.ch);
    if (p.ref.len == 0) return SaRange{1, g.n()};
    return g.range_of(p.ref);
}

i32 piece_first_char(const Gst& g, const Piece& p) {
    return p.is_char ? p.ch : g.text().at(p.ref.pos);
}
i32 piece_last_char(const Gst& g, const Piece& p) {
    return p.is_char ? p.ch : g.text().at(p.ref.pos + p.ref.len - 1);
}

struct Occ { // occurrence of a string inside one text part, local coordinates
    i64 start = 0, len = 0;
};

// glue candidate: common substring aligned so that position bA of A matches
// position bB of B (their left parts end at bA-1 / bB-1)
void glue_candidate(const CrossCtx& c, bool swapped, i64 bA, i64 bB, CaseAnswer& best, int tag) {
    const KSubstring *A = swapped ? c.g : c.f, *Ar = swapped ? c.gr : c.fr;
    const KSubstring *B = swapped ? c.f : c.g, *Br = swapped ? c.fr : c.gr;
    i64 lenA = A->size(), lenB = B->size();
    if (bA < 1 || bA > lenA + 1 || bB < 1 || bB > lenB + 1) return;
    i64 l1 = seq_lcp(Seq::of_ksub(*A, bA), Seq::of_ksub(*B, bB));
    i64 l2 = seq_lcp(Seq::of_ksub(*Ar, lenA - bA + 2), Seq::of_ksub(*Br, lenB - bB + 2));
    i64 total = l1 + l2;
    if (total <= best.len) return;
    i64 posA = bA - l2, posB = bB - l2;
    if (c.exclude_same_start && posA == posB) return;
    bool sw = swapped;
    best = CaseAnswer{total, sw ? posB : posA, sw ? posA : posB, tag};
}

// candidates aligned at each prefix-of-Y = suffix-of-Z overlap, where Y sits
// right of A's boundary bA and Z left of B's boundary bB; evaluations run on
// the current strings
void process_borders(const CrossCtx& c, bool swapped, const Piece& Y, const Piece& Z, i64 bA,
                     i64 bB, CaseAnswer& best, int tag) {
    const Gst& g = c.iq->gst();
    const KSubstring *A = swapped ? c.g : c.f, *Ar = swapped ? c.gr : c.fr;
    const KSubstring *B = swapped ? c.f : c.g, *Br = swapped ? c.fr : c.gr;
    i64 lenA = A->size(), lenB = B->size();

    auto offer = [&](i64 lambda, i64 l1, i64 l2) {
        i64 total = l1 + lambda + l2;
        if (total <= best.len) return;
        i64 posA = bA - l2, posB = bB - lambda - l2;
        if (c.exclude_same_start && posA == posB) return;
        best = CaseAnswer{total, swapped ? posB : posA, swapped ? posA : posB, tag};
    };
    auto eval_direct = [&](i64 lambda) {
        i64 l1 = seq_lcp(Seq::of_ksub(*A, bA + lambda), Seq::of_ksub(*B, bB));
        i64 l2 = seq_lcp(Seq::of_ksub(*Ar, lenA - bA + 2),
                         Seq::of_ksub(*Br, lenB - bB + lambda + 2));
        offer(lambda, l1, l2);
    };

    if (Y.len() == 0 || Z.len() == 0) return;
    if (Y.is_char || Z.is_char) {
        // only lambda = 1 is possible
        if (piece_first_char(g, Y) == piece_last_char(g, Z)) eval_direct(1);
        return;
    }
    i64 cap = std::min<i64>(Y.ref.len, Z.ref.len);
    for (i64 lo = 1; lo <= cap; lo <<= 1) {
        ArithProg ap = c.iq->psq_band(Y.ref, Z.ref, lo, 2 * lo - 1);
        if (ap.empty()) continue;
        if (ap.count <= 2) {
            for (i64 k = 0; k < ap.count; ++k) eval_direct(ap.at(k));
            continue;
        }
        i64 p = ap.diff, u = ap.last();
        // lcp side: A'[bA+u-wp ..] = P1^w X1 against Y1 = B' from bB
        PiecewiseLcp f1 = make_power_lcp(Seq::of_ksub_range(*A, bA + u - p, p),
                                         Seq::of_ksub(*A, bA + u), Seq::of_ksub(*B, bB));
        // lcs side on the mirrored representations
        i64 x2 = lenB - bB + u + 2;
        PiecewiseLcp f2 = make_power_lcp(Seq::of_ksub_range(*Br, x2 - p, p),
                                         Seq::of_ksub(*Br, x2), Seq::of_ksub(*Ar, lenA - bA + 2));
        auto value = [&](i64 w) { return f1.eval(w) + f2.eval(w); };
        std::vector<i64> cand;
        if (ap.count <= 64) {
            for (i64 w = 0; w < ap.count; ++w) cand.push_back(w);
        } else {
            auto push3 = [&](i64 w) {
                for (i64 d = -1; d <= 1; ++d) cand.push_back(w + d);
            };
            cand.push_back(0);
            cand.push_back(ap.count - 1);
            push3((f1.b - f1.a) / p);
            push3((f2.b - f2.a) / p);
            push3((f1.ylen - f1.a) / p);
            push3((f2.ylen - f2.a) / p);
            push3((f1.b - f1.xlen) / p);
            push3((f2.b - f2.xlen) / p);
        }
        i64 wskip = -1;
        if (c.exclude_same_start) {
            // posA == posB at exactly lambda* = bB - bA
            i64 lamstar = bB - bA;
            if (lamstar >= 1 && (u - lamstar) % p == 0) {
                wskip = (u - lamstar) / p;
                cand.push_back(wskip - 1);
                cand.push_back(wskip + 1);
            }
        }
        for (i64 w : cand) {
            if (w < 0 || w >= ap.count || w == wskip) continue;
            i64 lambda = u - w * p;
            offer(lambda, f1.eval(w), f2.eval(w));
        }
    }
}

// longest suffix of a piece occurring in `part`, with one occurrence
Occ longest_suffix_in_part(const Gst& g, const Piece& p, i32 part) {
    if (p.is_char) {
        auto rng = range_of_char(g, p.ch);
        if (!rng || !g.range_hits_part(*rng, part)) return {};
        return Occ{g.any_occurrence_local(*rng, part), 1};
    }
    i64 lo = 0, hi = p.ref.len;
    auto ok = [&](i64 l) {
        if (l == 0) return true;
        SaRange r = g.range_of(Ref{p.ref.pos + p.ref.len - static_cast<i32>(l), static_cast<i32>(l)});
        return g.range_hits_part(r, part);
    };
    while (lo < hi) {
        i64 mid = (lo + hi + 1) / 2;
        if (ok(mid)) lo = mid; else hi = mid - 1;
    }
    if (lo == 0) return {};
    SaRange r = g.range_of(Ref{p.ref.pos + p.ref.len - static_cast<i32>(lo), static_cast<i32>(lo)});
    return Occ{g.any_occurrence_local(r, part), lo};
}

} // namespace

// first current-string position holding character ch, or 0
i64 find_char_in_rep(const LcsIndex& ix, const KSubstring& rep, i32 ch) {
    const auto& occ = ix.char_occ;
    for (i32 f = 0; f < rep.fragment_count(); ++f) {
        const auto& fr = rep.fragment(f);
        if (fr.is_char()) {
            if (fr.ch == ch) return rep.fragment_start(f);
            continue;
        }
        if (ch >= static_cast<i32>(occ.size())) continue;
        const auto& v = occ[ch];
        auto it = std::lower_bound(v.begin(), v.end(), fr.pos);
        if (it != v.end() && *it <= fr.pos + fr.len - 1)
            return rep.fragment_start(f) + (*it - fr.pos);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// LcsIndex
// ---------------------------------------------------------------------------

void LcsIndex::build_step() {
    switch (built) {
        case 0:
            g = std::make_unique<Gst>(PartedText({s0, t0, reversed(s0), reversed(t0)}));
            break;
        case 1: {
            fp = std::make_unique<FingerprintTable>(g->text(), seed);
            iq = std::make_unique<InternalQueries>(g.get(), PartMap{0, 1, 2, 3});
            i32 maxc = 0;
            for (i32 p = 1; p <= g->n(); ++p) maxc = std::max(maxc, g->text().at(p));
            char_occ.assign(maxc + 1, {});
            for (i32 part = 0; part < 2; ++part) {
                i32 plen = g->text().part_len(part);
                for (i32 j = 1; j <= plen; ++j) {
                    i32 gp = g->text().global(part, j);
                    char_occ[g->text().at(gp)].push_back(gp);
                }
            }
            break;
        }
        case 2:
            hia_t = std::make_unique<HiaIndex>(iq.get(), 1, 3);
            break;
        case 3:
            hia_s = std::make_unique<HiaIndex>(iq.get(), 0, 2);
            break;
        case 4:
            if (dec_d > 0) dec = std::make_unique<DecrementalLcs>(iq.get(), dec_d);
            break;
        default:
            break;
    }
    ++built;
}

// ---------------------------------------------------------------------------
// cross queries
// ---------------------------------------------------------------------------

CaseAnswer cross_one_sided(const CrossCtx& c) {
    CaseAnswer best;
    const Gst& g = c.iq->gst();
    i32 k = c.f->fragment_count();
    if (k <= 1) return best;

    // windows: fragments of G with length >= 2
    struct Window {
        Loc w;
        i64 cur_start;
    };
    std::vector<Window> windows;
    for (i32 j = 0; j < c.g->fragment_count(); ++j) {
        const auto& fr = c.g->fragment(j);
        if (fr.is_char() || fr.len < 2) continue;
        i64 lo = g.text().local(c.part_g, fr.pos);
        windows.push_back(Window{Loc{lo, lo + fr.len - 1}, c.g->fragment_start(j)});
    }
    if (windows.empty()) return best;

    // sliding next() over F fragments: occurrence of F_i..F_{jn-1} in part_g
    i64 jn = 0;
    Occ win{};
    auto win_range = [&]() -> std::optional<SaRange> {
        if (win.len == 0) return SaRange{1, g.n()};
        return g.range_of(Ref{g.text().global(c.part_g, static_cast<i32>(win.start)),
                              static_cast<i32>(win.len)});
    };
    for (i32 i = 0; i < k; ++i) {
        if (static_cast<i64>(i) > jn) {
            jn = i;
            win = Occ{};
        } else if (i > 0) {
            // drop F_{i-1} from the front
            i64 drop = c.f->fragment(i - 1).len;
            if (win.len >= drop) {
                win.start += drop;
                win.len -= drop;
            } else {
                jn = i;
                win = Occ{};
            }
        }
        // extend with whole fragments while the concatenation occurs in G's base
        while (jn < k) {
            const auto& fr = c.f->fragment(static_cast<i32>(jn));
            auto rf = range_of_piece(g, piece_of(fr));
            if (!rf) break;
            auto rw = win_range();
            auto merged = g.concat_ranges(*rw, static_cast<i32>(win.len), *rf, fr.len);
            if (!merged || !g.range_hits_part(*merged, c.part_g)) break;
            i64 start = g.any_occurrence_local(*merged, c.part_g);
            win = Occ{start, win.len + fr.len};
            ++jn;
        }
        if (i == 0) continue; // no boundary before the first fragment

        // P_i = win extended by the longest feasible head of F_{jn}
        Occ P = win;
        if (jn < k) {
            const auto& fr = c.f->fragment(static_cast<i32>(jn));
            if (fr.is_char()) {
                auto rf = range_of_piece(g, piece_of(fr));
                if (rf) {
                    auto rw = win_range();
                    auto merged = g.concat_ranges(*rw, static_cast<i32>(win.len), *rf, 1);
                    if (merged && g.range_hits_part(*merged, c.part_g))
                        P = Occ{g.any_occurrence_local(*merged, c.part_g), win.len + 1};
                }
            } else {
                i64 lo = 0, hi = fr.len;
                auto ok = [&](i64 l) -> std::optional<Occ> {
                    if (l == 0) return win;
                    SaRange rf = g.range_of(Ref{fr.pos, static_cast<i32>(l)});
                    auto rw = win_range();
                    auto merged = g.concat_ranges(*rw, static_cast<i32>(win.len), rf,
                                                  static_cast<i32>(l));
                    if (!merged || !g.range_hits_part(*merged, c.part_g)) return std::nullopt;
                    return Occ{g.any_occurrence_local(*merged, c.part_g), win.len + l};
                };
                while (lo < hi) {
                    i64 mid = (lo + hi + 1) / 2;
                    if (ok(mid)) lo = mid; else hi = mid - 1;
                }
                if (auto o = ok(lo)) P = *o;
            }
        }
        Occ Q = longest_suffix_in_part(g, piece_of(c.f->fragment(i - 1)), c.part_g);
        if (Q.len + P.len <= best.len) continue;
        i64 bF = c.f->fragment_start(i);
        Loc Uloc{Q.start, Q.start + Q.len - 1};
        Loc Vloc{P.start, P.start + P.len - 1};
        for (const auto& w : windows) {
            if (std::min<i64>(Q.len + P.len, w.w.len()) <= best.len) continue;
            ThreeSsResult ts = c.hia_g->three_substrings_lcs(Uloc, Vloc, w.w);
            if (ts.total > best.len) {
                i64 posF = bF - ts.xlen;
                i64 posG = w.cur_start + (ts.wpos - w.w.lo);
                best = CaseAnswer{ts.total, posF, posG, 2};
            }
        }
    }
    return best;
}

CaseAnswer cross_two_sided(const CrossCtx& c) {
    CaseAnswer best;
    i32 k1 = c.f->fragment_count(), k2 = c.g->fragment_count();
    if (k1 < 2 || k2 < 2) return best;
    for (i32 i = 1; i < k1; ++i) {
        i64 bS = c.f->fragment_start(i);
        Piece fy = piece_of(c.f->fragment(i));      // right of the F boundary
        Piece fz = piece_of(c.f->fragment(i - 1));  // left of it
        for (i32 j = 1; j < k2; ++j) {
            i64 bT = c.g->fragment_start(j);
            Piece gy = piece_of(c.g->fragment(j));
            Piece gz = piece_of(c.g->fragment(j - 1));
            for (i64 delta = -1; delta <= 1; ++delta)
                glue_candidate(c, false, bS, bT + delta, best, 4);
            process_borders(c, false, fy, gz, bS, bT, best, 4);
            process_borders(c, true, gy, fz, bT, bS, best, 4);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// LCS after one substitution per string
// ---------------------------------------------------------------------------

LcsAnswer lcs_one_sub_per_string(const LcsIndex& ix, i64 i, i32 alpha, i64 j, i32 beta) {
    const Gst& g = *ix.g;
    i64 ns = ix.ns(), nt = ix.nt();
    require(i >= 1 && i <= ns && j >= 1 && j <= nt, "lcs_one_sub_per_string: invalid position");

    KSubstring sp = KSubstring::whole_part(g, *ix.fp, 0).applied(EditKind::Substitute, i, alpha);
    KSubstring spr = KSubstring::whole_part(g, *ix.fp, 2).applied(EditKind::Substitute, ns - i + 1, alpha);
    KSubstring tp = KSubstring::whole_part(g, *ix.fp, 1).applied(EditKind::Substitute, j, beta);
    KSubstring tpr = KSubstring::whole_part(g, *ix.fp, 3).applied(EditKind::Substitute, nt - j + 1, beta);

    LcsAnswer best;
    auto upd = [&](i64 len, i64 ps, i64 pt) {
        if (len > best.len) best = LcsAnswer{len, ps, pt};
    };

    // no changed position covered: prefix/suffix LCS around the cuts
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Side ss = a == 0 ? Side::Prefix : Side::Suffix;
            Side st = b == 0 ? Side::Prefix : Side::Suffix;
            i64 ci = a == 0 ? i - 1 : i + 1;
            i64 cj = b == 0 ? j - 1 : j + 1;
            LcsAnswer r = ix.iq->lcs_prefsuf(ss, ci, st, cj);
            upd(r.len, r.pos_s, r.pos_t);
        }

    // changed position in exactly one string
    auto one_side = [&](const HiaIndex& hia, i32 part_w, i64 pos, i32 ch, i64 other_cut,
                        bool s_side) {
        i64 n_self = s_side ? ns : nt;
        i64 n_other = s_side ? nt : ns;
        i32 part_self = s_side ? 0 : 1;
        // U: longest suffix of self[1..pos-1] occurring in the other string
        Piece left;
        left.ref = Ref{g.text().global(part_self, 1), static_cast<i32>(pos - 1)};
        Occ U = longest_suffix_in_part(g, left, part_w);
        // V: longest prefix of ch . self[pos+1..] occurring in the other string
        Occ V{};
        if (auto rc = range_of_char(g, ch); rc && g.range_hits_part(*rc, part_w)) {
            i64 lo = 0, hi = n_self - pos;
            auto ok = [&](i64 l) -> std::optional<Occ> {
                SaRange base = *rc;
                if (l > 0) {
                    SaRange rtail =
                        g.range_of(Ref{g.text().global(part_self, static_cast<i32>(pos + 1)),
                                       static_cast<i32>(l)});
                    auto merged = g.concat_ranges(base, 1, rtail, static_cast<i32>(l));
                    if (!merged || !g.range_hits_part(*merged, part_w)) return std::nullopt;
                    return Occ{g.any_occurrence_local(*merged, part_w), l + 1};
                }
                return Occ{g.any_occurrence_local(base, part_w), 1};
            };
            while (lo < hi) {
                i64 mid = (lo + hi + 1) / 2;
                if (ok(mid)) lo = mid; else hi = mid - 1;
            }
            if (auto o = ok(lo)) V = *o;
        }
        if (U.len + V.len == 0) return;
        Loc Uloc{U.start, U.start + U.len - 1};
        Loc Vloc{V.start, V.start + V.len - 1};
        for (int half = 0; half < 2; ++half) {
            Loc W = half == 0 ? Loc{1, other_cut - 1} : Loc{other_cut + 1, n_other};
            if (W.len() <= 0) continue;
            ThreeSsResult ts = hia.three_substrings_lcs(Uloc, Vloc, W);
            if (ts.total > 0) {
                i64 pos_self = pos - ts.xlen;
                if (s_side) upd(ts.total, pos_self, ts.wpos);
                else upd(ts.total, ts.wpos, pos_self);
            }
        }
    };
    one_side(*ix.hia_t, 1, i, alpha, j, true);
    one_side(*ix.hia_s, 0, j, beta, i, false);

    // changed positions in both strings: border-aligned candidates
    CrossCtx cc{ix.iq.get(), nullptr, &sp, &spr, &tp, &tpr, 0, 2, 1, 3, false};
    CaseAnswer ca;
    for (auto [bs, bt] : {std::pair<i64, i64>{i + 1, j + 1}, {i + 1, j}, {i, j + 1}})
        glue_candidate(cc, false, bs, bt, ca, 4);
    Piece y1;
    y1.ref = Ref{g.text().global(0, static_cast<i32>(i + 1)), static_cast<i32>(ns - i)};
    Piece z1;
    z1.ref = Ref{g.text().global(1, 1), static_cast<i32>(j - 1)};
    process_borders(cc, false, y1, z1, i + 1, j, ca, 4);
    Piece y2;
    y2.ref = Ref{g.text().global(1, static_cast<i32>(j + 1)), static_cast<i32>(nt - j)};
    Piece z2;
    z2.ref = Ref{g.text().global(0, 1), static_cast<i32>(i - 1)};
    process_borders(cc, true, y2, z2, j + 1, i, ca, 4);
    upd(ca.len, ca.pos_s, ca.pos_t);

    return best;
}

// ---------------------------------------------------------------------------
// k-substring LCS (T static)
// ---------------------------------------------------------------------------

LcsAnswer k_substring_lcs(const LcsIndex& ix, const KSubstring& sp, const KSubstring& spr) {
    const Gst& g = *ix.g;
    LcsAnswer best;
    auto upd = [&](i64 len, i64 ps, i64 pt) {
        if (len > best.len) best = LcsAnswer{len, ps, pt};
    };
    // internal case: each fragment against the whole T
    for (i32 fidx = 0; fidx < sp.fragment_count(); ++fidx) {
        const auto& fr = sp.fragment(fidx);
        i64 cur = sp.fragment_start(fidx);
        if (fr.is_char()) {
            if (auto rc = range_of_char(g, fr.ch); rc && g.range_hits_part(*rc, 1))
                upd(1, cur, g.any_occurrence_local(*rc, 1));
            continue;
        }
        i64 lo = g.text().local(0, fr.pos);
        LcsAnswer r = ix.iq->lcs_substring_vs_T(lo, lo + fr.len - 1);
        if (r.len > 0) upd(r.len, cur + (r.pos_s - lo), r.pos_t);
    }
    // cross case against the single full-T window
    KSubstring tp = KSubstring::whole_part(g, *ix.fp, 1);
    KSubstring tpr = KSubstring::whole_part(g, *ix.fp, 3);
    CrossCtx c{ix.iq.get(), ix.hia_t.get(), &sp, &spr, &tp, &tpr, 0, 2, 1, 3, false};
    CaseAnswer ca = cross_one_sided(c);
    upd(ca.len, ca.pos_s, ca.pos_t);
    return best;
}

// ---------------------------------------------------------------------------
// DynamicLcs
// ---------------------------------------------------------------------------

DynamicLcs::DynamicLcs(std::string s, std::string t)
    : DynamicLcs(std::move(s), std::move(t), Config()) {}

DynamicLcs::DynamicLcs(std::string s, std::string t, Config cfg) : cfg_(cfg) {
    i64 n = std::max<i64>({1, static_cast<i64>(s.size()), static_cast<i64>(t.size())});
    kappa_ = cfg.kappa > 0 ? cfg.kappa
                           : std::max<i64>(4, static_cast<i64>(std::llround(std::cbrt(static_cast<double>(n)))));
    i64 d = cfg.dec_d > 0 ? cfg.dec_d
                          : std::max<i64>(1, static_cast<i64>(std::llround(
                                                 std::pow(static_cast<double>(n), 2.0 / 3.0))));
    ix_ = std::make_unique<LcsIndex>();
    ix_->s0 = std::move(s);
    ix_->t0 = std::move(t);
    ix_->seed = cfg.seed;
    ix_->dec_d = d;
    ix_->build_all();
    sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
    tp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 1);
    spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 2);
    tpr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 3);
    cnt_s_.assign(512, 0);
    cnt_t_.assign(512, 0);
    for (char ch : ix_->s0) cnt_s_[static_cast<unsigned char>(ch) + PartedText::kCharShift]++;
    for (char ch : ix_->t0) cnt_t_[static_cast<unsigned char>(ch) + PartedText::kCharShift]++;
    steps_per_tick_ = static_cast<int>((ix_->total_steps() + kappa_ - 1) / kappa_) + 1;
}

std::string DynamicLcs::materialize_s() const {
    std::string out;
    for (i32 v : sp_.materialize()) out.push_back(static_cast<char>(v - PartedText::kCharShift));
    return out;
}
std::string DynamicLcs::materialize_t() const {
    std::string out;
    for (i32 v : tp_.materialize()) out.push_back(static_cast<char>(v - PartedText::kCharShift));
    return out;
}

void DynamicLcs::route_event(i32 target, const EditTrace& tr) {
    if (!ix_->dec || tr.kind == EditTrace::None) return;
    const PartedText& tx = ix_->g->text();
    i32 part = tx.part_of(tr.global);
    i64 local = tx.local(part, tr.global);
    i64 coord = tr.kind == EditTrace::Position ? 2 * local : 2 * local + 1;
    ix_->dec->replace_event(target, coord);
    (void)target;
}

void DynamicLcs::start_rebuild() {
    pending_ = std::make_unique<LcsIndex>();
    pending_->s0 = materialize_s();
    pending_->t0 = materialize_t();
    pending_->seed = cfg_.seed;
    pending_->dec_d = ix_->dec_d;
    buffer_.clear();
}

void DynamicLcs::finish_rebuild() {
    pending_->build_all();
    ix_ = std::move(pending_);
    sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
    tp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 1);
    spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 2);
    tpr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 3);
    for (const EditOp& e : buffer_) {
        KSubstring& rep = e.target == 0 ? sp_ : tp_;
        KSubstring& mirror = e.target == 0 ? spr_ : tpr_;
        i64 len = rep.size();
        EditTrace tr;
        rep = rep.applied(e.kind, e.pos, e.ch, &tr);
        i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
        mirror = mirror.applied(e.kind, mpos, e.ch, nullptr);
        route_event(e.target, tr);
    }
    buffer_.clear();
    edits_since_snapshot_ = kappa_;
}

void DynamicLcs::tick_rebuild() {
    if (!cfg_.deamortize) {
        if (edits_since_snapshot_ >= kappa_) {
            start_rebuild();
            finish_rebuild();
            edits_since_snapshot_ = 0;
        }
        return;
    }
    if (!pending_ && edits_since_snapshot_ >= kappa_) start_rebuild();
    if (pending_) {
        for (int s = 0; s < steps_per_tick_ && !pending_->done(); ++s) pending_->build_step();
        if (edits_since_snapshot_ >= 2 * kappa_) finish_rebuild();
    }
}

LcsAnswer DynamicLcs::apply(const EditOp& e) {
    require(e.target == 0 || e.target == 1, "dynamic_edit: bad target");
    KSubstring& rep = e.target == 0 ? sp_ : tp_;
    KSubstring& mirror = e.target == 0 ? spr_ : tpr_;
    std::vector<i64>& cnt = e.target == 0 ? cnt_s_ : cnt_t_;
    i64 len = rep.size();
    if (e.kind != EditKind::Insert) {
        require(e.pos >= 1 && e.pos <= len, "dynamic_edit: position out of range");
        cnt[rep.char_at(e.pos)]--;
    } else {
        require(e.pos >= 1 && e.pos <= len + 1, "dynamic_edit: position out of range");
    }
    if (e.kind != EditKind::Delete) cnt[e.ch]++;

    EditTrace tr;
    rep = rep.applied(e.kind, e.pos, e.ch, &tr);
    i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
    mirror = mirror.applied(e.kind, mpos, e.ch, nullptr);
    route_event(e.target, tr);
    if (pending_) buffer_.push_back(e);

    ++edits_since_snapshot_;
    tick_rebuild();
    max_lag_ = std::max(max_lag_, edits_since_snapshot_);
    max_frags_ = std::max<i64>(max_frags_, std::max(sp_.fragment_count(), tp_.fragment_count()));
    return current();
}

LcsAnswer DynamicLcs::current() const {
    const Gst& g = *ix_->g;
    LcsAnswer best;
    auto upd = [&](i64 len, i64 ps, i64 pt) {
        if (len > best.len) best = LcsAnswer{len, ps, pt};
    };

    // unit-length answers from the character tables
    for (i32 ch = 0; ch < 512 && best.len == 0; ++ch) {
        if (cnt_s_[ch] > 0 && cnt_t_[ch] > 0) {
            i64 ps = find_char_in_rep(*ix_, sp_, ch);
            i64 pt = find_char_in_rep(*ix_, tp_, ch);
            if (ps > 0 && pt > 0) upd(1, ps, pt);
        }
    }

    // edits avoided entirely: decremental answer in base coordinates
    if (ix_->dec) {
        auto a = ix_->dec->query();
        if (a.len >= 2) {
            i64 cur_s = 0, cur_t = 0;
            i32 fs = sp_.fragment_of_base(g.text().global(0, static_cast<i32>(a.pos_s)), &cur_s);
            i32 ft = tp_.fragment_of_base(g.text().global(1, static_cast<i32>(a.pos_t)), &cur_t);
            if (fs >= 0 && ft >= 0) upd(a.len, cur_s, cur_t);
        }
    }

    // boundary-covering cases
    CrossCtx cs{ix_->iq.get(), ix_->hia_t.get(), &sp_, &spr_, &tp_, &tpr_, 0, 2, 1, 3, false};
    CaseAnswer a2 = cross_one_sided(cs);
    upd(a2.len, a2.pos_s, a2.pos_t);
    CrossCtx ct{ix_->iq.get(), ix_->hia_s.get(), &tp_, &tpr_, &sp_, &spr_, 1, 3, 0, 2, false};
    CaseAnswer a3 = cross_one_sided(ct);
    upd(a3.len, a3.pos_t, a3.pos_s);
    CaseAnswer a4 = cross_two_sided(cs);
    upd(a4.len, a4.pos_s, a4.pos_t);
    return best;
}

// ---------------------------------------------------------------------------
// OneSidedLcs
// ---------------------------------------------------------------------------

OneSidedLcs::OneSidedLcs(std::string s, std::string t)
    : OneSidedLcs(std::move(s), std::move(t), Config()) {}

OneSidedLcs::OneSidedLcs(std::string s, std::string t, Config cfg) : cfg_(cfg) {
    i64 n = std::max<i64>({1, static_cast<i64>(s.size()), static_cast<i64>(t.size())});
    kappa_ = cfg.kappa > 0 ? cfg.kappa
                           : std::max<i64>(4, static_cast<i64>(std::llround(
                                                  std::sqrt(static_cast<double>(n)))));
    ix_ = std::make_unique<LcsIndex>();
    ix_->s0 = std::move(s);
    ix_->t0 = std::move(t);
    ix_->seed = cfg.seed;
    ix_->dec_d = 0;
    ix_->build_all();
    sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
    spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 2);
    steps_per_tick_ = static_cast<int>((ix_->total_steps() + kappa_ - 1) / kappa_) + 1;
}

LcsAnswer OneSidedLcs::apply(const EditOp& e) {
    require(e.target == 0, "one_sided_session: edits allowed in S only");
    i64 len = sp_.size();
    sp_ = sp_.applied(e.kind, e.pos, e.ch, nullptr);
    i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
    spr_ = spr_.applied(e.kind, mpos, e.ch, nullptr);
    if (pending_) buffer_.push_back(e);
    ++edits_since_snapshot_;

    if (!cfg_.deamortize) {
        if (edits_since_snapshot_ >= kappa_) {
            auto fresh = std::make_unique<LcsIndex>();
            std::string cur;
            for (i32 v : sp_.materialize()) cur.push_back(static_cast<char>(v - PartedText::kCharShift));
            fresh->s0 = std::move(cur);
            fresh->t0 = ix_->t0;
            fresh->seed = cfg_.seed;
            fresh->build_all();
            ix_ = std::move(fresh);
            sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
            spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 2);
            edits_since_snapshot_ = 0;
        }
    } else {
        if (!pending_ && edits_since_snapshot_ >= kappa_) {
            pending_ = std::make_unique<LcsIndex>();
            std::string cur;
            for (i32 v : sp_.materialize()) cur.push_back(static_cast<char>(v - PartedText::kCharShift));
            pending_->s0 = std::move(cur);
            pending_->t0 = ix_->t0;
            pending_->seed = cfg_.seed;
            buffer_.clear();
        }
        if (pending_) {
            for (int s = 0; s < steps_per_tick_ && !pending_->done(); ++s) pending_->build_step();
            if (edits_since_snapshot_ >= 2 * kappa_) {
                pending_->build_all();
                ix_ = std::move(pending_);
                sp_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 0);
                spr_ = KSubstring::whole_part(*ix_->g, *ix_->fp, 2);
                for (const EditOp& b : buffer_) {
                    i64 l2 = sp_.size();
                    sp_ = sp_.applied(b.kind, b.pos, b.ch, nullptr);
                    i64 mp = b.kind == EditKind::Insert ? l2 - b.pos + 2 : l2 - b.pos + 1;
                    spr_ = spr_.applied(b.kind, mp, b.ch, nullptr);
                }
                buffer_.clear();
                edits_since_snapshot_ = kappa_;
            }
        }
    }
    max_lag_ = std::max(max_lag_, edits_since_snapshot_);
    max_frags_ = std::max<i64>(max_frags_, sp_.fragment_count());
    return current();
}

LcsAnswer OneSidedLcs::current() const { return k_substring_lcs(*ix_, sp_, spr_); }

} // namespace dynstr
