#include "dynstr/palindromes.hpp"

#include <algorithm>
#include <cmath>

namespace dynstr {

std::vector<MpsEntry> compute_mps(const std::vector<i32>& chars) {
    i64 n = static_cast<i64>(chars.size());
    require(n >= 1, "compute_mps: empty string");
    auto at = [&](i64 i) { return chars[i - 1]; }; // 1-based
    std::vector<i64> d1(n + 1, 0), d2(n + 1, 0);
    for (i64 i = 1, l = 1, r = 0; i <= n; ++i) {
        i64 k = i > r ? 1 : std::min(d1[l + r - i], r - i + 1);
        while (i - k >= 1 && i + k <= n && at(i - k) == at(i + k)) ++k;
        d1[i] = k--;
        if (i + k > r) { l = i - k; r = i + k; }
    }
    for (i64 i = 1, l = 1, r = 0; i <= n; ++i) {
        i64 k = i > r ? 0 : std::min(d2[l + r - i + 1], r - i + 1);
        while (i - k - 1 >= 1 && i + k <= n && at(i - k - 1) == at(i + k)) ++k;
        d2[i] = k--;
        if (i + k > r) { l = i - k - 1; r = i + k; }
    }
    std::vector<MpsEntry> out(2 * n - 1);
    for (i64 c = 1; c <= n; ++c) {
        out[2 * c - 2] = MpsEntry{c - d1[c] + 1, c + d1[c] - 1};
        if (c < n) {
            // even center between c and c+1 is doubled center 2c+1
            if (d2[c + 1] > 0)
                out[2 * c - 1] = MpsEntry{c - d2[c + 1] + 1, c + d2[c + 1]};
            else
                out[2 * c - 1] = MpsEntry{c + 1, c}; // empty
        }
    }
    return out;
}

void PalIndex::build_step() {
    if (built < base.total_steps()) {
        base.build_step();
        ++built;
        return;
    }
    const Gst& g = *base.g;
    i64 n = g.text().part_len(0);
    std::vector<i32> chars(n);
    for (i64 i = 1; i <= n; ++i) chars[i - 1] = g.text().at(g.text().global(0, static_cast<i32>(i)));
    auto mps = compute_mps(chars);
    std::vector<GridPoint> pc, pp, ps;
    for (i32 idx = 0; idx < static_cast<i32>(mps.size()); ++idx) {
        const auto& m = mps[idx];
        if (m.len() <= 0) continue;
        pc.push_back(GridPoint{m.start, m.end, m.len(), idx});
        pp.push_back(GridPoint{m.start, m.start + m.end, m.start + m.end, idx});
        ps.push_back(GridPoint{m.end, m.start + m.end, m.start + m.end, idx});
    }
    containment_ = std::make_unique<PointGridRmq>(std::move(pc));
    prefix_ = std::make_unique<PointGridRmq>(std::move(pp));
    suffix_ = std::make_unique<PointGridRmq>(std::move(ps));
    ++built;
}

PalAnswer internal_lspal(const PalIndex& ix, i64 i, i64 j, PalMode mode) {
    require(1 <= i && i <= j, "internal_lspal: invalid interval");
    PalAnswer best;
    if (mode == PalMode::Any || mode == PalMode::Prefix) {
        // maximal palindrome with start < i is trimmed to a prefix palindrome
        auto h = ix.prefix_->max_in(kNegInf, i, kNegInf, i + j);
        if (h) {
            i64 len = h->w - 2 * i + 1;
            if (len > best.len) best = PalAnswer{len, i};
        }
        if (mode == PalMode::Prefix) return best;
    }
    if (mode == PalMode::Any || mode == PalMode::Suffix) {
        auto h = ix.suffix_->min_in(j, kPosInf, i + j, kPosInf);
        if (h) {
            i64 len = 2 * j - h->w + 1;
            if (len > best.len) best = PalAnswer{len, j - len + 1};
        }
        if (mode == PalMode::Suffix) return best;
    }
    auto h = ix.containment_->max_in(i, kPosInf, kNegInf, j);
    if (h && h->w > best.len) best = PalAnswer{h->w, h->x};
    return best;
}

namespace {

// palindromic candidates whose center lies in the fragment right of the
// boundary (lambda ranges over palindromic prefixes of that fragment) or, in
// the mirrored call, left of it
void pal_cross_boundary(const PalIndex& ix, const KSubstring& sp, const KSubstring& spr, i64 bF,
                        const KSubstring::Fragment& frag, bool center_right, PalAnswer& best) {
    const Gst& g = *ix.base.g;
    i64 L = sp.size();
    auto ext_right = [&](i64 lambda) { // palindrome [bF, bF+lambda-1] extended
        return seq_lcp(Seq::of_ksub(sp, bF + lambda), Seq::of_ksub(spr, L - bF + 2));
    };
    auto ext_left = [&](i64 lambda) { // palindrome [bF-lambda, bF-1] extended
        return seq_lcp(Seq::of_ksub(sp, bF), Seq::of_ksub(spr, L - bF + lambda + 2));
    };
    auto offer = [&](i64 lambda, i64 ext) {
        i64 total = lambda + 2 * ext;
        if (total <= best.len) return;
        best = PalAnswer{total, center_right ? bF - ext : bF - lambda - ext};
    };
    auto eval = [&](i64 lambda) { offer(lambda, center_right ? ext_right(lambda) : ext_left(lambda)); };

    if (frag.is_char()) {
        eval(1);
        return;
    }
    i64 flo = g.text().local(0, frag.pos);
    i64 fhi = flo + frag.len - 1;
    PalAnswer u0 =
        internal_lspal(ix, flo, fhi, center_right ? PalMode::Prefix : PalMode::Suffix);
    if (u0.len <= 0) return;
    eval(u0.len);
    Ref u0ref{g.text().global(0, static_cast<i32>(center_right ? flo : fhi - u0.len + 1)),
              static_cast<i32>(u0.len)};
    for (const ArithProg& ap : ix.base.iq->borders_progressions(u0ref)) {
        if (ap.empty()) continue;
        if (ap.count <= 2) {
            for (i64 k = 0; k < ap.count; ++k) eval(ap.at(k));
            continue;
        }
        i64 p = ap.diff, u = ap.last();
        PiecewiseLcp f =
            center_right
                ? make_power_lcp(Seq::of_ksub_range(sp, bF + u - p, p), Seq::of_ksub(sp, bF + u),
                                 Seq::of_ksub(spr, L - bF + 2))
                : make_power_lcp(Seq::of_ksub_range(spr, L - bF + u + 2 - p, p),
                                 Seq::of_ksub(spr, L - bF + u + 2), Seq::of_ksub(sp, bF));
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
        }
        for (i64 w : cand) {
            if (w < 0 || w >= ap.count) continue;
            offer(u - w * p, f.eval(w));
        }
    }
}

} // namespace

PalAnswer k_substring_lspal(const PalIndex& ix, const KSubstring& sp, const KSubstring& spr) {
    const Gst& g = *ix.base.g;
    PalAnswer best;
    if (sp.size() == 0) return best;
    // internal: longest palindrome inside each fragment
    for (i32 f = 0; f < sp.fragment_count(); ++f) {
        const auto& fr = sp.fragment(f);
        i64 cur = sp.fragment_start(f);
        if (fr.is_char()) {
            if (best.len < 1) best = PalAnswer{1, cur};
            continue;
        }
        i64 lo = g.text().local(0, fr.pos);
        PalAnswer a = internal_lspal(ix, lo, lo + fr.len - 1, PalMode::Any);
        if (a.len > best.len) best = PalAnswer{a.len, cur + (a.pos - lo)};
    }
    // cross: palindromes covering fragment boundaries
    for (i32 i = 1; i < sp.fragment_count(); ++i) {
        i64 bF = sp.fragment_start(i);
        // even palindrome centered at the boundary
        i64 e0 = seq_lcp(Seq::of_ksub(sp, bF), Seq::of_ksub(spr, sp.size() - bF + 2));
        if (2 * e0 > best.len) best = PalAnswer{2 * e0, bF - e0};
        pal_cross_boundary(ix, sp, spr, bF, sp.fragment(i), true, best);
        pal_cross_boundary(ix, sp, spr, bF, sp.fragment(i - 1), false, best);
    }
    return best;
}

DynamicPal::DynamicPal(std::string s) : DynamicPal(std::move(s), Config()) {}

DynamicPal::DynamicPal(std::string s, Config cfg) : cfg_(cfg) {
    i64 n = std::max<i64>(1, static_cast<i64>(s.size()));
    kappa_ = cfg.kappa > 0 ? cfg.kappa
                           : std::max<i64>(4, static_cast<i64>(std::llround(
                                                  std::sqrt(static_cast<double>(n)))));
    ix_ = std::make_unique<PalIndex>();
    ix_->base.s0 = std::move(s);
    ix_->base.seed = cfg.seed;
    ix_->base.with_hia = false;
    ix_->build_all();
    sp_ = KSubstring::whole_part(*ix_->base.g, *ix_->base.fp, 0);
    spr_ = KSubstring::whole_part(*ix_->base.g, *ix_->base.fp, 1);
    steps_per_tick_ = static_cast<int>((ix_->total_steps() + kappa_ - 1) / kappa_) + 1;
}

std::string DynamicPal::materialize() const {
    std::string out;
    for (i32 v : sp_.materialize()) out.push_back(static_cast<char>(v - PartedText::kCharShift));
    return out;
}

PalAnswer DynamicPal::apply(const EditOp& e) {
    i64 len = sp_.size();
    require(e.kind == EditKind::Insert ? (e.pos >= 1 && e.pos <= len + 1)
                                       : (e.pos >= 1 && e.pos <= len),
            "dynamic_lspal_edit: position out of range");
    sp_ = sp_.applied(e.kind, e.pos, e.ch, nullptr);
    i64 mpos = e.kind == EditKind::Insert ? len - e.pos + 2 : len - e.pos + 1;
    spr_ = spr_.applied(e.kind, mpos, e.ch, nullptr);
    if (pending_) buffer_.push_back(e);
    ++edits_since_snapshot_;

    auto fresh = [&]() {
        auto nx = std::make_unique<PalIndex>();
        nx->base.s0 = materialize();
        nx->base.seed = cfg_.seed;
        nx->base.with_hia = false;
        return nx;
    };
    auto reset_reps = [&]() {
        sp_ = KSubstring::whole_part(*ix_->base.g, *ix_->base.fp, 0);
        spr_ = KSubstring::whole_part(*ix_->base.g, *ix_->base.fp, 1);
    };
    if (!cfg_.deamortize) {
        if (edits_since_snapshot_ >= kappa_) {
            ix_ = fresh();
            ix_->build_all();
            reset_reps();
            edits_since_snapshot_ = 0;
        }
    } else {
        if (!pending_ && edits_since_snapshot_ >= kappa_) {
            pending_ = fresh();
            buffer_.clear();
        }
        if (pending_) {
            for (int s = 0; s < steps_per_tick_ && !pending_->done(); ++s) pending_->build_step();
            if (edits_since_snapshot_ >= 2 * kappa_) {
                pending_->build_all();
                ix_ = std::move(pending_);
                reset_reps();
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
    return current();
}

PalAnswer DynamicPal::current() const { return k_substring_lspal(*ix_, sp_, spr_); }

} // namespace dynstr
