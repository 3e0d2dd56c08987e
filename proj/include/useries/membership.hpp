#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "useries/biseries.hpp"
#include "useries/common.hpp"
#include "useries/zpoly.hpp"

namespace useries {

/// One of the four unimodality classes: step nu in {1,2}, strict or not.
/// (nu=1, strict=false) is plain symmetric unimodality; nu=2 checks the two
/// parity subsequences separately; strict demands strictly decreasing rays.
struct ClassSpec {
    int nu = 1;
    bool strict = false;

    ClassSpec() = default;
    ClassSpec(int nu_, bool strict_) : nu(nu_), strict(strict_) {
        if (nu != 1 && nu != 2)
            throw std::invalid_argument("ClassSpec: nu must be 1 or 2");
    }

    std::string name() const {
        return std::string(strict ? "T" : "U") + std::to_string(nu);
    }
};

enum class Reason { asymmetric, negative_coefficient, non_monotone, not_strict };

inline const char* reason_name(Reason r) {
    switch (r) {
        case Reason::asymmetric: return "asymmetric";
        case Reason::negative_coefficient: return "negative-coefficient";
        case Reason::non_monotone: return "non-monotone";
        case Reason::not_strict: return "not-strict";
    }
    return "?";
}

/// Minimal violation witness. The offending pair holds the two values whose
/// required relation failed: (c_i, c_{-i}) for asymmetric, (c_i, 0) for a
/// negative coefficient, (c_i, c_{i+nu}) for the ray conditions.
struct Witness {
    long outer = 0;
    long inner = 0;
    Coeff lhs;
    Coeff rhs;
    Reason reason = Reason::non_monotone;
};

struct MembershipReport {
    bool member = true;
    std::optional<Witness> witness;
    long window_lo = 0;
    long window_hi = 0;
    ClassSpec spec;
};

namespace detail {

/// Scans i = 0,1,2,... and at each i checks, in order: symmetry, sign, and
/// the ray condition against c_{i+nu}. The first hit is the lexicographically
/// minimal witness for this slice.
inline std::optional<Witness> slice_violation(const ZPoly& p, const ClassSpec& spec) {
    const long m = p.is_zero() ? -1 : std::max(std::labs(p.lo()), std::labs(p.hi()));
    for (long i = 0; i <= m; ++i) {
        const Coeff& ci = p.coeff(i);
        const Coeff& cmi = p.coeff(-i);
        if (ci != cmi)
            return Witness{0, i, ci, cmi, Reason::asymmetric};
        if (ci < 0)
            return Witness{0, i, ci, Coeff(0), Reason::negative_coefficient};
        const Coeff& cn = p.coeff(i + spec.nu);
        if (!spec.strict) {
            if (ci < cn) return Witness{0, i, ci, cn, Reason::non_monotone};
        } else {
            if (ci > 0) {
                if (cn == ci) return Witness{0, i, ci, cn, Reason::not_strict};
                if (cn > ci) return Witness{0, i, ci, cn, Reason::non_monotone};
            } else if (ci == 0 && cn > 0) {
                // a residue class may be identically zero, but must stay zero
                return Witness{0, i, ci, cn, Reason::non_monotone};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Membership of a single Laurent polynomial in U^nu / T^nu per the slice
/// rules: symmetric about exponent 0, nonnegative, and each residue class
/// nonincreasing (strictly decreasing) until it reaches 0 and stays there.
/// Identically zero residue classes are accepted in both modes.
inline MembershipReport check_slice(const ZPoly& p, const ClassSpec& spec) {
    MembershipReport r;
    r.spec = spec;
    if (auto w = detail::slice_violation(p, spec)) {
        r.member = false;
        r.witness = *w;
    }
    return r;
}

/// Sliceswise membership over the series' exactness window; the first
/// failing slice (scanning outer indices upward) provides the witness.
inline MembershipReport check_membership(const BiSeries& s, const ClassSpec& spec) {
    MembershipReport r;
    r.spec = spec;
    r.window_lo = s.omin();
    r.window_hi = s.window_hi();
    for (long j = r.window_lo; j <= r.window_hi; ++j) {
        if (auto w = detail::slice_violation(s.slice(j), spec)) {
            w->outer = j;
            r.member = false;
            r.witness = *w;
            return r;
        }
    }
    return r;
}

/// Symmetric-unimodality of an ordinary palindromic polynomial (coefficients
/// c_0..c_d with c_i = c_{d-i}). Recentring exponent e -> 2e - d turns the
/// question into a nu=2 slice check about 0, which also handles odd d.
inline MembershipReport check_palindromic_unimodal(const ZPoly& p, bool strict = false) {
    if (p.is_zero()) return check_slice(p, ClassSpec(2, strict));
    const long d = p.lo() + p.hi();
    ZPoly centered;
    for (long e = p.lo(); e <= p.hi(); ++e)
        if (p.coeff(e) != 0) centered.add_term(2 * e - d, p.coeff(e));
    return check_slice(centered, ClassSpec(2, strict));
}

/// Per-slice support radii l_n(nu, t): the largest |i| with i = t (mod nu)
/// carrying a nonzero coefficient, or "empty". Meaningful for members of
/// U^nu, where the coefficients are positive for all |i| <= l_n(nu, t).
struct SupportProfile {
    static constexpr long kEmpty = LONG_MIN;

    int nu = 1;
    long omin = 0;
    std::vector<std::vector<long>> radius;     // [j - omin][t]
    std::vector<std::vector<long>> max_radius; // running max over outer <= j

    long ell(long j, int t) const {
        if (j < omin || j - omin >= static_cast<long>(radius.size())) return kEmpty;
        return radius[static_cast<std::size_t>(j - omin)][static_cast<std::size_t>(t)];
    }
    long m(long j, int t) const {
        if (j < omin) return kEmpty;
        const long idx = std::min<long>(j - omin, static_cast<long>(max_radius.size()) - 1);
        return max_radius[static_cast<std::size_t>(idx)][static_cast<std::size_t>(t)];
    }
};

inline SupportProfile support_profile(const BiSeries& s, int nu) {
    ClassSpec spec(nu, false);
    if (!check_membership(s, spec).member)
        throw std::invalid_argument("support_profile: series is not a member of U^" +
                                    std::to_string(nu));
    SupportProfile prof;
    prof.nu = nu;
    prof.omin = s.omin();
    const long hi = s.window_hi();
    std::vector<long> running(static_cast<std::size_t>(nu), SupportProfile::kEmpty);
    for (long j = prof.omin; j <= hi; ++j) {
        std::vector<long> ell(static_cast<std::size_t>(nu), SupportProfile::kEmpty);
        const ZPoly& p = s.slice(j);
        if (!p.is_zero()) {
            for (long i = p.lo(); i <= p.hi(); ++i) {
                if (p.coeff(i) == 0) continue;
                const long a = std::labs(i);
                auto& slot = ell[static_cast<std::size_t>(a % nu)];
                slot = std::max(slot, a);
            }
        }
        for (int t = 0; t < nu; ++t)
            running[static_cast<std::size_t>(t)] =
                std::max(running[static_cast<std::size_t>(t)], ell[static_cast<std::size_t>(t)]);
        prof.radius.push_back(std::move(ell));
        prof.max_radius.push_back(running);
    }
    return prof;
}

/// Strictness-lift criterion: given s in U^nu, decide whether
/// (1-q)^{-1} * s lies in T^nu by testing, for every outer n and inner
/// i >= 0 with S_{i,n} = {r <= n : l_r(nu, i mod nu) >= i} nonempty, that
/// max_{r in S_{i,n}} (c_{i,r} - c_{i+nu,r}) > 0. The verdict is
/// cross-checked against a direct membership test of the computed product;
/// the two are equivalent on the window and any disagreement throws.
inline MembershipReport strictness_lift(const BiSeries& s, const ClassSpec& spec) {
    const int nu = spec.nu;
    if (!check_membership(s, ClassSpec(nu, false)).member)
        throw std::invalid_argument("strictness_lift: precondition s in U^" +
                                    std::to_string(nu) + " violated");
    const long lo = s.omin();
    const long hi = s.window_hi();
    SupportProfile prof = support_profile(s, nu);

    std::optional<Witness> criterion_witness;
    for (long n = lo; n <= hi && !criterion_witness; ++n) {
        const long m_all = std::max(prof.m(n, 0), nu == 2 ? prof.m(n, 1) : prof.m(n, 0));
        if (m_all == SupportProfile::kEmpty) continue;
        for (long i = 0; i <= m_all; ++i) {
            const int t = static_cast<int>(i % nu);
            if (prof.m(n, t) == SupportProfile::kEmpty || i > prof.m(n, t)) continue;
            Coeff best_gap = -1; // any r in S gives gap >= 0
            Coeff sum_i = 0, sum_next = 0;
            bool nonempty = false;
            for (long r = lo; r <= n; ++r) {
                if (prof.ell(r, t) == SupportProfile::kEmpty || prof.ell(r, t) < i) continue;
                nonempty = true;
                const Coeff& ci = s.slice(r).coeff(i);
                const Coeff& cn = s.slice(r).coeff(i + nu);
                Coeff gap = ci - cn;
                if (gap > best_gap) best_gap = gap;
                sum_i += ci;
                sum_next += cn;
            }
            if (nonempty && best_gap <= 0) {
                criterion_witness = Witness{n, i, sum_i, sum_next, Reason::not_strict};
                break;
            }
        }
    }

    // Direct route: expand (1-q)^{-1} * s and check T^nu on the same window.
    BiSeries lifted = BiSeries::mul(
        s, geom_inv(s.orientation(), 1, 0, 1, hi - std::min(s.omin(), 0L) + 1), hi);
    MembershipReport direct = check_membership(lifted, ClassSpec(nu, true));

    if (direct.member != !criterion_witness.has_value())
        throw std::logic_error("strictness_lift: criterion and direct check disagree");
    if (!direct.member && criterion_witness &&
        (direct.witness->outer != criterion_witness->outer ||
         direct.witness->inner != criterion_witness->inner))
        throw std::logic_error("strictness_lift: witness locations disagree");
    return direct;
}

/// Deterministic generator of valid slices for a class: per residue ray,
/// draw a positive nonincreasing (or strictly decreasing) run and mirror it.
/// max_radius bounds the largest |exponent|; radius 0 forces a positive
/// constant.
inline ZPoly random_member(const ClassSpec& spec, std::uint64_t seed, long max_radius,
                           long max_step = 3) {
    Rng rng(seed);
    ZPoly p;
    if (max_radius <= 0) {
        p.add_term(0, Coeff(rng.range(1, std::max(1L, max_step))));
        return p;
    }
    for (int t = 0; t < spec.nu; ++t) {
        const long max_len = (max_radius - t) / spec.nu + 1;
        if (max_len <= 0) continue;
        const long len = rng.range(0, max_len);
        if (len == 0) continue; // identically zero residue class
        std::vector<Coeff> vals(static_cast<std::size_t>(len));
        Coeff v = rng.range(1, max_step);
        for (long k = len - 1; k >= 0; --k) {
            vals[static_cast<std::size_t>(k)] = v;
            v += rng.range(spec.strict ? 1 : 0, max_step);
        }
        for (long k = 0; k < len; ++k) {
            const long i = t + k * spec.nu;
            p.add_term(i, vals[static_cast<std::size_t>(k)]);
            if (i != 0) p.add_term(-i, vals[static_cast<std::size_t>(k)]);
        }
    }
    return p;
}

} // namespace useries
