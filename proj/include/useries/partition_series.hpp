#pragma once

#include <stdexcept>
#include <vector>

#include "useries/biseries.hpp"
#include "useries/zpoly.hpp"

namespace useries {

enum class ColorKind { P, R, D };

/// Refined color-partition series over a finite multiset S of part sizes,
/// one factor per copy of l in S:
///
///   P: (1-q^{(3-a)l})(1-(zq^l)^{b+1})(1-(z^{-1}q^l)^{b+1})
///      / ((1-q^l)(1-zq^l)(1-z^{-1}q^l))
///   R: same with an extra 1/(1-q^l)
///   D: (1+zq^l)(1+z^{-1}q^l)
///
/// b = kInfinite drops the (1-(zq^l)^{b+1}) numerator pair (its q-adic
/// limit is 1); the inner exponent tracks green-minus-blue part counts.
inline BiSeries color_series(ColorKind kind, long a, long b,
                             const std::vector<long>& parts, long omax) {
    if (omax < 0) throw std::invalid_argument("color_series: omax must be >= 0");
    const Orientation o = Orientation::inner_z;
    if (kind != ColorKind::D) {
        if (a != 1 && a != 2)
            throw std::invalid_argument("color_series: a must be 1 or 2");
        if (b != kInfinite && b < 0)
            throw std::invalid_argument("color_series: b must be >= 0 or infinite");
    }
    BiSeries r = BiSeries::one(o).truncated(omax);
    for (long l : parts) {
        if (l < 1) throw std::invalid_argument("color_series: parts must be >= 1");
        if (kind == ColorKind::D) {
            BiSeries f = BiSeries::poly(
                o, {{0, ZPoly::one()},
                    {l, ZPoly::from_terms({{1, 1}, {-1, 1}})},
                    {2 * l, ZPoly::one()}});
            r = BiSeries::mul(r, f, omax);
            continue;
        }
        BiSeries num = BiSeries::poly(
            o, {{0, ZPoly::one()}, {(3 - a) * l, ZPoly::monomial(-1, 0)}});
        if (b != kInfinite) {
            num = BiSeries::mul(
                num,
                BiSeries::poly(o, {{0, ZPoly::one()},
                                   {l * (b + 1), ZPoly::monomial(-1, b + 1)}}),
                omax);
            num = BiSeries::mul(
                num,
                BiSeries::poly(o, {{0, ZPoly::one()},
                                   {l * (b + 1), ZPoly::monomial(-1, -(b + 1))}}),
                omax);
        }
        r = BiSeries::mul(r, num, omax);
        r = BiSeries::mul(r, geom_inv(o, 1, 0, l, omax), omax);
        if (kind == ColorKind::R)
            r = BiSeries::mul(r, geom_inv(o, 1, 0, l, omax), omax);
        r = BiSeries::mul(r, geom_inv(o, 1, 1, l, omax), omax);
        r = BiSeries::mul(r, geom_inv(o, 1, -1, l, omax), omax);
    }
    return r;
}

/// Crank generating function C(x,q) = (q;q)_inf / (xq, x^{-1}q; q)_inf.
inline BiSeries crank_series(long omax) {
    const Orientation o = Orientation::inner_z;
    BiSeries r = pochhammer(o, -1, 0, 1, 1, kInfinite, omax);
    r = BiSeries::mul(r, pochhammer_inv(o, -1, 1, 1, 1, kInfinite, omax), omax);
    r = BiSeries::mul(r, pochhammer_inv(o, -1, -1, 1, 1, kInfinite, omax), omax);
    return r;
}

/// Garvan k-rank generating function R_k(x,q); k = 2 is Dyson's rank.
/// The sum runs over n_{k-1} >= ... >= n_1 >= 0 with sum of squares <= omax;
/// every other tuple only contributes beyond the window.
inline BiSeries k_rank_series(long k, long omax) {
    if (k < 2) throw std::invalid_argument("k_rank_series: k must be >= 2");
    if (omax < 0) throw std::invalid_argument("k_rank_series: omax must be >= 0");
    const Orientation o = Orientation::inner_z;

    // caches: 1/(q;q)_d and the bilateral 1/(xq, x^{-1}q; q)_n
    long nmax = 0;
    while ((nmax + 1) * (nmax + 1) <= omax) ++nmax;
    std::vector<BiSeries> inv_qq, pair_inv;
    inv_qq.push_back(BiSeries::one(o).truncated(omax));
    for (long d2 = 1; d2 <= nmax; ++d2)
        inv_qq.push_back(
            BiSeries::mul(inv_qq.back(), geom_inv(o, 1, 0, d2, omax), omax));
    pair_inv.push_back(BiSeries::one(o).truncated(omax));
    for (long n1 = 1; n1 <= nmax; ++n1) {
        BiSeries next = BiSeries::mul(pair_inv.back(), geom_inv(o, 1, 1, n1, omax), omax);
        next = BiSeries::mul(next, geom_inv(o, 1, -1, n1, omax), omax);
        pair_inv.push_back(next);
    }

    BiSeries total = BiSeries::zero_window(o, 0, omax);
    std::vector<long> tuple(static_cast<std::size_t>(k - 1), 0);
    // enumerate 0 <= n_1 <= n_2 <= ... <= n_{k-1}, sum of squares <= omax
    auto rec = [&](auto&& self, long pos, long min_val, long sq_left) -> void {
        if (pos == k - 1) {
            BiSeries term = pair_inv[static_cast<std::size_t>(tuple[0])];
            for (long i = 1; i < k - 1; ++i) {
                const long diff = tuple[static_cast<std::size_t>(i)] -
                                  tuple[static_cast<std::size_t>(i - 1)];
                term = BiSeries::mul(term, inv_qq[static_cast<std::size_t>(diff)], omax);
            }
            long sq = 0;
            for (long v : tuple) sq += v * v;
            total += term.outer_shifted(sq).truncated(omax);
            return;
        }
        for (long v = min_val; v * v <= sq_left; ++v) {
            tuple[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v, sq_left - v * v);
        }
    };
    rec(rec, 0, 0, omax);
    return total;
}

enum class CompositionKind { V, VD, X, XD, VO, VOD, XO, XOD };

/// Rank generating functions of concave/convex compositions and their odd
/// variants. Summands are updated incrementally: each step multiplies by the
/// monomial prefactor growth and by the one pair of Pochhammer factors that
/// changes, which keeps the omax=50 scans cheap.
inline BiSeries composition_series(CompositionKind kind, long omax) {
    if (omax < 0) throw std::invalid_argument("composition_series: omax must be >= 0");
    const Orientation o = Orientation::inner_z;
    BiSeries total = BiSeries::zero_window(o, 0, omax);

    auto mul_pair_inv = [&](BiSeries s, const Coeff& c, long e) {
        if (e > omax) return s;
        s = BiSeries::mul(s, geom_inv(o, c, 1, e, omax), omax);
        s = BiSeries::mul(s, geom_inv(o, c, -1, e, omax), omax);
        return s;
    };
    // (1 + c z q^e)(1 + c z^-1 q^e) = 1 + c q^e (z + z^-1) + c^2 q^{2e}
    auto mul_pair_poly = [&](BiSeries s, const Coeff& c, long e) {
        ZPoly mid = ZPoly::monomial(c, 1);
        mid.add_term(-1, c);
        BiSeries f = BiSeries::poly(
            o, {{0, ZPoly::one()}, {e, mid}, {2 * e, ZPoly::monomial(c * c, 0)}});
        return BiSeries::mul(s, f, omax);
    };

    switch (kind) {
        case CompositionKind::V: {
            // sum_{n>=0} q^n / (z q^{n+1}, z^{-1} q^{n+1}; q)_inf
            BiSeries s = pochhammer_inv(o, -1, 1, 1, 1, kInfinite, omax);
            s = BiSeries::mul(s, pochhammer_inv(o, -1, -1, 1, 1, kInfinite, omax), omax);
            total += s;
            for (long n = 1; n <= omax; ++n) {
                s = mul_pair_poly(s.outer_shifted(1), -1, n).truncated(omax);
                total += s;
            }
            break;
        }
        case CompositionKind::VD: {
            // sum_{n>=0} q^n (-z q^{n+1}, -z^{-1} q^{n+1}; q)_inf
            BiSeries s = pochhammer(o, 1, 1, 1, 1, kInfinite, omax);
            s = BiSeries::mul(s, pochhammer(o, 1, -1, 1, 1, kInfinite, omax), omax);
            total += s;
            for (long n = 1; n <= omax; ++n) {
                s = mul_pair_inv(s.outer_shifted(1).truncated(omax), -1, n);
                total += s;
            }
            break;
        }
        case CompositionKind::X: {
            // sum_{n>=0} q^{n+1} / (z q, z^{-1} q; q)_n
            BiSeries s = BiSeries::one(o).truncated(omax).outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 1; n + 1 <= omax; ++n) {
                s = mul_pair_inv(s.outer_shifted(1).truncated(omax), 1, n);
                total += s;
            }
            break;
        }
        case CompositionKind::XD: {
            // sum_{n>=0} q^{n+1} (-z q, -z^{-1} q; q)_n
            BiSeries s = BiSeries::one(o).truncated(omax).outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 1; n + 1 <= omax; ++n) {
                s = mul_pair_poly(s.outer_shifted(1), 1, n).truncated(omax);
                total += s;
            }
            break;
        }
        case CompositionKind::VO: {
            // sum_{n>=1} q^{2n-1} / (z q^{2n+1}, z^{-1} q^{2n+1}; q^2)_inf
            if (omax < 1) break;
            BiSeries s = pochhammer_inv(o, -1, 1, 3, 2, kInfinite, omax);
            s = BiSeries::mul(s, pochhammer_inv(o, -1, -1, 3, 2, kInfinite, omax), omax);
            s = s.outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 2; 2 * n - 1 <= omax; ++n) {
                s = mul_pair_poly(s.outer_shifted(2), -1, 2 * n - 1).truncated(omax);
                total += s;
            }
            break;
        }
        case CompositionKind::VOD: {
            if (omax < 1) break;
            BiSeries s = pochhammer(o, 1, 1, 3, 2, kInfinite, omax);
            s = BiSeries::mul(s, pochhammer(o, 1, -1, 3, 2, kInfinite, omax), omax);
            s = s.outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 2; 2 * n - 1 <= omax; ++n) {
                s = mul_pair_inv(s.outer_shifted(2).truncated(omax), -1, 2 * n - 1);
                total += s;
            }
            break;
        }
        case CompositionKind::XO: {
            // sum_{n>=0} q^{2n+1} / (z q, z^{-1} q; q^2)_n
            if (omax < 1) break;
            BiSeries s = BiSeries::one(o).truncated(omax).outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 1; 2 * n + 1 <= omax; ++n) {
                s = mul_pair_inv(s.outer_shifted(2).truncated(omax), 1, 2 * n - 1);
                total += s;
            }
            break;
        }
        case CompositionKind::XOD: {
            if (omax < 1) break;
            BiSeries s = BiSeries::one(o).truncated(omax).outer_shifted(1).truncated(omax);
            total += s;
            for (long n = 1; 2 * n + 1 <= omax; ++n) {
                s = mul_pair_poly(s.outer_shifted(2), 1, 2 * n - 1).truncated(omax);
                total += s;
            }
            break;
        }
    }
    return total;
}

enum class KllKind { UOB, W_NEGQ, Z };

/// Kim-Lim-Lovejoy rank series:
///   UOB:    sum (-zq, -z^{-1}q; q)_n q^n / (q; q^2)_{n+1}
///   W_NEGQ: sum (-zq, -z^{-1}q; q^2)_n q^{2n} / (q; -q)_{2n+1}
///   Z:      sum (-zq, -z^{-1}q; q)_n q^n / (q; q)_{2n+1}
inline BiSeries kll_series(KllKind kind, long omax) {
    if (omax < 0) throw std::invalid_argument("kll_series: omax must be >= 0");
    const Orientation o = Orientation::inner_z;
    BiSeries total = BiSeries::zero_window(o, 0, omax);

    auto pair_poly = [&](long e) {
        ZPoly mid = ZPoly::from_terms({{1, 1}, {-1, 1}});
        return BiSeries::poly(o, {{0, ZPoly::one()}, {e, mid}, {2 * e, ZPoly::one()}});
    };
    auto gi = [&](const Coeff& c, long e) { return geom_inv(o, c, 0, e, omax); };

    switch (kind) {
        case KllKind::UOB: {
            BiSeries s = gi(1, 1); // n=0: 1/(q;q^2)_1
            total += s;
            for (long n = 1; n <= omax; ++n) {
                s = BiSeries::mul(s.outer_shifted(1).truncated(omax), pair_poly(n), omax);
                if (2 * n + 1 <= omax) s = BiSeries::mul(s, gi(1, 2 * n + 1), omax);
                total += s;
            }
            break;
        }
        case KllKind::W_NEGQ: {
            BiSeries s = gi(1, 1); // n=0: 1/(q;-q)_1 = 1/(1-q)
            total += s;
            for (long n = 1; 2 * n <= omax; ++n) {
                s = BiSeries::mul(s.outer_shifted(2).truncated(omax), pair_poly(2 * n - 1), omax);
                if (2 * n <= omax) s = BiSeries::mul(s, gi(-1, 2 * n), omax);
                if (2 * n + 1 <= omax) s = BiSeries::mul(s, gi(1, 2 * n + 1), omax);
                total += s;
            }
            break;
        }
        case KllKind::Z: {
            BiSeries s = gi(1, 1); // n=0: 1/(q;q)_1
            total += s;
            for (long n = 1; n <= omax; ++n) {
                s = BiSeries::mul(s.outer_shifted(1).truncated(omax), pair_poly(n), omax);
                if (2 * n <= omax) s = BiSeries::mul(s, gi(1, 2 * n), omax);
                if (2 * n + 1 <= omax) s = BiSeries::mul(s, gi(1, 2 * n + 1), omax);
                total += s;
            }
            break;
        }
    }
    return total;
}

} // namespace useries
