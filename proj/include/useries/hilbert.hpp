#pragma once

#include <numeric>
#include <stdexcept>

#include "useries/biseries.hpp"
#include "useries/zpoly.hpp"

namespace useries {

/// Goettsche series for the Betti numbers of Hilbert schemes of points,
///   prod_{k>=1} [(1+zq^k)(1+z^{-1}q^k)]^{b1}
///              / ((1-q^k)^{b2} [(1-z^2 q^k)(1-z^{-2} q^k)]^{b0}).
inline BiSeries hilbert_series(long b0, long b1, long b2, long omax) {
    if (b0 < 0 || b1 < 0 || b2 < 0)
        throw std::invalid_argument("hilbert_series: Betti numbers must be >= 0");
    if (omax < 0) throw std::invalid_argument("hilbert_series: omax must be >= 0");
    const Orientation o = Orientation::inner_z;
    BiSeries r = BiSeries::one(o).truncated(omax);
    for (long k = 1; k <= omax; ++k) {
        if (b1 > 0) {
            ZPoly mid = ZPoly::from_terms({{1, 1}, {-1, 1}});
            BiSeries pair = BiSeries::poly(
                o, {{0, ZPoly::one()}, {k, mid}, {2 * k, ZPoly::one()}});
            r = BiSeries::mul(r, pair.pow(b1, omax), omax);
        }
        for (long e = 0; e < b2; ++e)
            r = BiSeries::mul(r, geom_inv(o, 1, 0, k, omax), omax);
        for (long e = 0; e < b0; ++e) {
            r = BiSeries::mul(r, geom_inv(o, 1, 2, k, omax), omax);
            r = BiSeries::mul(r, geom_inv(o, 1, -2, k, omax), omax);
        }
    }
    return r;
}

/// z^{-2} p(X,z) with the unsigned Poincare polynomial
/// b0 + b1 z + b2 z^2 + b1 z^3 + b0 z^4, centered about exponent 0. This is
/// also the q^1 slice of the Goettsche series.
inline ZPoly poincare_centered(long b0, long b1, long b2) {
    ZPoly p;
    p.add_term(-2, Coeff(b0));
    p.add_term(-1, Coeff(b1));
    p.add_term(0, Coeff(b2));
    p.add_term(1, Coeff(b1));
    p.add_term(2, Coeff(b0));
    return p;
}

namespace detail {

inline BiSeries qq_inf_inv_pow(long e, long omax) {
    return pochhammer_inv(Orientation::inner_z, -1, 0, 1, 1, kInfinite, omax)
        .pow(e, omax);
}

inline BiSeries ypair_inf_pow(long e, long omax) {
    const Orientation o = Orientation::inner_z;
    BiSeries pair = BiSeries::mul(pochhammer(o, 1, 1, 1, 1, kInfinite, omax),
                                  pochhammer(o, 1, -1, 1, 1, kInfinite, omax), omax);
    return pair.pow(e, omax);
}

inline BiSeries y_center_poly(long power) {
    // (y + 2 + y^{-1})^power
    return BiSeries::poly(Orientation::inner_z,
                          {{0, ZPoly::from_terms({{-1, 1}, {0, 2}, {1, 1}})}})
        .pow(power);
}

} // namespace detail

enum class OberdieckKind { A, B, N, N1, N3 };

/// Oberdieck generating series in integral normalized form; all fractional
/// powers of q coming from eta/theta prefactors cancel (validated separately
/// by the fractional-exponent route below).
///
///   A  = (y+2+y^{-1}) (-yq,-y^{-1}q;q)_inf^2 / (q;q)_inf^3
///   B  = P^2 + sum_{m>=1} (y^{-1}+2+y)(4q^m+(y^{-1}+y)(1+q^{2m})) q^m P^2
///              / ((1+y^{-1}q^m)^2 (1+yq^m)^2),  P = (-q,-yq,-y^{-1}q;q)_inf
///   N  = q^{-1} (y+2+y^{-1})^{d-1} (-yq,-y^{-1}q;q)_inf^{2d-2} (q;q)_inf^{-4d-20}
///   N1 = q^{-1} (q;q)_inf^{-24} G^{d-1},  G = B (q;q)_inf^{-2} (q^2;q^2)_inf^{-2}
///   N3 = Catalan(d-1) q^{-1} (q;q)_inf^{-24} (q d/dq) G^{d-1}
///
/// omax is the final truncation order in q (the N-family starts at q^{-1}).
inline BiSeries oberdieck_series(OberdieckKind kind, long d, long omax) {
    const Orientation o = Orientation::inner_z;
    if (omax < 0) throw std::invalid_argument("oberdieck_series: omax must be >= 0");
    switch (kind) {
        case OberdieckKind::A: {
            BiSeries r = detail::y_center_poly(1).truncated(omax);
            r = BiSeries::mul(r, detail::ypair_inf_pow(2, omax), omax);
            return BiSeries::mul(r, detail::qq_inf_inv_pow(3, omax), omax);
        }
        case OberdieckKind::B: {
            BiSeries p2 = BiSeries::mul(pochhammer(o, 1, 0, 1, 1, kInfinite, omax),
                                        detail::ypair_inf_pow(1, omax), omax)
                              .pow(2, omax);
            BiSeries total = p2;
            for (long m = 1; m <= omax; ++m) {
                ZPoly yy = ZPoly::from_terms({{-1, 1}, {1, 1}});
                BiSeries bracket = BiSeries::poly(
                    o, {{0, yy}, {m, ZPoly::monomial(4, 0)}, {2 * m, yy}});
                BiSeries term = BiSeries::mul(p2.outer_shifted(m).truncated(omax),
                                              bracket, omax);
                term = BiSeries::mul(term, detail::y_center_poly(1), omax);
                term = BiSeries::mul(term, geom_inv(o, -1, 1, m, omax), omax);
                term = BiSeries::mul(term, geom_inv(o, -1, 1, m, omax), omax);
                term = BiSeries::mul(term, geom_inv(o, -1, -1, m, omax), omax);
                term = BiSeries::mul(term, geom_inv(o, -1, -1, m, omax), omax);
                total += term;
            }
            return total;
        }
        case OberdieckKind::N: {
            if (d < 1) throw std::invalid_argument("oberdieck_series: d must be >= 1");
            const long body = omax + 1;
            BiSeries r = detail::y_center_poly(d - 1).truncated(body);
            r = BiSeries::mul(r, detail::ypair_inf_pow(2 * d - 2, body), body);
            r = BiSeries::mul(r, detail::qq_inf_inv_pow(4 * d + 20, body), body);
            return r.outer_shifted(-1);
        }
        case OberdieckKind::N1:
        case OberdieckKind::N3: {
            if (d < 1) throw std::invalid_argument("oberdieck_series: d must be >= 1");
            const long body = omax + 1;
            BiSeries g = BiSeries::mul(oberdieck_series(OberdieckKind::B, d, body),
                                       detail::qq_inf_inv_pow(2, body), body);
            g = BiSeries::mul(
                g,
                pochhammer_inv(o, -1, 0, 2, 2, kInfinite, body).pow(2, body), body);
            BiSeries gpow = g.pow(d - 1, body);
            if (kind == OberdieckKind::N3) gpow = gpow.euler_outer();
            BiSeries r = BiSeries::mul(gpow, detail::qq_inf_inv_pow(24, body), body)
                             .outer_shifted(-1);
            return kind == OberdieckKind::N3 ? r.scaled(catalan(d - 1)) : r;
        }
    }
    throw std::logic_error("oberdieck_series: unreachable");
}

/// Exact rational exponent offset for the eta/theta normalization check.
struct QExponent {
    long num = 0;
    long den = 1;

    QExponent() = default;
    QExponent(long n, long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("QExponent: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long g = std::gcd(std::labs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }

    QExponent operator+(const QExponent& o) const {
        return QExponent(num * o.den + o.num * den, den * o.den);
    }
    QExponent operator*(long k) const { return QExponent(num * k, den); }
    bool is_integer() const { return den == 1; }
};

/// A series carrying a symbolic rational power of q in front; used to track
/// eta/theta prefactors exactly and confirm that they cancel.
struct FracSeries {
    QExponent qexp;
    BiSeries body;

    FracSeries mul(const FracSeries& o, long omax) const {
        return {qexp + o.qexp, BiSeries::mul(body, o.body, omax)};
    }
    FracSeries pow(long k, long omax) const {
        return {qexp * k, body.pow(k, omax)};
    }
    /// Collapse to an ordinary series; the accumulated exponent must be an
    /// integer by this point or the normalization is wrong.
    BiSeries to_integral() const {
        if (!qexp.is_integer())
            throw std::logic_error("FracSeries: residual fractional q-exponent " +
                                   std::to_string(qexp.num) + "/" +
                                   std::to_string(qexp.den));
        return body.outer_shifted(qexp.num);
    }
};

/// eta(tau)^k = q^{k/24} (q;q)_inf^k with the fractional power kept symbolic.
inline FracSeries eta_pow_frac(long k, long omax) {
    BiSeries body = k >= 0
        ? pochhammer(Orientation::inner_z, -1, 0, 1, 1, kInfinite, omax).pow(k, omax)
        : detail::qq_inf_inv_pow(-k, omax);
    return {QExponent(k, 24), body};
}

/// theta_1(z,tau)^2 = q^{1/4} (y+2+y^{-1}) (q,-yq,-y^{-1}q;q)_inf^2. Only the
/// square is needed here, which keeps the half-integer powers of y out.
inline FracSeries theta1_sq_frac(long omax) {
    const Orientation o = Orientation::inner_z;
    BiSeries body = detail::y_center_poly(1).truncated(omax);
    body = BiSeries::mul(body, pochhammer(o, -1, 0, 1, 1, kInfinite, omax).pow(2, omax), omax);
    body = BiSeries::mul(body, detail::ypair_inf_pow(2, omax), omax);
    return {QExponent(1, 4), body};
}

inline FracSeries q_pow_frac(long num, long den) {
    return {QExponent(num, den), BiSeries::one(Orientation::inner_z)};
}

/// A recomputed from the defining data q^{-1/24} eta^{-5} theta_1^2.
inline BiSeries oberdieck_a_from_definitions(long omax) {
    FracSeries r = q_pow_frac(-1, 24).mul(eta_pow_frac(-5, omax), omax);
    r = r.mul(theta1_sq_frac(omax), omax);
    return r.to_integral();
}

/// N-series recomputed from eta^{-24} (theta_1 / eta^3)^{2d-2}.
inline BiSeries oberdieck_n_from_definitions(long d, long omax) {
    const long body = omax + 1;
    FracSeries thetaeta = theta1_sq_frac(body).mul(eta_pow_frac(-6, body), body);
    FracSeries r = eta_pow_frac(-24, body).mul(thetaeta.pow(d - 1, body), body);
    return r.to_integral();
}

} // namespace useries
