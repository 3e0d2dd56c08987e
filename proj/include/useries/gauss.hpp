#pragma once

#include <stdexcept>
#include <vector>

#include "useries/biseries.hpp"
#include "useries/zpoly.hpp"

namespace useries {

/// Gaussian binomial coefficient [n over m]_q as an exact polynomial,
/// via the Pascal-type recurrence [i,j] = [i-1,j-1] + q^j [i-1,j].
/// Zero when m > n.
inline ZPoly gauss_binomial(long n, long m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("gauss_binomial: n, m must be >= 0");
    if (m > n) return ZPoly{};
    if (m == 0 || m == n) return ZPoly::one();
    std::vector<ZPoly> row(static_cast<std::size_t>(m + 1));
    row[0] = ZPoly::one();
    for (long i = 1; i <= n; ++i) {
        const long jmax = std::min(i, m);
        for (long j = jmax; j >= 1; --j) {
            ZPoly t = row[static_cast<std::size_t>(j)].shifted(j);
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + t;
        }
    }
    return row[static_cast<std::size_t>(m)];
}

/// G_{d,n}(q,z) = (z^{d+1} q^{(d+1)(1-n)}; q^{2(d+1)})_n / (z q^{1-n}; q^2)_n,
/// expanded z-adically as an inner-q series with z-slices 0..zmax.
/// d = kInfinite gives G_{inf,n} = 1/(z q^{1-n}; q^2)_n.
inline BiSeries g_series(long d, long n, long zmax) {
    if (n < 0) throw std::invalid_argument("g_series: n must be >= 0");
    if (d != kInfinite && d < 1)
        throw std::invalid_argument("g_series: d must be >= 1 or infinite");
    const Orientation o = Orientation::inner_q;
    BiSeries r = BiSeries::one(o).truncated(zmax);
    // denominator: 1/(1 - z q^{1-n+2j}), j < n; the outer variable is z
    for (long j = 0; j < n; ++j)
        r = BiSeries::mul(r, geom_inv(o, 1, 1 - n + 2 * j, 1, zmax), zmax);
    if (d != kInfinite) {
        for (long j = 0; j < n; ++j) {
            BiSeries factor = BiSeries::poly(
                o, {{0, ZPoly::one()},
                    {d + 1, ZPoly::monomial(-1, (d + 1) * (1 - n + 2 * j))}});
            r = BiSeries::mul(r, factor, zmax);
        }
    }
    return r;
}

enum class GaussKind { r, c };

/// The q^2-domain polynomial behind the Andrews generalized Gauss
/// polynomials (only even powers of q occur).
///
///   c-kind: CT_z[(-q^2 z; q^2)_m^k (-z^{-1}; q^2)_n^k]
///   r-kind: q^{knm} [z^{kn}] G_{k,m+n}(q,z), the finite reduction of the
///           rational constant-term integrand through G.
inline ZPoly gen_gauss_q2(GaussKind kind, long k, long m, long n) {
    if (k < 1) throw std::invalid_argument("gen_gauss: k must be >= 1");
    if (m < 0 || n < 0) throw std::invalid_argument("gen_gauss: m, n must be >= 0");
    if (kind == GaussKind::c) {
        const Orientation o = Orientation::inner_z;
        BiSeries prod = BiSeries::one(o);
        for (long j = 0; j < m; ++j) {
            BiSeries f = BiSeries::poly(
                o, {{0, ZPoly::one()}, {1 + j, ZPoly::monomial(1, 1)}});
            prod = prod * f.pow(k);
        }
        for (long j = 0; j < n; ++j) {
            BiSeries f = BiSeries::poly(
                o, {{0, ZPoly::one()}, {j, ZPoly::monomial(1, -1)}});
            prod = prod * f.pow(k);
        }
        return prod.ct().inflated(2);
    }
    BiSeries g = g_series(k, m + n, k * n);
    return g.slice(k * n).shifted(k * n * m);
}

/// Andrews generalized Gauss polynomial in q (the q^2 -> q substitution of
/// the polynomial above; all exponents are verified even). Both kinds reduce
/// to the ordinary Gaussian binomial [m+n over m]_q at k = 1.
inline ZPoly gen_gauss(GaussKind kind, long k, long m, long n) {
    return gen_gauss_q2(kind, k, m, n).deflated(2);
}

/// The parity-unimodality object of the r3 proposition:
/// q^{-3mn/2} * rk3-binomial, defined for m != n (mod 2).
inline ZPoly gen_gauss_r3_centered(long m, long n) {
    if (((m + n) % 2) == 0)
        throw std::invalid_argument("gen_gauss_r3_centered: need m + n odd");
    return gen_gauss(GaussKind::r, 3, m, n).shifted(-3 * m * n / 2);
}

/// Refined plane partition generating function
///   sum b_delta(l, n) q^l t^n = prod_{m>=1} prod_{0<=k<m} 1/(1 - q^{2k+1-m+delta} t^m)
/// with t as the outer (truncation) variable.
inline BiSeries plane_partition_series(long delta, long omax) {
    if (omax < 0) throw std::invalid_argument("plane_partition_series: omax must be >= 0");
    const Orientation o = Orientation::inner_q;
    BiSeries r = BiSeries::one(o).truncated(omax);
    for (long m = 1; m <= omax; ++m)
        for (long k = 0; k < m; ++k)
            r = BiSeries::mul(r, geom_inv(o, 1, 2 * k + 1 - m + delta, m, omax), omax);
    return r;
}

} // namespace useries
