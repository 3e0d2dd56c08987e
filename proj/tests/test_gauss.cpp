#include <catch2/catch_amalgamated.hpp>

#include "useries/gauss.hpp"
#include "useries/membership.hpp"
#include "useries/oracles.hpp"

using namespace useries;

namespace {

const Orientation IZ = Orientation::inner_z;
const Orientation IQ = Orientation::inner_q;

/// Independent oracle: [q^j] of [n over m]_q counts partitions of j fitting
/// in an m x (n-m) box.
Coeff box_partition_count(long n, long m, long j) {
    oracle::PartConstraint pc;
    pc.max_part = n - m;
    Coeff total = 0;
    if (n - m >= 1)
        for (const auto& [parts, cnt] : oracle::count_by_numparts(j, pc))
            if (parts <= m) total += cnt;
    if (j == 0) return 1;
    return total;
}

} // namespace

TEST_CASE("gauss_binomial basics") {
    CHECK(gauss_binomial(2, 1) == ZPoly::from_terms({{0, 1}, {1, 1}}));
    CHECK(gauss_binomial(4, 2) ==
          ZPoly::from_terms({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gauss_binomial(7, 0) == ZPoly::one());
    CHECK(gauss_binomial(3, 5).is_zero());
    CHECK_THROWS_AS(gauss_binomial(-1, 0), std::invalid_argument);

    // against the box-partition oracle
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m <= n; ++m) {
            ZPoly g = gauss_binomial(n, m);
            for (long j = 0; j <= m * (n - m); ++j) {
                CAPTURE(n, m, j);
                CHECK(g.coeff(j) == box_partition_count(n, m, j));
            }
        }

    // symmetric unimodality of the classical Gauss polynomials
    for (long n = 0; n <= 9; ++n)
        for (long m = 0; m <= n; ++m)
            CHECK(check_palindromic_unimodal(gauss_binomial(n, m)).member);
}

TEST_CASE("g_series small values") {
    CHECK(g_series(1, 0, 5) == BiSeries::one(IQ).truncated(5));
    CHECK(g_series(kInfinite, 0, 5) == BiSeries::one(IQ).truncated(5));

    BiSeries g11 = g_series(1, 1, 4);
    CHECK(g11.slice(0) == ZPoly::one());
    CHECK(g11.slice(1) == ZPoly::one());
    CHECK(g11.slice(2).is_zero());

    BiSeries g12 = g_series(1, 2, 4);
    CHECK(g12.slice(0) == ZPoly::one());
    CHECK(g12.slice(1) == ZPoly::from_terms({{1, 1}, {-1, 1}}));
    CHECK(g12.slice(2) == ZPoly::one());
    CHECK(g12.slice(3).is_zero());

    CHECK_THROWS_AS(g_series(0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(g_series(1, -1, 4), std::invalid_argument);
}

TEST_CASE("Cauchy binomial expansions of the two G-series building blocks") {
    // (-z q^{1-n}; q^2)_n = sum_l q^{-(n-l)l} [n over l]_{q^2} z^l
    for (long n = 0; n <= 6; ++n) {
        BiSeries lhs = BiSeries::one(IZ);
        for (long j = 0; j < n; ++j)
            lhs = lhs * BiSeries::poly(IZ, {{0, ZPoly::one()},
                                            {1 - n + 2 * j, ZPoly::monomial(1, 1)}});
        std::vector<std::pair<long, ZPoly>> slices;
        for (long l = 0; l <= n; ++l)
            slices.emplace_back(l, gauss_binomial(n, l).inflated(2).shifted(-(n - l) * l));
        BiSeries rhs = BiSeries::poly(IQ, std::move(slices));
        CHECK(coefficients_equal(lhs.transpose(), rhs));
    }

    // 1/(z q^{1-n}; q^2)_n = sum_l q^{-(n-1)l} [n-1+l over l]_{q^2} z^l
    const long zmax = 8;
    for (long n = 1; n <= 6; ++n) {
        BiSeries lhs = g_series(kInfinite, n, zmax);
        std::vector<ZPoly> slices;
        for (long l = 0; l <= zmax; ++l)
            slices.push_back(gauss_binomial(n - 1 + l, l).inflated(2).shifted(-(n - 1) * l));
        BiSeries rhs = BiSeries::from_slices(IQ, 0, std::move(slices));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("G_{3,n} factors as G_{1,n}(q^2,z^2) G_{1,n}(q,z)") {
    const long zmax = 8;
    for (long n = 0; n <= 6; ++n) {
        BiSeries lhs = g_series(3, n, zmax);
        BiSeries rhs = BiSeries::mul(g_series(1, n, zmax / 2).inflated(2, 2),
                                     g_series(1, n, zmax), zmax);
        CHECK(lhs == rhs.truncated(zmax));
    }
}

TEST_CASE("generalized Gauss polynomials") {
    CHECK(gen_gauss(GaussKind::c, 1, 1, 1) == ZPoly::from_terms({{0, 1}, {1, 1}}));
    CHECK(gen_gauss(GaussKind::c, 2, 1, 1) ==
          ZPoly::from_terms({{0, 1}, {1, 4}, {2, 1}}));
    CHECK(gen_gauss(GaussKind::r, 3, 1, 1) ==
          ZPoly::from_terms({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));

    // k = 1 recovers the ordinary Gauss polynomials for both kinds
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= 8; ++n) {
            ZPoly expected = gauss_binomial(m + n, m);
            CHECK(gen_gauss(GaussKind::r, 1, m, n) == expected);
            CHECK(gen_gauss(GaussKind::c, 1, m, n) == expected);
        }

    CHECK_THROWS_AS(gen_gauss(GaussKind::c, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("generalized Gauss polynomials at q = 1") {
    // c-kind: CT_z[(1+z)^{km}(1+z^{-1})^{kn}] = binom(km+kn, km) (Vandermonde);
    // r-kind: [z^{kn}] (1+z+...+z^k)^{m+n} via G_{k,n}(1,z) = ((1-z^{k+1})/(1-z))^n
    for (long k = 1; k <= 4; ++k)
        for (long m = 0; m <= 6; ++m)
            for (long n = 0; n <= 6; ++n) {
                CAPTURE(k, m, n);
                CHECK(gen_gauss(GaussKind::c, k, m, n).sum() ==
                      binomial(k * m + k * n, k * m));
                ZPoly step;
                for (long j = 0; j <= k; ++j) step.add_term(j, 1);
                ZPoly power = ZPoly::one();
                for (long t = 0; t < m + n; ++t) power *= step;
                CHECK(gen_gauss(GaussKind::r, k, m, n).sum() == power.coeff(k * n));
            }
}

TEST_CASE("r3 parity unimodality for m+n odd") {
    for (long m = 1; m <= 9; ++m)
        for (long n = 1; n <= 9 - m; ++n) {
            if ((m + n) % 2 == 0) continue;
            CAPTURE(m, n);
            CHECK(check_slice(gen_gauss_r3_centered(m, n), ClassSpec(2, false)).member);
        }
    CHECK_THROWS_AS(gen_gauss_r3_centered(1, 1), std::invalid_argument);
}

TEST_CASE("plane partition series small values") {
    BiSeries p0 = plane_partition_series(0, 4);
    CHECK(p0.slice(0) == ZPoly::one());
    CHECK(p0.slice(1) == ZPoly::one());
    CHECK(p0.slice(2) == ZPoly::from_terms({{-1, 1}, {0, 1}, {1, 1}}));

    BiSeries p1 = plane_partition_series(1, 3);
    CHECK(p1.slice(1) == ZPoly::monomial(1, 1));

    // q = 1 specialization: MacMahon's prod 1/(1-t^m)^m, independent of delta
    const long nmax = 12;
    BiSeries mac = BiSeries::one(IQ).truncated(nmax);
    for (long m = 1; m <= nmax; ++m)
        for (long e = 0; e < m; ++e)
            mac = BiSeries::mul(mac, geom_inv(IQ, 1, 0, m, nmax), nmax);
    for (long delta : {-1L, 0L, 2L}) {
        ZPoly sums = plane_partition_series(delta, nmax).specialize_inner_one();
        for (long n = 0; n <= nmax; ++n) CHECK(sums.coeff(n) == mac.slice(n).coeff(0));
    }
}
