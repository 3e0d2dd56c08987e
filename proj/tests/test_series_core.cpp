#include <catch2/catch_amalgamated.hpp>

#include "useries/biseries.hpp"
#include "useries/common.hpp"
#include "useries/zpoly.hpp"

using namespace useries;

namespace {

const Orientation IZ = Orientation::inner_z;
const Orientation IQ = Orientation::inner_q;

ZPoly random_zpoly(Rng& rng, long radius, long max_abs) {
    ZPoly p;
    for (long e = -radius; e <= radius; ++e)
        p.add_term(e, Coeff(rng.range(-max_abs, max_abs)));
    return p;
}

ZPoly random_symmetric_zpoly(Rng& rng, long radius, long max_abs) {
    ZPoly p;
    p.add_term(0, Coeff(rng.range(-max_abs, max_abs)));
    for (long e = 1; e <= radius; ++e) {
        Coeff c{rng.range(-max_abs, max_abs)};
        p.add_term(e, c);
        p.add_term(-e, c);
    }
    return p;
}

BiSeries random_series(Rng& rng, long omax, long radius, long max_abs) {
    std::vector<ZPoly> slices;
    for (long j = 0; j <= omax; ++j) slices.push_back(random_zpoly(rng, radius, max_abs));
    return BiSeries::from_slices(IZ, 0, std::move(slices));
}

} // namespace

TEST_CASE("series_add matches the catalog of small examples") {
    BiSeries a = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{1, 1}, {-1, 1}})}});
    BiSeries b = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{0, 2}})}});
    BiSeries sum = a + b;
    CHECK(sum.slice(0) == ZPoly::from_terms({{1, 1}, {0, 2}, {-1, 1}}));

    // additive identity, including window bookkeeping
    BiSeries f = BiSeries::from_slices(
        IZ, 0, {ZPoly::one(), ZPoly::from_terms({{1, 2}, {-1, 2}})});
    BiSeries zero = BiSeries::zero_window(IZ, 0, 1);
    CHECK(f + zero == f);

    BiSeries p1 = BiSeries::poly(IZ, {{0, ZPoly::one()}, {1, ZPoly::monomial(1, 1)}});
    BiSeries p2 = BiSeries::poly(IZ, {{0, ZPoly::one()}, {1, ZPoly::monomial(1, -1)}});
    BiSeries s = p1 + p2;
    CHECK(s.slice(0) == ZPoly::from_terms({{0, 2}}));
    CHECK(s.slice(1) == ZPoly::from_terms({{1, 1}, {-1, 1}}));
    CHECK_THROWS_AS(p1 + BiSeries::one(IQ), std::invalid_argument);
}

TEST_CASE("series_mul matches the catalog of small examples") {
    BiSeries zz = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{1, 1}, {-1, 1}})}});
    BiSeries sq = zz * zz;
    CHECK(sq.slice(0) == ZPoly::from_terms({{2, 1}, {0, 2}, {-2, 1}}));

    // (1+zq)(1+z^-1 q) = 1 + q(z + z^-1) + q^2
    BiSeries f1 = BiSeries::poly(IZ, {{0, ZPoly::one()}, {1, ZPoly::monomial(1, 1)}});
    BiSeries f2 = BiSeries::poly(IZ, {{0, ZPoly::one()}, {1, ZPoly::monomial(1, -1)}});
    BiSeries prod = f1 * f2;
    CHECK(prod.slice(0) == ZPoly::one());
    CHECK(prod.slice(1) == ZPoly::from_terms({{1, 1}, {-1, 1}}));
    CHECK(prod.slice(2) == ZPoly::one());

    BiSeries f = BiSeries::from_slices(IZ, 0, {ZPoly::one(), ZPoly::from_terms({{1, 3}})});
    CHECK(f * BiSeries::one(IZ) == f);
    CHECK_THROWS_AS(f * BiSeries::one(IQ), std::invalid_argument);
}

TEST_CASE("window arithmetic: truncation is min of operands, shifted by omin") {
    BiSeries a = BiSeries::one(IZ).truncated(10);
    BiSeries b = BiSeries::one(IZ).truncated(7);
    CHECK((a + b).omax() == 7);
    CHECK((a * b).omax() == 7);

    // A q^-1 monomial prefactor is exact everywhere, so it shifts the
    // window down by one instead of clamping it at min(omax).
    BiSeries qinv = BiSeries::monomial(IZ, 1, 0, -1);
    BiSeries shifted = qinv * a;
    CHECK(shifted.omin() == -1);
    CHECK(shifted.omax() == 9);

    // reading beyond the window is an error, never a silent zero
    CHECK_THROWS_AS(b.slice(8), std::out_of_range);
}

TEST_CASE("geom_inv expands truncated geometric series") {
    BiSeries g = geom_inv(IZ, 1, 0, 1, 3);
    for (long j = 0; j <= 3; ++j) CHECK(g.slice(j) == ZPoly::one());

    BiSeries gz = geom_inv(IZ, 1, 1, 1, 2);
    CHECK(gz.slice(0) == ZPoly::one());
    CHECK(gz.slice(1) == ZPoly::monomial(1, 1));
    CHECK(gz.slice(2) == ZPoly::monomial(1, 2));

    // 1/(1 - z q^-1) expanded z-adically in the transposed orientation:
    // slices indexed by z-power, inner value q^-k
    BiSeries gt = geom_inv(IQ, 1, -1, 1, 2);
    CHECK(gt.slice(0) == ZPoly::one());
    CHECK(gt.slice(1) == ZPoly::monomial(1, -1));
    CHECK(gt.slice(2) == ZPoly::monomial(1, -2));

    CHECK_THROWS_AS(geom_inv(IZ, 1, 0, 0, 5), std::domain_error);
    CHECK_THROWS_AS(geom_inv(IZ, 1, -1, -1, 5), std::domain_error);
}

TEST_CASE("pochhammer products") {
    // (q;q)_2 = 1 - q - q^2 + q^3
    BiSeries p = pochhammer(IZ, -1, 0, 1, 1, 2, 10);
    CHECK(p.slice(0) == ZPoly::one());
    CHECK(p.slice(1) == ZPoly::monomial(-1, 0));
    CHECK(p.slice(2) == ZPoly::monomial(-1, 0));
    CHECK(p.slice(3) == ZPoly::one());

    CHECK(pochhammer(IZ, 5, 2, 1, 1, 0, 4) == BiSeries::one(IZ));

    // (-zq;q)_inf to omax 2: only the j=0,1 factors reach the window
    BiSeries inf = pochhammer(IZ, 1, 1, 1, 1, kInfinite, 2);
    CHECK(inf.slice(0) == ZPoly::one());
    CHECK(inf.slice(1) == ZPoly::monomial(1, 1));
    CHECK(inf.slice(2) == ZPoly::monomial(1, 1));
    CHECK(inf.omax() == 2);

    CHECK_THROWS_AS(pochhammer(IZ, 1, 1, 0, 1, kInfinite, 5), std::domain_error);

    // reciprocal pair: (q;q)_3 * 1/(q;q)_3 = 1
    BiSeries fwd = pochhammer(IZ, -1, 0, 1, 1, 3, 12);
    BiSeries inv = pochhammer_inv(IZ, -1, 0, 1, 1, 3, 12);
    BiSeries prod = fwd * inv;
    CHECK(prod.slice(0) == ZPoly::one());
    for (long j = 1; j <= 12; ++j) CHECK(prod.slice(j).is_zero());
}

TEST_CASE("transpose swaps orientation and is an involution") {
    // q(z + z^-1) inner-z -> z q + z^-1 q inner-q
    BiSeries s = BiSeries::poly(IZ, {{1, ZPoly::from_terms({{1, 1}, {-1, 1}})}});
    BiSeries t = s.transpose();
    CHECK(t.orientation() == IQ);
    CHECK(t.slice(1) == ZPoly::monomial(1, 1));
    CHECK(t.slice(-1) == ZPoly::monomial(1, 1));

    CHECK(BiSeries::one(IZ).transpose() == BiSeries::one(IQ));

    BiSeries g = BiSeries::poly(IZ, {{0, ZPoly::one()},
                                     {1, ZPoly::from_terms({{1, 1}, {-1, 1}})},
                                     {2, ZPoly::one()}});
    CHECK(g.transpose().transpose() == g);

    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<long, ZPoly>> terms;
        const long lo = rng.range(-3, 0);
        for (long j = lo; j <= lo + 4; ++j)
            terms.emplace_back(j, random_zpoly(rng, 3, 4));
        BiSeries f = BiSeries::poly(IZ, std::move(terms));
        CHECK(f.transpose().transpose() == f);
    }

    // truncated series cannot be transposed
    CHECK_THROWS_AS(geom_inv(IZ, 1, 0, 1, 4).transpose(), std::domain_error);
}

TEST_CASE("Euler operators") {
    BiSeries s = BiSeries::poly(IZ, {{1, ZPoly::monomial(1, 2)}}); // z^2 q
    CHECK(s.euler_inner().slice(1) == ZPoly::monomial(2, 2));
    CHECK(BiSeries::one(IZ).euler_outer().is_zero());
    BiSeries m = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{1, 1}, {-1, 1}})}});
    CHECK(m.euler_inner().slice(0) == ZPoly::from_terms({{1, 1}, {-1, -1}}));

    // linearity and the Leibniz rule on random polynomials
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        BiSeries f = BiSeries::poly(IZ, {{0, random_zpoly(rng, 3, 4)},
                                         {1, random_zpoly(rng, 3, 4)}});
        BiSeries g = BiSeries::poly(IZ, {{0, random_zpoly(rng, 3, 4)},
                                         {2, random_zpoly(rng, 3, 4)}});
        CHECK((f + g).euler_inner() == f.euler_inner() + g.euler_inner());
        CHECK((f * g).euler_inner() == f.euler_inner() * g + f * g.euler_inner());
        CHECK((f * g).euler_outer() == f.euler_outer() * g + f * g.euler_outer());
    }
}

TEST_CASE("constant-term extraction") {
    // CT_z[(1+qz)(1+z^-1)] = 1 + q
    BiSeries f1 = BiSeries::poly(IZ, {{0, ZPoly::one()}, {1, ZPoly::monomial(1, 1)}});
    BiSeries f2 = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{0, 1}, {-1, 1}})}});
    CHECK((f1 * f2).ct() == ZPoly::from_terms({{0, 1}, {1, 1}}));

    BiSeries zfree = BiSeries::poly(IZ, {{0, ZPoly::one()}, {2, ZPoly::monomial(3, 0)}});
    CHECK(zfree.ct() == ZPoly::from_terms({{0, 1}, {2, 3}}));

    BiSeries odd = BiSeries::poly(IZ, {{0, ZPoly::from_terms({{1, 1}, {-1, 1}})}});
    CHECK(odd.ct().is_zero());
}

TEST_CASE("ring axioms on random truncated series") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const long omax = rng.range(3, 7);
        BiSeries a = random_series(rng, omax, 3, 5);
        BiSeries b = random_series(rng, rng.range(3, 7), 3, 5);
        BiSeries c = random_series(rng, rng.range(3, 7), 3, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("convolution identity for symmetric factors, term for term") {
    // c_n - c_{n+v} = sum_{r>=0} (a_{n-r} - a_{n+r+v})(b_r - b_{r+v})
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        ZPoly a = random_symmetric_zpoly(rng, rng.range(0, 5), 6);
        ZPoly b = random_symmetric_zpoly(rng, rng.range(0, 5), 6);
        ZPoly c = a * b;
        const long reach = 12;
        for (int nu : {1, 2}) {
            for (long n = 0; n <= reach; ++n) {
                Coeff lhs = c.coeff(n) - c.coeff(n + nu);
                Coeff rhs = 0;
                for (long r = 0; r <= reach + nu; ++r)
                    rhs += (a.coeff(n - r) - a.coeff(n + r + nu)) *
                           (b.coeff(r) - b.coeff(r + nu));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("finite Pochhammer identity (q^2 z; q^2)_m (z^-1; q^2)_n") {
    // equals (-z)^-n q^{n(n-1)} ((z q^{1+m-n}) q^{1-m-n}; q^2)_{m+n}
    for (long m = 0; m <= 6; ++m) {
        for (long n = 0; n <= 6; ++n) {
            BiSeries lhs = BiSeries::one(IZ);
            for (long j = 0; j < m; ++j)
                lhs = lhs * BiSeries::poly(IZ, {{0, ZPoly::one()},
                                                {2 + 2 * j, ZPoly::monomial(-1, 1)}});
            for (long j = 0; j < n; ++j)
                lhs = lhs * BiSeries::poly(IZ, {{0, ZPoly::one()},
                                                {2 * j, ZPoly::monomial(-1, -1)}});

            BiSeries rhs = BiSeries::monomial(IZ, (n % 2 == 0) ? 1 : -1, -n, n * (n - 1));
            for (long j = 0; j < m + n; ++j)
                rhs = rhs * BiSeries::poly(IZ, {{0, ZPoly::one()},
                                                {2 - 2 * n + 2 * j, ZPoly::monomial(-1, 1)}});
            CHECK(coefficients_equal(lhs, rhs));
        }
    }
}

TEST_CASE("memory budget raises instead of truncating") {
    budget::set_cap_mb(1); // resident size is always above 1 MB
    CHECK_THROWS_AS(
        [] {
            BiSeries r = BiSeries::one(IZ).truncated(30);
            for (int i = 0; i < 200; ++i) r = BiSeries::mul(r, r, 30);
        }(),
        budget_error);
    budget::set_cap_mb(-1);
    CHECK_NOTHROW(BiSeries::mul(BiSeries::one(IZ).truncated(5),
                                BiSeries::one(IZ).truncated(5), 5));
}
