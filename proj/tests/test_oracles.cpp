#include <catch2/catch_amalgamated.hpp>

#include "useries/gauss.hpp"
#include "useries/oracles.hpp"
#include "useries/partition_series.hpp"

using namespace useries;
using namespace useries::oracle;

TEST_CASE("partition counting") {
    CHECK(count_partitions(0) == 1);
    CHECK(count_partitions(1) == 1);
    CHECK(count_partitions(4) == 5);
    CHECK(count_partitions(20) == 627);

    // definitional cross-check against 1/(q;q)_inf
    BiSeries gen = pochhammer_inv(Orientation::inner_z, -1, 0, 1, 1, kInfinite, 20);
    for (long n = 0; n <= 20; ++n)
        CHECK(gen.slice(n).coeff(0) == count_partitions(n));

    CHECK_THROWS_AS(count_partitions(61), std::out_of_range);

    auto distinct = enum_partitions(6, {.min_part = 1, .max_part = 0, .distinct = true});
    CHECK(distinct.size() == 4); // 6, 5+1, 4+2, 3+2+1
    auto odd = enum_partitions(6, {.min_part = 1, .max_part = 0, .distinct = false,
                                   .odd_only = true});
    CHECK(odd.size() == 4); // 5+1, 3+3, 3+1+1+1, 1^6
}

TEST_CASE("plane partition enumeration") {
    auto pp1 = enum_plane_partitions(1);
    REQUIRE(pp1.size() == 1);
    CHECK(pp1[0].w_minus == 0);
    CHECK(pp1[0].w_zero == 1);
    CHECK(pp1[0].w_plus == 0);

    auto pp2 = enum_plane_partitions(2);
    REQUIRE(pp2.size() == 3);
    long found_l0 = 0, found_lp = 0, found_lm = 0;
    for (const auto& pp : pp2) {
        const long l = pp.w_minus - pp.w_plus;
        if (l == 0) ++found_l0;
        if (l == 1) ++found_lp;
        if (l == -1) ++found_lm;
    }
    CHECK(found_l0 == 1);
    CHECK(found_lp == 1);
    CHECK(found_lm == 1);

    // MacMahon counts 1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500
    const long expected[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
    for (long n = 0; n <= 10; ++n)
        CHECK(static_cast<long>(enum_plane_partitions(n).size()) == expected[n]);

    // the statistic partitions the same set: totals independent of delta
    for (long n = 0; n <= 8; ++n) {
        const long total = plane_partition_histogram(n, 0).total();
        CHECK(plane_partition_histogram(n, 1).total() == total);
        CHECK(plane_partition_histogram(n, -1).total() == total);
    }

    // histograms match the generating function slices
    for (long delta : {-1L, 0L, 1L}) {
        BiSeries s = plane_partition_series(delta, 8);
        for (long n = 0; n <= 8; ++n)
            CHECK(s.slice(n) == plane_partition_histogram(n, delta).to_zpoly());
    }

    CHECK_THROWS_AS(enum_plane_partitions(13), std::out_of_range);
}

TEST_CASE("F-partition counts match Gauss binomial coefficients") {
    CHECK(enum_f_partitions(1, 1, 0) == 1);
    CHECK(enum_f_partitions(1, 1, 1) == 1);

    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n) {
            ZPoly g = gauss_binomial(m + n, m);
            Coeff col_sum = 0;
            for (long j = 0; j <= m * n; ++j) {
                CAPTURE(m, n, j);
                Coeff c = enum_f_partitions(m, n, j);
                CHECK(c == g.coeff(j));
                col_sum += c;
            }
            CHECK(col_sum == binomial(m + n, m)); // Gauss polynomial at q = 1
        }

    CHECK_THROWS_AS(enum_f_partitions(7, 1, 0), std::out_of_range);
    CHECK_THROWS_AS(enum_f_partitions(2, 2, 5), std::out_of_range);
}

TEST_CASE("composition enumeration matches the documented examples") {
    Histogram v2 = enum_compositions(CompositionKind::V, 2);
    CHECK(v2.to_zpoly() ==
          ZPoly::from_terms({{-2, 1}, {-1, 1}, {0, 2}, {1, 1}, {2, 1}}));

    Histogram xd3 = enum_compositions(CompositionKind::XD, 3);
    CHECK(xd3.to_zpoly() == ZPoly::from_terms({{-1, 1}, {0, 1}, {1, 1}}));

    Histogram v0 = enum_compositions(CompositionKind::V, 0);
    CHECK(v0.to_zpoly() == ZPoly::one()); // the single composition c = 0

    CHECK(enum_compositions(CompositionKind::X, 0).counts.empty());
    CHECK(enum_compositions(CompositionKind::VO, 0).counts.empty());

    CHECK_THROWS_AS(enum_compositions(CompositionKind::V, 19), std::out_of_range);
}

TEST_CASE("composition histograms match the series slices") {
    const long nmax = 12;
    for (auto kind : {CompositionKind::V, CompositionKind::VD, CompositionKind::X,
                      CompositionKind::XD, CompositionKind::VO, CompositionKind::VOD,
                      CompositionKind::XO, CompositionKind::XOD}) {
        BiSeries s = composition_series(kind, nmax);
        for (long n = 0; n <= nmax; ++n) {
            Histogram h = enum_compositions(kind, n);
            CAPTURE(static_cast<int>(kind), n);
            CHECK(h.symmetric());
            CHECK(s.slice(n) == h.to_zpoly());
        }
    }
}

TEST_CASE("unimodal-sequence aliases") {
    // u_w(m,n) = X(m,n+1) and ou(m,n) = XO(m,n+2)
    BiSeries x = composition_series(CompositionKind::X, 13);
    BiSeries xo = composition_series(CompositionKind::XO, 14);
    for (long n = 0; n <= 12; ++n) {
        CHECK(x.slice(n + 1) == enum_unimodal_weak(n).to_zpoly());
        CHECK(xo.slice(n + 2) == enum_odd_unimodal(n).to_zpoly());
    }
}

TEST_CASE("color partition enumeration") {
    Histogram a = enum_color_partitions(ColorKind::P, 2, 1, {1}, 1);
    CHECK(a.to_zpoly() == ZPoly::from_terms({{-1, 1}, {1, 1}}));
    Histogram b = enum_color_partitions(ColorKind::P, 2, 1, {1}, 2);
    CHECK(b.to_zpoly() == ZPoly::one());
    Histogram dempty = enum_color_partitions(ColorKind::D, 0, 0, {1, 5}, 0);
    CHECK(dempty.to_zpoly() == ZPoly::one());

    struct Cfg { ColorKind kind; long a, b; std::vector<long> parts; };
    const std::vector<Cfg> cfgs = {
        {ColorKind::P, 1, 1, {1, 2, 3}}, {ColorKind::P, 2, 2, {1, 2}},
        {ColorKind::P, 2, kInfinite, {1, 3}}, {ColorKind::R, 1, 2, {1, 2}},
        {ColorKind::R, 2, kInfinite, {1}}, {ColorKind::D, 0, 0, {1, 2, 3}},
        {ColorKind::D, 0, 0, {1, 1, 2}},
    };
    const long nmax = 10;
    for (const auto& cfg : cfgs) {
        BiSeries s = color_series(cfg.kind, cfg.a, cfg.b, cfg.parts, nmax);
        for (long n = 0; n <= nmax; ++n) {
            Histogram h = enum_color_partitions(cfg.kind, cfg.a, cfg.b, cfg.parts, n);
            CAPTURE(static_cast<int>(cfg.kind), cfg.a, cfg.b, n);
            CHECK(h.symmetric());
            CHECK(s.slice(n) == h.to_zpoly());
        }
    }

    CHECK_THROWS_AS(enum_color_partitions(ColorKind::P, 1, 1, {1}, 16), std::out_of_range);
}
