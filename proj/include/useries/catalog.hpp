#pragma once

#include <map>
#include <string>
#include <vector>

#include "useries/gauss.hpp"
#include "useries/hilbert.hpp"
#include "useries/partition_series.hpp"

namespace useries {

/// Every named generating function in the catalog, keyed by family plus a
/// small bag of integer parameters (and a part multiset S for the color
/// families). The rank-generating aliases from the literature map onto
/// these families: u(m,n) = X_d(m,n), u_w(m,n) = X(m,n+1),
/// ou(m,n) = XO(m,n+2) and ou*(m,n) = XO_d(m,n).
enum class Family {
    GAUSS_BINOMIAL,
    G_DN,
    GEN_GAUSS_R,
    GEN_GAUSS_C,
    PLANE_PARTITION,
    COLOR_P,
    COLOR_R,
    COLOR_D,
    CRANK,
    KRANK,
    COMP_V,
    COMP_VD,
    COMP_X,
    COMP_XD,
    COMP_VO,
    COMP_VOD,
    COMP_XO,
    COMP_XOD,
    KLL_UOB,
    KLL_W_NEGQ,
    KLL_Z,
    HILBERT_BETTI,
    OB_A,
    OB_B,
    OB_N,
    OB_N1,
    OB_N3,
};

struct SeriesId {
    Family family;
    std::map<std::string, long> params; // k, d, m, n, a, b, delta, b0, b1, b2
    std::vector<long> parts;            // S for the color families

    long param(const std::string& key, long fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
    long required(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("SeriesId: missing parameter '" + key + "'");
        return it->second;
    }
};

/// True for the families whose object is a single polynomial rather than a
/// truncated series.
inline bool is_poly_family(Family f) {
    return f == Family::GAUSS_BINOMIAL || f == Family::GEN_GAUSS_R ||
           f == Family::GEN_GAUSS_C;
}

inline ZPoly build_poly(const SeriesId& id) {
    switch (id.family) {
        case Family::GAUSS_BINOMIAL:
            return gauss_binomial(id.required("n"), id.required("m"));
        case Family::GEN_GAUSS_R:
            return gen_gauss(GaussKind::r, id.required("k"), id.required("m"),
                             id.required("n"));
        case Family::GEN_GAUSS_C:
            return gen_gauss(GaussKind::c, id.required("k"), id.required("m"),
                             id.required("n"));
        default:
            throw std::invalid_argument("build_poly: family is a series, not a polynomial");
    }
}

/// Construct the series exactly to the requested truncation order. zmax is
/// only consulted by the z-adically expanded G-series family.
inline BiSeries build_series(const SeriesId& id, long omax, long zmax = 0) {
    switch (id.family) {
        case Family::G_DN:
            return g_series(id.param("d", 1), id.required("n"), zmax > 0 ? zmax : omax);
        case Family::PLANE_PARTITION:
            return plane_partition_series(id.param("delta", 0), omax);
        case Family::COLOR_P:
            return color_series(ColorKind::P, id.param("a", 2), id.param("b", 1),
                                id.parts, omax);
        case Family::COLOR_R:
            return color_series(ColorKind::R, id.param("a", 2), id.param("b", 1),
                                id.parts, omax);
        case Family::COLOR_D:
            return color_series(ColorKind::D, 0, 0, id.parts, omax);
        case Family::CRANK:
            return crank_series(omax);
        case Family::KRANK:
            return k_rank_series(id.param("k", 2), omax);
        case Family::COMP_V:
            return composition_series(CompositionKind::V, omax);
        case Family::COMP_VD:
            return composition_series(CompositionKind::VD, omax);
        case Family::COMP_X:
            return composition_series(CompositionKind::X, omax);
        case Family::COMP_XD:
            return composition_series(CompositionKind::XD, omax);
        case Family::COMP_VO:
            return composition_series(CompositionKind::VO, omax);
        case Family::COMP_VOD:
            return composition_series(CompositionKind::VOD, omax);
        case Family::COMP_XO:
            return composition_series(CompositionKind::XO, omax);
        case Family::COMP_XOD:
            return composition_series(CompositionKind::XOD, omax);
        case Family::KLL_UOB:
            return kll_series(KllKind::UOB, omax);
        case Family::KLL_W_NEGQ:
            return kll_series(KllKind::W_NEGQ, omax);
        case Family::KLL_Z:
            return kll_series(KllKind::Z, omax);
        case Family::HILBERT_BETTI:
            return hilbert_series(id.param("b0", 0), id.param("b1", 0),
                                  id.param("b2", 0), omax);
        case Family::OB_A:
            return oberdieck_series(OberdieckKind::A, 1, omax);
        case Family::OB_B:
            return oberdieck_series(OberdieckKind::B, 1, omax);
        case Family::OB_N:
            return oberdieck_series(OberdieckKind::N, id.param("d", 2), omax);
        case Family::OB_N1:
            return oberdieck_series(OberdieckKind::N1, id.param("d", 2), omax);
        case Family::OB_N3:
            return oberdieck_series(OberdieckKind::N3, id.param("d", 2), omax);
        default:
            throw std::invalid_argument("build_series: family is a polynomial; use build_poly");
    }
}

} // namespace useries
