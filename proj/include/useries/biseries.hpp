#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "useries/common.hpp"
#include "useries/zpoly.hpp"

namespace useries {

/// Which variable lives inside the slices. The inner variable is the one
/// membership checks look at; the outer variable indexes slices and carries
/// the truncation order.
///
///   inner_z: slices indexed by q-power, each slice a Laurent polynomial in z
///   inner_q: slices indexed by z-power, each slice a Laurent polynomial in q
enum class Orientation { inner_z, inner_q };

inline const char* inner_name(Orientation o) {
    return o == Orientation::inner_z ? "z" : "q";
}
inline const char* outer_name(Orientation o) {
    return o == Orientation::inner_z ? "q" : "z";
}

/// Truncated bivariate Laurent series with exact integer coefficients.
///
/// A BiSeries represents sum_{j >= omin} slice_j(inner) * outer^j where
/// every slice with omin <= j <= omax is exact and nothing beyond omax is
/// claimed. omax == nullopt means the series is a genuine Laurent polynomial
/// in the outer variable and is exact everywhere. Reading a slice beyond a
/// finite omax throws; truncation is never silent.
class BiSeries {
public:
    explicit BiSeries(Orientation o = Orientation::inner_z) : orient_(o) {}

    static BiSeries zero(Orientation o) { return BiSeries(o); }

    static BiSeries zero_window(Orientation o, long omin, long omax) {
        BiSeries s(o);
        s.omin_ = omin;
        s.omax_ = omax;
        s.slices_.assign(static_cast<std::size_t>(omax - omin + 1), ZPoly{});
        return s;
    }

    /// Exact Laurent polynomial: c * inner^i * outer^j.
    static BiSeries monomial(Orientation o, Coeff c, long inner_e, long outer_e) {
        BiSeries s(o);
        if (c != 0) {
            s.omin_ = outer_e;
            s.slices_.push_back(ZPoly::monomial(std::move(c), inner_e));
        }
        return s;
    }

    static BiSeries one(Orientation o) { return monomial(o, 1, 0, 0); }

    /// Exact polynomial from (outer exponent, slice) pairs.
    static BiSeries poly(Orientation o, std::vector<std::pair<long, ZPoly>> terms) {
        BiSeries s(o);
        if (terms.empty()) return s;
        long lo = terms[0].first, hi = terms[0].first;
        for (const auto& [j, p] : terms) {
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
        s.omin_ = lo;
        s.slices_.assign(static_cast<std::size_t>(hi - lo + 1), ZPoly{});
        for (auto& [j, p] : terms)
            s.slices_[static_cast<std::size_t>(j - lo)] += p;
        s.canonicalize_poly();
        return s;
    }

    /// Series with an explicit exactness window [omin, omin + slices.size() - 1].
    static BiSeries from_slices(Orientation o, long omin, std::vector<ZPoly> slices) {
        BiSeries s(o);
        s.omin_ = omin;
        s.omax_ = omin + static_cast<long>(slices.size()) - 1;
        s.slices_ = std::move(slices);
        return s;
    }

    Orientation orientation() const { return orient_; }
    long omin() const { return omin_; }
    std::optional<long> omax() const { return omax_; }
    bool is_polynomial() const { return !omax_.has_value(); }
    bool is_zero() const {
        for (const auto& p : slices_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Highest outer index of the exactness window (support bound for
    /// polynomials).
    long window_hi() const {
        return omax_ ? *omax_ : omin_ + static_cast<long>(slices_.size()) - 1;
    }

    const ZPoly& slice(long j) const {
        static const ZPoly zero_poly{};
        if (j < omin_) return zero_poly;
        if (omax_ && j > *omax_)
            throw std::out_of_range("BiSeries: slice " + std::to_string(j) +
                                    " beyond exactness window omax=" +
                                    std::to_string(*omax_));
        const long idx = j - omin_;
        if (idx >= static_cast<long>(slices_.size())) return zero_poly; // polynomial tail
        return slices_[static_cast<std::size_t>(idx)];
    }

    const Coeff& coefficient(long outer_e, long inner_e) const {
        return slice(outer_e).coeff(inner_e);
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        a.require_same_orientation(b, "series_add");
        const long omin = std::min(a.omin_, b.omin_);
        std::optional<long> omax = min_opt(a.omax_, b.omax_);
        const long hi = omax ? *omax
                             : std::max(a.window_hi(), b.window_hi());
        if (omax && *omax < omin)
            throw std::invalid_argument("series_add: empty exactness window");
        BiSeries r(a.orient_);
        r.omin_ = omin;
        r.omax_ = omax;
        r.slices_.assign(static_cast<std::size_t>(hi - omin + 1), ZPoly{});
        for (long j = omin; j <= hi; ++j) {
            ZPoly s;
            if (j >= a.omin_ && j - a.omin_ < static_cast<long>(a.slices_.size()))
                s = a.slices_[static_cast<std::size_t>(j - a.omin_)];
            if (j >= b.omin_ && j - b.omin_ < static_cast<long>(b.slices_.size()))
                s += b.slices_[static_cast<std::size_t>(j - b.omin_)];
            r.slices_[static_cast<std::size_t>(j - omin)] = std::move(s);
        }
        if (!omax) r.canonicalize_poly();
        return r;
    }

    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        return a + b.scaled(-1);
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        return mul(a, b, std::nullopt);
    }

    BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
    BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

    /// Cauchy product, exact on the largest window both operands support.
    /// With the windows [a.omin, a.omax] and [b.omin, b.omax] the product is
    /// exact up to min(a.omin + b.omax, b.omin + a.omax); the omin shifts
    /// are what make monomial prefactors such as q^-1 behave.
    static BiSeries mul(const BiSeries& a, const BiSeries& b,
                        std::optional<long> target_omax) {
        a.require_same_orientation(b, "series_mul");
        budget::poll();
        const long omin = a.omin_ + b.omin_;
        std::optional<long> natural;
        if (a.omax_) natural = *a.omax_ + b.omin_;
        if (b.omax_) natural = min_opt(natural, std::optional<long>(*b.omax_ + a.omin_));

        BiSeries r(a.orient_);
        if (a.slices_.empty() || b.slices_.empty()) {
            // A zero factor: the product is exactly zero on the window.
            std::optional<long> omax = min_opt(natural, target_omax);
            if (!omax) return BiSeries(a.orient_);
            return zero_window(a.orient_, std::min(omin, *omax), *omax);
        }

        const long a_hi = a.omin_ + static_cast<long>(a.slices_.size()) - 1;
        const long b_hi = b.omin_ + static_cast<long>(b.slices_.size()) - 1;
        std::optional<long> omax;
        long hi;
        if (!natural) {
            hi = a_hi + b_hi;
            if (target_omax && *target_omax < hi) {
                omax = target_omax;
                hi = *target_omax;
            }
        } else {
            omax = min_opt(natural, target_omax);
            hi = *omax;
        }
        if (hi < omin) {
            if (!omax) return BiSeries(a.orient_);
            throw std::invalid_argument("series_mul: empty exactness window");
        }

        r.omin_ = omin;
        r.omax_ = omax;
        r.slices_.assign(static_cast<std::size_t>(hi - omin + 1), ZPoly{});
        for (long ja = a.omin_; ja <= a_hi; ++ja) {
            const ZPoly& pa = a.slices_[static_cast<std::size_t>(ja - a.omin_)];
            if (pa.is_zero()) continue;
            const long jb_hi = std::min(b_hi, hi - ja);
            for (long jb = b.omin_; jb <= jb_hi; ++jb) {
                const ZPoly& pb = b.slices_[static_cast<std::size_t>(jb - b.omin_)];
                if (pb.is_zero()) continue;
                r.slices_[static_cast<std::size_t>(ja + jb - omin)] += pa * pb;
            }
        }
        if (!omax) r.canonicalize_poly();
        return r;
    }

    /// Nonnegative integer power by binary exponentiation.
    BiSeries pow(long k, std::optional<long> target_omax = std::nullopt) const {
        if (k < 0) throw std::invalid_argument("BiSeries::pow: negative exponent");
        BiSeries result = one(orient_);
        BiSeries base = *this;
        while (k > 0) {
            if (k & 1) result = mul(result, base, target_omax);
            k >>= 1;
            if (k > 0) base = mul(base, base, target_omax);
        }
        return result;
    }

    BiSeries scaled(const Coeff& c) const {
        BiSeries r = *this;
        for (auto& p : r.slices_) p = p.scaled(c);
        if (!r.omax_) r.canonicalize_poly();
        return r;
    }

    /// Multiply by outer^k.
    BiSeries outer_shifted(long k) const {
        BiSeries r = *this;
        r.omin_ += k;
        if (r.omax_) *r.omax_ += k;
        return r;
    }

    /// Multiply by inner^k.
    BiSeries inner_shifted(long k) const {
        BiSeries r = *this;
        for (auto& p : r.slices_) p = p.shifted(k);
        return r;
    }

    /// Substitute outer -> outer * inner^s: slice j gains inner shift j*s.
    BiSeries inner_shifted_per_outer(long s) const {
        BiSeries r = *this;
        for (long j = r.omin_; j - r.omin_ < static_cast<long>(r.slices_.size()); ++j) {
            auto& p = r.slices_[static_cast<std::size_t>(j - r.omin_)];
            p = p.shifted(j * s);
        }
        return r;
    }

    /// Substitute outer -> outer^ko, inner -> inner^ki (ko, ki >= 1).
    BiSeries inflated(long ko, long ki) const {
        if (ko < 1 || ki < 1)
            throw std::invalid_argument("BiSeries::inflated: factors must be >= 1");
        BiSeries r(orient_);
        r.omin_ = omin_ * ko;
        if (omax_) r.omax_ = *omax_ * ko + (ko - 1);
        const long hi = window_hi() * ko + (omax_ ? ko - 1 : 0);
        r.slices_.assign(static_cast<std::size_t>(hi - r.omin_ + 1), ZPoly{});
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            const auto& p = slices_[static_cast<std::size_t>(j - omin_)];
            if (!p.is_zero())
                r.slices_[static_cast<std::size_t>(j * ko - r.omin_)] = p.inflated(ki);
        }
        if (!r.omax_) r.canonicalize_poly();
        return r;
    }

    /// Euler operator in the inner variable (y d/dy on inner-y series).
    BiSeries euler_inner() const {
        BiSeries r = *this;
        for (auto& p : r.slices_) p = p.euler();
        if (!r.omax_) r.canonicalize_poly();
        return r;
    }

    /// Euler operator in the outer variable (q d/dq on inner-y series).
    BiSeries euler_outer() const {
        BiSeries r = *this;
        for (long j = r.omin_; j - r.omin_ < static_cast<long>(r.slices_.size()); ++j) {
            auto& p = r.slices_[static_cast<std::size_t>(j - r.omin_)];
            p = p.scaled(Coeff(j));
        }
        if (!r.omax_) r.canonicalize_poly();
        return r;
    }

    /// Swap the roles of the variables. Requires a fully represented Laurent
    /// polynomial: transposing a window-truncated series would claim slices
    /// that depend on unknown coefficients beyond omax.
    BiSeries transpose() const {
        if (omax_)
            throw std::domain_error(
                "transpose: series is truncated at outer order " +
                std::to_string(*omax_) +
                "; only fully represented polynomial windows can be transposed");
        BiSeries r(orient_ == Orientation::inner_z ? Orientation::inner_q
                                                   : Orientation::inner_z);
        std::vector<std::pair<long, ZPoly>> cols;
        long ilo = 0, ihi = 0;
        bool any = false;
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            const auto& p = slices_[static_cast<std::size_t>(j - omin_)];
            if (p.is_zero()) continue;
            if (!any) { ilo = p.lo(); ihi = p.hi(); any = true; }
            ilo = std::min(ilo, p.lo());
            ihi = std::max(ihi, p.hi());
        }
        if (!any) return r;
        r.omin_ = ilo;
        r.slices_.assign(static_cast<std::size_t>(ihi - ilo + 1), ZPoly{});
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            const auto& p = slices_[static_cast<std::size_t>(j - omin_)];
            for (long i = p.lo(); i <= p.hi(); ++i) {
                if (p.coeff(i) != 0)
                    r.slices_[static_cast<std::size_t>(i - ilo)].add_term(j, p.coeff(i));
            }
        }
        r.canonicalize_poly();
        return r;
    }

    /// Constant term in the inner variable, as a polynomial in the outer
    /// exponents (the window of the source applies to the result).
    ZPoly ct() const {
        ZPoly r;
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            const Coeff& c = slices_[static_cast<std::size_t>(j - omin_)].coeff(0);
            if (c != 0) r.add_term(j, c);
        }
        return r;
    }

    /// Set inner variable to 1: column sums per outer exponent.
    ZPoly specialize_inner_one() const {
        ZPoly r;
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            Coeff s = slices_[static_cast<std::size_t>(j - omin_)].sum();
            if (s != 0) r.add_term(j, s);
        }
        return r;
    }

    /// Restrict the exactness window to [omin, new_omax]; always yields a
    /// dense finite window. Widening a finite window is an error.
    BiSeries truncated(long new_omax) const {
        if (omax_ && new_omax > *omax_)
            throw std::invalid_argument("truncated: cannot widen window beyond omax");
        if (new_omax < omin_ - 1)
            throw std::invalid_argument("truncated: window below omin");
        BiSeries r(orient_);
        r.omin_ = omin_;
        r.omax_ = new_omax;
        r.slices_.assign(static_cast<std::size_t>(new_omax - omin_ + 1), ZPoly{});
        const long keep = std::min<long>(static_cast<long>(slices_.size()),
                                         new_omax - omin_ + 1);
        for (long t = 0; t < keep; ++t)
            r.slices_[static_cast<std::size_t>(t)] = slices_[static_cast<std::size_t>(t)];
        return r;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.orient_ == b.orient_ && a.omin_ == b.omin_ && a.omax_ == b.omax_ &&
               a.slices_ == b.slices_;
    }

    /// Coefficientwise equality of what both operands actually store,
    /// ignoring window claims; meant for polynomial identity tests.
    friend bool coefficients_equal(const BiSeries& a, const BiSeries& b) {
        if (a.orient_ != b.orient_) return false;
        static const ZPoly zero_poly{};
        auto stored = [](const BiSeries& s, long j) -> const ZPoly& {
            if (j < s.omin_ || j - s.omin_ >= static_cast<long>(s.slices_.size()))
                return zero_poly;
            return s.slices_[static_cast<std::size_t>(j - s.omin_)];
        };
        const long lo = std::min(a.omin_, b.omin_);
        const long hi = std::max(a.window_hi(), b.window_hi());
        for (long j = lo; j <= hi; ++j) {
            if (!(stored(a, j) == stored(b, j))) return false;
        }
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        const char* iv = inner_name(orient_);
        const char* ov = outer_name(orient_);
        bool first = true;
        for (long j = omin_; j - omin_ < static_cast<long>(slices_.size()); ++j) {
            const auto& p = slices_[static_cast<std::size_t>(j - omin_)];
            if (p.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << p.str(iv) << ")";
            if (j != 0) os << "*" << ov << "^" << j;
        }
        if (first) os << "0";
        if (omax_) os << " + O(" << ov << "^" << (*omax_ + 1) << ")";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiSeries& s) {
        return os << s.str();
    }

private:
    void require_same_orientation(const BiSeries& b, const char* op) const {
        if (orient_ != b.orient_)
            throw std::invalid_argument(std::string(op) + ": orientation mismatch");
    }

    static std::optional<long> min_opt(std::optional<long> a, std::optional<long> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    /// Canonical polynomial form: support-trimmed at both ends; zero is the
    /// empty slice list at omin 0.
    void canonicalize_poly() {
        std::size_t front = 0;
        while (front < slices_.size() && slices_[front].is_zero()) ++front;
        if (front == slices_.size()) {
            slices_.clear();
            omin_ = 0;
            return;
        }
        std::size_t back = slices_.size();
        while (back > front && slices_[back - 1].is_zero()) --back;
        if (front > 0 || back < slices_.size()) {
            std::vector<ZPoly> keep(slices_.begin() + static_cast<long>(front),
                                    slices_.begin() + static_cast<long>(back));
            slices_ = std::move(keep);
            omin_ += static_cast<long>(front);
        }
    }

    Orientation orient_;
    long omin_ = 0;
    std::optional<long> omax_;    // nullopt: exact Laurent polynomial
    std::vector<ZPoly> slices_;   // dense from omin_
};

/// Geometric inverse 1/(1 - c * inner^a * outer^b) truncated at omax.
/// Converges outer-adically, hence b >= 1. A factor with b <= 0 but a >= 1
/// converges in the inner-adic topology instead: build it in the transposed
/// orientation, where the roles of a and b swap.
inline BiSeries geom_inv(Orientation o, const Coeff& c, long a, long b, long omax) {
    if (omax < 0) throw std::invalid_argument("geom_inv: omax must be >= 0");
    if (b <= 0) {
        if (a >= 1)
            throw std::domain_error(
                "geom_inv: outer exponent b <= 0; invert in the transposed "
                "orientation (the factor is inner-adically invertible)");
        throw std::domain_error("geom_inv: no adic direction converges (a <= 0, b <= 0)");
    }
    std::vector<ZPoly> slices(static_cast<std::size_t>(omax + 1));
    Coeff ck = 1;
    for (long k = 0; k * b <= omax; ++k) {
        slices[static_cast<std::size_t>(k * b)] = ZPoly::monomial(ck, a * k);
        ck *= c;
    }
    return BiSeries::from_slices(o, 0, std::move(slices));
}

inline constexpr long kInfinite = -1;

/// q-shifted-factorial style product
///   prod_{0 <= j < count} (1 + c * inner^a * outer^(b + j*step))
/// truncated at omax. count = kInfinite requires b >= 1 so that factor j
/// stops contributing once b + j*step exceeds omax.
inline BiSeries pochhammer(Orientation o, const Coeff& c, long a, long b, long step,
                           long count, long omax) {
    if (step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    if (count == kInfinite && b < 1)
        throw std::domain_error("pochhammer: infinite product needs outer exponent b >= 1");
    BiSeries r = BiSeries::one(o);
    for (long j = 0; count == kInfinite ? (b + j * step <= omax) : (j < count); ++j) {
        const long e = b + j * step;
        BiSeries factor = BiSeries::poly(
            o, {{0, ZPoly::one()}, {e, ZPoly::monomial(c, a)}});
        r = BiSeries::mul(r, factor, omax);
    }
    if (count == kInfinite) return r.is_polynomial() ? r.truncated(omax) : r;
    return r;
}

/// Reciprocal product prod_{0 <= j < count} 1/(1 + c * inner^a * outer^(b + j*step)).
/// Every factor must converge outer-adically, hence b >= 1.
inline BiSeries pochhammer_inv(Orientation o, const Coeff& c, long a, long b, long step,
                               long count, long omax) {
    if (step < 1) throw std::invalid_argument("pochhammer_inv: step must be >= 1");
    if (count == 0) return BiSeries::one(o);
    if (b < 1)
        throw std::domain_error("pochhammer_inv: outer exponent b must be >= 1");
    BiSeries r = BiSeries::one(o).truncated(omax);
    for (long j = 0; count == kInfinite ? true : (j < count); ++j) {
        const long e = b + j * step;
        if (e > omax) break; // remaining factors are 1 + O(outer^(omax+1))
        r = BiSeries::mul(r, geom_inv(o, -c, a, e, omax), omax);
    }
    return r;
}

} // namespace useries
