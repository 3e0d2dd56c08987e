#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "useries/common.hpp"

namespace useries {

/// Laurent polynomial in the inner variable with exact integer coefficients.
///
/// Storage is dense over the support [lo, hi]: slices of the series in this
/// library are dense within their support and the product kernel dominates
/// runtime. The ends are always trimmed, so lo/hi carry nonzero coefficients
/// whenever the polynomial is nonzero.
class ZPoly {
public:
    ZPoly() = default;

    /// Monomial c * x^e.
    static ZPoly monomial(Coeff c, long e = 0) {
        ZPoly p;
        if (c != 0) {
            p.lo_ = e;
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    static ZPoly one() { return monomial(1, 0); }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    static ZPoly from_terms(std::initializer_list<std::pair<long, long>> terms) {
        ZPoly p;
        for (const auto& [e, c] : terms) p.add_term(e, Coeff(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }

    const Coeff& coeff(long e) const {
        static const Coeff zero{0};
        if (is_zero() || e < lo_ || e > hi()) return zero;
        return coeffs_[static_cast<std::size_t>(e - lo_)];
    }

    void add_term(long e, const Coeff& c) {
        if (c == 0) return;
        if (coeffs_.empty()) {
            lo_ = e;
            coeffs_.push_back(c);
            return;
        }
        if (e < lo_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - e), Coeff(0));
            lo_ = e;
        } else if (e > hi()) {
            coeffs_.resize(static_cast<std::size_t>(e - lo_ + 1));
        }
        coeffs_[static_cast<std::size_t>(e - lo_)] += c;
        if (e == lo_ || e == hi()) trim();
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        ZPoly r;
        r.lo_ = std::min(a.lo_, b.lo_);
        const long hi = std::max(a.hi(), b.hi());
        r.coeffs_.assign(static_cast<std::size_t>(hi - r.lo_ + 1), Coeff(0));
        for (long e = a.lo_; e <= a.hi(); ++e)
            r.coeffs_[static_cast<std::size_t>(e - r.lo_)] = a.coeff(e);
        for (long e = b.lo_; e <= b.hi(); ++e)
            r.coeffs_[static_cast<std::size_t>(e - r.lo_)] += b.coeff(e);
        r.trim();
        return r;
    }

    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + b.negated(); }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.lo_ = a.lo_ + b.lo_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.trim();
        return r;
    }

    ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
    ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }

    ZPoly negated() const {
        ZPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    ZPoly scaled(const Coeff& k) const {
        if (k == 0) return {};
        ZPoly r = *this;
        for (auto& c : r.coeffs_) c *= k;
        return r;
    }

    /// x^k * p.
    ZPoly shifted(long k) const {
        ZPoly r = *this;
        r.lo_ += k;
        return r;
    }

    /// p(x^-1): exponent i -> -i.
    ZPoly mirrored() const {
        if (is_zero()) return {};
        ZPoly r;
        r.lo_ = -hi();
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return r;
    }

    /// p(x^k) for k >= 1: exponent i -> k*i.
    ZPoly inflated(long k) const {
        if (is_zero() || k == 1) return *this;
        ZPoly r;
        for (long e = lo_; e <= hi(); ++e) r.add_term(e * k, coeff(e));
        return r;
    }

    /// Euler operator x d/dx: multiplies each coefficient by its exponent.
    ZPoly euler() const {
        ZPoly r;
        for (long e = lo_; e <= hi(); ++e) {
            if (coeff(e) != 0) r.add_term(e, coeff(e) * Coeff(e));
        }
        return r;
    }

    /// p(x^(1/k)) for exponents all divisible by k; throws otherwise.
    ZPoly deflated(long k) const {
        ZPoly r;
        for (long e = lo_; e <= hi(); ++e) {
            if (coeff(e) == 0) continue;
            if (e % k != 0)
                throw std::domain_error("ZPoly::deflated: exponent " + std::to_string(e) +
                                        " not divisible by " + std::to_string(k));
            r.add_term(e / k, coeff(e));
        }
        return r;
    }

    bool is_symmetric() const {
        const long m = std::max(std::labs(lo_), std::labs(hi()));
        for (long e = 1; e <= m; ++e)
            if (coeff(e) != coeff(-e)) return false;
        return true;
    }

    /// Sum of all coefficients (the x=1 specialization).
    Coeff sum() const {
        Coeff s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long e = lo_; e <= hi(); ++e) {
            const Coeff& c = coeff(e);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Coeff a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ZPoly& p) {
        return os << p.str();
    }

private:
    void trim() {
        std::size_t front = 0;
        while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
        if (front == coeffs_.size()) {
            coeffs_.clear();
            lo_ = 0;
            return;
        }
        std::size_t back = coeffs_.size();
        while (back > front && coeffs_[back - 1] == 0) --back;
        if (front > 0 || back < coeffs_.size()) {
            std::vector<Coeff> keep(coeffs_.begin() + static_cast<long>(front),
                                    coeffs_.begin() + static_cast<long>(back));
            coeffs_ = std::move(keep);
            lo_ += static_cast<long>(front);
        }
    }

    long lo_ = 0;
    std::vector<Coeff> coeffs_; // dense from lo_; empty means zero
};

} // namespace useries
