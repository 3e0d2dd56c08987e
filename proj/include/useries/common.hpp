#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace useries {

/// Exact signed integer coefficient. All arithmetic in the library is exact;
/// negative values are legal everywhere (they arise in intermediate
/// numerators such as (q;q)_inf) and are only rejected by membership checks.
using Coeff = mpz_class;

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Soft memory cap, in megabytes of resident set size. A non-positive cap
/// disables the check. Builders poll this during series products and raise
/// budget_error instead of truncating.
namespace budget {

inline std::atomic<long>& cap_mb() {
    static std::atomic<long> cap{-1};
    return cap;
}

inline void set_cap_mb(long mb) { cap_mb().store(mb); }

inline void init_from_env() {
    if (const char* v = std::getenv("US_MAX_MEMORY_MB")) {
        set_cap_mb(std::strtol(v, nullptr, 10));
    }
}

inline long resident_mb() {
    std::ifstream statm("/proc/self/statm");
    long pages = 0, resident = 0;
    if (statm >> pages >> resident) {
        return resident * (4096 / 1024) / 1024;
    }
    return 0;
}

inline void check() {
    const long cap = cap_mb().load(std::memory_order_relaxed);
    if (cap <= 0) return;
    const long used = resident_mb();
    if (used > cap) {
        throw budget_error("US_MAX_MEMORY_MB exceeded: resident " +
                           std::to_string(used) + " MB > cap " +
                           std::to_string(cap) + " MB");
    }
}

/// Cheap rate-limited probe; call sites poll once per kPollEvery calls.
inline void poll() {
    constexpr unsigned kPollEvery = 64;
    static std::atomic<unsigned> counter{0};
    if ((counter.fetch_add(1, std::memory_order_relaxed) % kPollEvery) == 0) {
        check();
    }
}

} // namespace budget

inline Coeff binomial(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0 || n < k) return 0;
    Coeff r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// Catalan number C(2n, n)/(n+1); exactness of the division is checked.
inline Coeff catalan(long n) {
    Coeff b = binomial(2 * n, n);
    Coeff q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(n + 1));
    if (r != 0) throw std::logic_error("catalan: division not exact");
    return q;
}

/// Deterministic cross-platform generator for test data. std::mt19937_64 is
/// bit-exact everywhere; the distributions below avoid the
/// implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) for n >= 1.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace useries
