#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "useries/common.hpp"
#include "useries/partition_series.hpp"
#include "useries/zpoly.hpp"

namespace useries {
namespace oracle {

/// Counts per statistic value; the ground truth the series slices are
/// checked against.
struct Histogram {
    std::map<long, long> counts;

    void add(long m, long c = 1) {
        auto it = counts.find(m);
        if (it == counts.end()) counts.emplace(m, c);
        else if ((it->second += c) == 0) counts.erase(it);
    }

    long total() const {
        long t = 0;
        for (const auto& [m, c] : counts) t += c;
        return t;
    }

    ZPoly to_zpoly() const {
        ZPoly p;
        for (const auto& [m, c] : counts) p.add_term(m, Coeff(c));
        return p;
    }

    bool symmetric() const {
        for (const auto& [m, c] : counts) {
            auto it = counts.find(-m);
            if (it == counts.end() || it->second != c) return false;
        }
        return true;
    }
};

inline void require_bound(long n, long bound, const char* what) {
    if (n > bound)
        throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds configured bound " + std::to_string(bound));
}

/// Number of partitions of n, exact.
inline Coeff count_partitions(long n, long bound = 60) {
    if (n < 0) return 0;
    require_bound(n, bound, "count_partitions");
    std::vector<Coeff> p(static_cast<std::size_t>(n + 1), Coeff(0));
    p[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long w = part; w <= n; ++w)
            p[static_cast<std::size_t>(w)] += p[static_cast<std::size_t>(w - part)];
    return p[static_cast<std::size_t>(n)];
}

struct PartConstraint {
    long min_part = 1;
    long max_part = 0; // 0 = unbounded
    bool distinct = false;
    bool odd_only = false;
};

/// All partitions of n satisfying the constraint, as weakly decreasing lists.
inline std::vector<std::vector<long>> enum_partitions(long n, PartConstraint c = {},
                                                      long bound = 60) {
    require_bound(n, bound, "enum_partitions");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long max_next) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        long hi = std::min(rem, max_next);
        for (long p = hi; p >= c.min_part; --p) {
            if (c.odd_only && p % 2 == 0) continue;
            cur.push_back(p);
            self(self, rem - p, c.distinct ? p - 1 : p);
            cur.pop_back();
        }
    };
    long start = c.max_part > 0 ? std::min(c.max_part, n) : n;
    rec(rec, n, start);
    return out;
}

/// Histogram of the number of parts over partitions of n under a constraint.
inline std::map<long, long> count_by_numparts(long n, PartConstraint c) {
    std::map<long, long> out;
    auto rec = [&](auto&& self, long rem, long max_next, long parts) -> void {
        if (rem == 0) {
            ++out[parts];
            return;
        }
        long hi = std::min(rem, max_next);
        for (long p = hi; p >= c.min_part; --p) {
            if (c.odd_only && p % 2 == 0) continue;
            self(self, rem - p, c.distinct ? p - 1 : p, parts + 1);
        }
    };
    long start = c.max_part > 0 ? std::min(c.max_part, n) : n;
    rec(rec, n, start, 0);
    return out;
}

/// A plane partition given row by row, and its diagonal weight split
/// w_-(above diagonal, i<j), w_0 (diagonal), w_+ (below, i>j).
struct PlanePartition {
    std::vector<std::vector<long>> rows;
    long w_minus = 0, w_zero = 0, w_plus = 0;
};

/// Every plane partition of total weight n (weakly decreasing along rows and
/// columns), generated row by row with prefix pruning on remaining weight.
inline std::vector<PlanePartition> enum_plane_partitions(long n, long bound = 12) {
    require_bound(n, bound, "enum_plane_partitions");
    std::vector<PlanePartition> out;
    std::vector<std::vector<long>> rows;

    auto emit = [&]() {
        PlanePartition pp;
        pp.rows = rows;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (i < j) pp.w_minus += rows[i][j];
                else if (i == j) pp.w_zero += rows[i][j];
                else pp.w_plus += rows[i][j];
            }
        out.push_back(std::move(pp));
    };

    // Append one more row (bounded elementwise by the previous one) and
    // recurse; each level owns its row buffer and a copy of the bound.
    auto next_rows = [&](auto&& self, long rem) -> void {
        if (rem == 0) {
            emit();
            return;
        }
        const bool have_prev = !rows.empty();
        const std::vector<long> prev = have_prev ? rows.back() : std::vector<long>{};
        std::vector<long> row;
        auto build = [&](auto&& bself, std::size_t col, long prev_val, long left) -> void {
            if (!row.empty()) {
                rows.push_back(row);
                self(self, left);
                rows.pop_back();
            }
            if (left == 0) return;
            if (have_prev && col >= prev.size()) return;
            long hi = std::min(prev_val, left);
            if (have_prev) hi = std::min(hi, prev[col]);
            for (long v = hi; v >= 1; --v) {
                row.push_back(v);
                bself(bself, col + 1, v, left - v);
                row.pop_back();
            }
        };
        build(build, 0, rem, rem);
    };
    next_rows(next_rows, n);
    return out;
}

/// Histogram of l = w_- - w_+ + delta * w_0 over plane partitions of n.
inline Histogram plane_partition_histogram(long n, long delta, long bound = 12) {
    Histogram h;
    for (const auto& pp : enum_plane_partitions(n, bound))
        h.add(pp.w_minus - pp.w_plus + delta * pp.w_zero);
    return h;
}

/// Number of F-partitions of j (two rows of distinct nonincreasing
/// nonnegative entries, r columns, weight r + sum of entries) with top
/// entries < m and bottom entries < n. Counted via subset-sum tables.
inline Coeff enum_f_partitions(long m, long n, long j, long bound = 6) {
    require_bound(m, bound, "enum_f_partitions");
    require_bound(n, bound, "enum_f_partitions");
    if (j < 0 || j > m * n)
        throw std::out_of_range("enum_f_partitions: j out of range [0, mn]");
    // ways[r][s]: subsets of {0..top-1} of size r and sum s
    auto subset_table = [](long top) {
        const long max_sum = top * (top - 1) / 2;
        std::vector<std::vector<Coeff>> ways(
            static_cast<std::size_t>(top + 1),
            std::vector<Coeff>(static_cast<std::size_t>(max_sum + 1), Coeff(0)));
        ways[0][0] = 1;
        for (long v = 0; v < top; ++v)
            for (long r = std::min(v + 1, top); r >= 1; --r)
                for (long s = max_sum; s >= v; --s)
                    ways[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] +=
                        ways[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - v)];
        return ways;
    };
    const auto top = subset_table(m), bot = subset_table(n);
    Coeff total = 0;
    for (long r = 0; r <= std::min(m, n) && r <= j; ++r) {
        const long rest = j - r;
        for (long s = 0; s <= rest && s < static_cast<long>(top[0].size()); ++s) {
            const long s2 = rest - s;
            if (s2 >= static_cast<long>(bot[0].size())) continue;
            total += top[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] *
                     bot[static_cast<std::size_t>(r)][static_cast<std::size_t>(s2)];
        }
    }
    return total;
}

/// Rank histogram (S - R) of the eight composition kinds of the catalog:
/// central part c flanked by partitions under the kind's part constraints,
/// enumerated literally; empty sides are allowed and n = 0 admits the single
/// concave composition c = 0.
inline Histogram enum_compositions(CompositionKind kind, long n, long bound = 18) {
    require_bound(n, bound, "enum_compositions");
    Histogram h;
    const bool odd = kind == CompositionKind::VO || kind == CompositionKind::VOD ||
                     kind == CompositionKind::XO || kind == CompositionKind::XOD;
    const bool convex = kind == CompositionKind::X || kind == CompositionKind::XD ||
                        kind == CompositionKind::XO || kind == CompositionKind::XOD;
    const bool distinct = kind == CompositionKind::VD || kind == CompositionKind::XD ||
                          kind == CompositionKind::VOD || kind == CompositionKind::XOD;
    const long c_min = convex ? 1 : 0;
    for (long c = c_min; c <= n; ++c) {
        if (odd && c % 2 == 0) continue;
        PartConstraint pc;
        pc.distinct = distinct;
        pc.odd_only = odd;
        if (convex) {
            pc.min_part = 1;
            pc.max_part = odd ? c - 2 : c - 1;
            if (pc.max_part < 1) {
                // no side parts fit below this central part
                if (n == c) h.add(0);
                continue;
            }
        } else {
            pc.min_part = c + 1;
            if (odd) pc.min_part = c + 2;
        }
        const long rem = n - c;
        std::vector<std::map<long, long>> side(static_cast<std::size_t>(rem + 1));
        for (long w = 0; w <= rem; ++w) side[static_cast<std::size_t>(w)] = count_by_numparts(w, pc);
        for (long wa = 0; wa <= rem; ++wa) {
            const auto& A = side[static_cast<std::size_t>(wa)];
            const auto& B = side[static_cast<std::size_t>(rem - wa)];
            for (const auto& [R, ca] : A)
                for (const auto& [S, cb] : B) h.add(S - R, ca * cb);
        }
    }
    return h;
}

/// Rank histogram of weight-n unimodal sequences with weak inequalities on
/// both sides and a designated peak (u_w in the literature); equals the
/// convex-composition slice X(., n+1).
inline Histogram enum_unimodal_weak(long n, long bound = 18) {
    require_bound(n, bound, "enum_unimodal_weak");
    Histogram h;
    if (n == 0) {
        h.add(0);
        return h;
    }
    for (long c = 1; c <= n; ++c) {
        PartConstraint pc;
        pc.max_part = c;
        const long rem = n - c;
        std::vector<std::map<long, long>> side(static_cast<std::size_t>(rem + 1));
        for (long w = 0; w <= rem; ++w) side[static_cast<std::size_t>(w)] = count_by_numparts(w, pc);
        for (long wa = 0; wa <= rem; ++wa) {
            const auto& A = side[static_cast<std::size_t>(wa)];
            const auto& B = side[static_cast<std::size_t>(rem - wa)];
            for (const auto& [R, ca] : A)
                for (const auto& [S, cb] : B) h.add(S - R, ca * cb);
        }
    }
    return h;
}

/// Odd-part variant of the above (all parts odd, peak odd and designated);
/// equals the odd-convex slice XO(., n+2).
inline Histogram enum_odd_unimodal(long n, long bound = 18) {
    require_bound(n, bound, "enum_odd_unimodal");
    Histogram h;
    for (long c = 1; c <= n; c += 2) {
        PartConstraint pc;
        pc.max_part = c;
        pc.odd_only = true;
        const long rem = n - c;
        std::vector<std::map<long, long>> side(static_cast<std::size_t>(rem + 1));
        for (long w = 0; w <= rem; ++w) side[static_cast<std::size_t>(w)] = count_by_numparts(w, pc);
        for (long wa = 0; wa <= rem; ++wa) {
            const auto& A = side[static_cast<std::size_t>(wa)];
            const auto& B = side[static_cast<std::size_t>(rem - wa)];
            for (const auto& [R, ca] : A)
                for (const auto& [S, cb] : B) h.add(S - R, ca * cb);
        }
    }
    return h;
}

/// Green-minus-blue histogram of the refined color partitions of n. Each
/// copy of l in S contributes an independent family of colored parts: red
/// at most (2-a) times, green/blue at most b times (b = kInfinite means
/// unbounded), plus an unrestricted yellow family for the R kind. The D kind
/// allows one green and one blue copy per slot.
inline Histogram enum_color_partitions(ColorKind kind, long a, long b,
                                       const std::vector<long>& parts, long n,
                                       long bound = 15) {
    require_bound(n, bound, "enum_color_partitions");
    Histogram h;
    auto rec = [&](auto&& self, std::size_t slot, long rem, long m) -> void {
        if (slot == parts.size()) {
            if (rem == 0) h.add(m);
            return;
        }
        const long l = parts[slot];
        const long max_mult = rem / l;
        const long red_cap = kind == ColorKind::D ? 0 : (2 - a);
        const long gb_cap = kind == ColorKind::D
                                ? 1
                                : (b == kInfinite ? max_mult : b);
        for (long y = 0; y <= (kind == ColorKind::R ? max_mult : 0); ++y)
            for (long r = 0; r <= std::min(red_cap, max_mult - y); ++r)
                for (long g = 0; g <= std::min(gb_cap, max_mult - y - r); ++g)
                    for (long bl = 0; bl <= std::min(gb_cap, max_mult - y - r - g); ++bl)
                        self(self, slot + 1, rem - l * (y + r + g + bl), m + g - bl);
    };
    rec(rec, 0, n, 0);
    return h;
}

} // namespace oracle
} // namespace useries
