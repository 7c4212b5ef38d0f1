#include "so5/counting.hpp"

#include <cmath>
#include <string>

#include "so5/errors.hpp"
#include "so5/parallel.hpp"

namespace so5::counting {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Saturation cap for search probes: comparisons against thresholds
// (<= 6e14) stay correct once a product clips here.
constexpr u128 kCap = static_cast<u128>(1) << 126;

inline u128 mul_sat(u128 a, u128 b) {
    if (a != 0 && b > kCap / a) return kCap;
    return a * b;
}

// quartic(m, n) = m*n*(m+n)*(m+2n), saturating
inline u128 quartic_sat(u64 m, u64 n) {
    u128 p = mul_sat(static_cast<u128>(m), static_cast<u128>(n));
    p = mul_sat(p, static_cast<u128>(m) + n);
    return mul_sat(p, static_cast<u128>(m) + 2 * static_cast<u128>(n));
}

// cubic(m, n) = m*n*(m+n), saturating
inline u128 cubic_sat(u64 m, u64 n) {
    u128 p = mul_sat(static_cast<u128>(m), static_cast<u128>(n));
    return mul_sat(p, static_cast<u128>(m) + n);
}

inline u128 product_sat(Algebra a, u64 j, u64 k) {
    return a == Algebra::SO5 ? quartic_sat(j, k) : cubic_sat(j, k);
}

inline u128 threshold(Algebra a, u64 x) {
    return a == Algebra::SO5 ? static_cast<u128>(x) * 6 : static_cast<u128>(x) * 2;
}

void check_x(u64 x, const char* where) {
    if (x > kMaxX)
        throw OverflowError(std::string(where) + ": x exceeds supported range 1e14");
}

// Largest t >= 0 with f(t) <= bound for strictly increasing f.
template <class F>
u64 search_max(F f, u128 bound) {
    if (f(1) > bound) return 0;
    u64 hi = 1;
    while (f(2 * hi) <= bound) hi *= 2;  // f saturates, never overflows
    u64 lo = hi;                          // f(lo) <= bound < f(2*hi)
    hi *= 2;
    while (lo + 1 < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (f(mid) <= bound)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

std::uint64_t dim(Algebra a, std::uint64_t j, std::uint64_t k) {
    if (j < 1 || k < 1) throw DomainError("dim: indices must be >= 1");
    u128 p = product_sat(a, j, k);
    if (p >= kCap) throw OverflowError("dim: product exceeds 128-bit guard");
    u128 d = a == Algebra::SO5 ? p / 6 : p / 2;  // always exact
    if (d > static_cast<u128>(UINT64_MAX))
        throw OverflowError("dim: dimension exceeds 64-bit range");
    return static_cast<u64>(d);
}

std::uint64_t boundary_count(Algebra a, Axis axis, std::uint64_t v, std::uint64_t x) {
    if (v < 1) throw DomainError("boundary_count: v must be >= 1");
    check_x(x, "boundary_count");
    u128 bound = threshold(a, x);
    if (axis == Axis::FixedK)
        return search_max([&](u64 m) { return product_sat(a, m, v); }, bound);
    return search_max([&](u64 n) { return product_sat(a, v, n); }, bound);
}

std::uint64_t integer_root4(std::uint64_t x) {
    double e = std::pow(static_cast<double>(x), 0.25);
    u64 r = static_cast<u64>(e);
    auto p4 = [](u64 t) {
        u128 s = static_cast<u128>(t) * t;
        return s * s;
    };
    while (r > 0 && p4(r) > static_cast<u128>(x)) --r;
    while (p4(r + 1) <= static_cast<u128>(x)) ++r;
    return r;
}

std::uint64_t integer_root3(std::uint64_t x) {
    double e = std::cbrt(static_cast<double>(x));
    u64 r = static_cast<u64>(e);
    auto p3 = [](u64 t) { return static_cast<u128>(t) * t * t; };
    while (r > 0 && p3(r) > static_cast<u128>(x)) --r;
    while (p3(r + 1) <= static_cast<u128>(x)) ++r;
    return r;
}

std::uint64_t rho(Algebra a, std::uint64_t n) {
    if (n < 1) throw DomainError("rho: n must be >= 1");
    check_x(n, "rho");
    u128 target = threshold(a, n);
    u64 count = 0;
    for (u64 k = 1; product_sat(a, 1, k) <= target; ++k) {
        u64 j = search_max([&](u64 m) { return product_sat(a, m, k); }, target);
        if (j >= 1 && product_sat(a, j, k) == target) ++count;
    }
    return count;
}

namespace {

u64 summatory_so5_brute(u64 x, bool parallel) {
    u128 bound = static_cast<u128>(x) * 6;
    // k range by plain increment, no binary search anywhere in this path
    u64 k_max = 0;
    while (quartic_sat(1, k_max + 1) <= bound) ++k_max;
    u64 total = 0;
    if (parallel) {
        const int nw = worker_count();
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) num_threads(nw)
        for (u64 k = 1; k <= k_max; ++k) {
            u64 j = 1;
            while (quartic_sat(j, k) <= bound) ++j;
            total += j - 1;
        }
    } else {
        for (u64 k = 1; k <= k_max; ++k) {
            u64 j = 1;
            while (quartic_sat(j, k) <= bound) ++j;
            total += j - 1;
        }
    }
    return total;
}

u64 summatory_su3_brute(u64 x, bool parallel) {
    u128 bound = static_cast<u128>(x) * 2;
    u64 k_max = 0;
    while (cubic_sat(1, k_max + 1) <= bound) ++k_max;
    u64 total = 0;
    if (parallel) {
        const int nw = worker_count();
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) num_threads(nw)
        for (u64 k = 1; k <= k_max; ++k) {
            u64 j = 1;
            while (cubic_sat(j, k) <= bound) ++j;
            total += j - 1;
        }
    } else {
        for (u64 k = 1; k <= k_max; ++k) {
            u64 j = 1;
            while (cubic_sat(j, k) <= bound) ++j;
            total += j - 1;
        }
    }
    return total;
}

// Hyperbola split: every point has j <= r or k <= r, and the whole r x r
// square lies inside the region, so S = sum_k B1 + sum_j B2 - r^2.
u64 summatory_hyperbola(Algebra a, u64 x, bool parallel) {
    u64 r = a == Algebra::SO5 ? integer_root4(x) : integer_root3(x);
    u64 total = 0;
    if (parallel) {
        const int nw = worker_count();
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(nw)
        for (u64 v = 1; v <= r; ++v) {
            total += boundary_count(a, Axis::FixedK, v, x);
            total += boundary_count(a, Axis::FixedJ, v, x);
        }
    } else {
        for (u64 v = 1; v <= r; ++v) {
            total += boundary_count(a, Axis::FixedK, v, x);
            total += boundary_count(a, Axis::FixedJ, v, x);
        }
    }
    return total - r * r;
}

u64 summatory_impl(const CountQuery& q, bool parallel) {
    check_x(q.x, "summatory");
    if (q.x == 0) return 0;
    if (q.method == Method::Hyperbola)
        return summatory_hyperbola(q.algebra, q.x, parallel);
    return q.algebra == Algebra::SO5 ? summatory_so5_brute(q.x, parallel)
                                     : summatory_su3_brute(q.x, parallel);
}

}  // namespace

std::uint64_t summatory(const CountQuery& q) { return summatory_impl(q, true); }

std::uint64_t summatory_serial(const CountQuery& q) { return summatory_impl(q, false); }

std::uint64_t divisor_summatory(std::uint64_t x, Method m) {
    if (x < 1) throw DomainError("divisor_summatory: x must be >= 1");
    check_x(x, "divisor_summatory");
    u64 total = 0;
    if (m == Method::Hyperbola) {
        u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
        while (r > 0 && r * r > x) --r;
        while ((r + 1) * (r + 1) <= x) ++r;
        for (u64 n = 1; n <= r; ++n) total += x / n;
        return 2 * total - r * r;
    }
    // brute: count multiples of every d
    const int nw = worker_count();
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(nw)
    for (u64 d = 1; d <= x; ++d) total += x / d;
    return total;
}

std::vector<std::uint32_t> rho_sieve(Algebra a, std::uint32_t n_max) {
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
    u128 bound = threshold(a, n_max);
    for (u64 k = 1; product_sat(a, 1, k) <= bound; ++k)
        for (u64 j = 1; product_sat(a, j, k) <= bound; ++j)
            ++counts[dim(a, j, k)];
    return counts;
}

std::vector<std::uint32_t> divisor_sieve(std::uint32_t n_max) {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::uint32_t a = 1; a <= n_max; ++a)
        for (std::uint64_t m = a; m <= n_max; m += a) ++d[m];
    return d;
}

}  // namespace so5::counting
