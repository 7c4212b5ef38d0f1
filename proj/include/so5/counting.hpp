#pragma once

#include <cstdint>
#include <vector>

namespace so5::counting {

enum class Algebra { SO5, SU3 };
enum class Method { Brute, Hyperbola };
enum class Axis { FixedK, FixedJ };

// Index pair (j,k) with its representation dimension.
struct RepPoint {
    Algebra algebra;
    std::uint64_t j;
    std::uint64_t k;
    std::uint64_t dim;
};

struct CountQuery {
    Algebra algebra = Algebra::SO5;
    std::uint64_t x = 0;
    Method method = Method::Hyperbola;
};

// Largest supported threshold; keeps every intermediate product well under
// 2^126 during boundary searches.
inline constexpr std::uint64_t kMaxX = 100'000'000'000'000ULL;  // 1e14

// Exact dimension: SO5 j*k*(j+k)*(j+2k)/6, SU3 j*k*(j+k)/2.
// The division is always exact.  Throws OverflowError when the integer
// product leaves the guarded 128-bit range.
std::uint64_t dim(Algebra a, std::uint64_t j, std::uint64_t k);

// Number of index pairs of dimension exactly n.
std::uint64_t rho(Algebra a, std::uint64_t n);

// Largest m >= 0 with quartic(m, v) <= 6x (FixedK, v in the k slot) or
// quartic(v, n) <= 6x (FixedJ); SU3 uses the cubic and 2x.
// Exact integer exponential-then-binary search, inclusive comparison.
std::uint64_t boundary_count(Algebra a, Axis axis, std::uint64_t v, std::uint64_t x);

// floor(x^(1/4)) and floor(x^(1/3)), exact.
std::uint64_t integer_root4(std::uint64_t x);
std::uint64_t integer_root3(std::uint64_t x);

// Exact S(x) = #{(j,k) : dim <= x}.
// Brute walks every lattice point (linear scans only, the independent
// oracle); Hyperbola splits at the fourth root (SO5) or cube root (SU3).
// summatory() runs the OpenMP kernels, summatory_serial() is the plain
// reference; both return bit-identical values.
std::uint64_t summatory(const CountQuery& q);
std::uint64_t summatory_serial(const CountQuery& q);

// Classical divisor-sum calibration target, sum_{n<=x} d(n).
std::uint64_t divisor_summatory(std::uint64_t x, Method m = Method::Hyperbola);

// rho(a, n) for every n <= n_max in one sweep over the lattice points.
std::vector<std::uint32_t> rho_sieve(Algebra a, std::uint32_t n_max);

// d(n) for every n <= n_max.
std::vector<std::uint32_t> divisor_sieve(std::uint32_t n_max);

}  // namespace so5::counting
