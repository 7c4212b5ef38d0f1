#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace so5::wittenzeta {

// One pole of the Dirichlet series, location num/den (1/2 or d/3).
// Entries with even d <= 0 carry residue exactly 0 (the reciprocal gamma
// factor vanishes); they are recorded without asserting pole existence.
struct PoleSpec {
    int num = 0;
    int den = 1;
    std::optional<int> d_index;
    double residue = 0.0;

    double location() const { return static_cast<double>(num) / den; }
};

struct PartialSumResult {
    double s = 0.0;
    std::uint64_t n_max = 0;
    double value = 0.0;
    double tail_bound = 0.0;
};

// Truncated double sum 6^s sum_{m,n<=N} (m n (m+n)(m+2n))^{-s} with a
// provable tail bound.  Requires s > 1/2, N <= 1e6.  OpenMP over rows with
// an ordered reduction, so the value is identical for any worker count.
PartialSumResult zeta_so5_partial(double s, std::uint64_t n_max);
double zeta_so5_partial_serial(double s, std::uint64_t n_max);

// Wedge/diagonal rearrangement of the same truncation: the off-diagonal
// pairs grouped as n > m plus their transposes, plus the zeta(4s) diagonal.
// Equals zeta_so5_partial exactly up to rounding.
double zeta_so5_split(double s, std::uint64_t n_max);

// Truncated Mordell-Tornheim double sum over m,n <= N.
// Requires s1+s3 > 1, s2+s3 > 1, s1+s2+s3 > 2.
double mt_partial(double s1, double s2, double s3, std::uint64_t n_max);

// Pole table for d in [d_min, d_max] (d_max <= 1), d not divisible by 3,
// plus s = 1/2 when the range reaches the top of the ladder.
std::vector<PoleSpec> poles(int d_min, int d_max);

// Closed-form residues.
double residue_at_half();
double residue_at_third(int d);

}  // namespace so5::wittenzeta
