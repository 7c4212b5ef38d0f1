#include "so5/wittenzeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "so5/errors.hpp"
#include "so5/parallel.hpp"
#include "so5/specfun.hpp"

namespace so5::wittenzeta {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxN = 1'000'000;

void check_partial_args(double s, u64 n_max, const char* where) {
    if (!(s > 0.5)) throw DomainError(std::string(where) + ": requires s > 1/2");
    if (n_max < 1 || n_max > kMaxN)
        throw DomainError(std::string(where) + ": N outside [1, 1e6]");
}

// log(1), ..., log(3N); the summand is evaluated in log space so large N
// and fractional s cannot overflow.
std::vector<double> log_table(u64 n_max) {
    std::vector<double> logs(3 * n_max + 1, 0.0);
    for (u64 i = 1; i < logs.size(); ++i) logs[i] = std::log(static_cast<double>(i));
    return logs;
}

inline double term(const std::vector<double>& logs, double s, double log6, u64 m, u64 n) {
    return std::exp(s * (log6 - logs[m] - logs[n] - logs[m + n] - logs[m + 2 * n]));
}

// Row sums accumulated in ascending m order regardless of worker count.
double partial_value(double s, u64 n_max, bool parallel) {
    const std::vector<double> logs = log_table(n_max);
    const double log6 = std::log(6.0);
    std::vector<double> row(n_max + 1, 0.0);
    if (parallel) {
        const int nw = worker_count();
#pragma omp parallel for schedule(static) num_threads(nw)
        for (u64 m = 1; m <= n_max; ++m) {
            double acc = 0.0;
            for (u64 n = 1; n <= n_max; ++n) acc += term(logs, s, log6, m, n);
            row[m] = acc;
        }
    } else {
        for (u64 m = 1; m <= n_max; ++m) {
            double acc = 0.0;
            for (u64 n = 1; n <= n_max; ++n) acc += term(logs, s, log6, m, n);
            row[m] = acc;
        }
    }
    double total = 0.0;
    for (u64 m = 1; m <= n_max; ++m) total += row[m];
    return total;
}

// Conservative bound for the discarded region {max(m,n) > N}: every term
// there is at most 6^s * min^-s * max^-3s, and each max value M pairs with
// at most two orientations of every min <= M.
double tail_bound(double s, u64 n_max) {
    double nn = static_cast<double>(n_max);
    double c = 2.0 * std::pow(6.0, s);
    if (s < 1.0) {
        // sum_{mu<=M} mu^-s <= (2-s)/(1-s) M^(1-s), then sum over M > N
        return c * (2.0 - s) / (1.0 - s) * std::pow(nn, 2.0 - 4.0 * s) /
               (4.0 * s - 2.0);
    }
    if (s == 1.0) {
        // inner harmonic sum <= 1 + ln M
        return c * ((1.0 + std::log(nn)) / (2.0 * nn * nn) + 1.0 / (4.0 * nn * nn));
    }
    // inner sum <= s/(s-1)
    return c * s / (s - 1.0) * std::pow(nn, 1.0 - 3.0 * s) / (3.0 * s - 1.0);
}

}  // namespace

PartialSumResult zeta_so5_partial(double s, std::uint64_t n_max) {
    check_partial_args(s, n_max, "zeta_so5_partial");
    return {s, n_max, partial_value(s, n_max, true), tail_bound(s, n_max)};
}

double zeta_so5_partial_serial(double s, std::uint64_t n_max) {
    check_partial_args(s, n_max, "zeta_so5_partial");
    return partial_value(s, n_max, false);
}

double zeta_so5_split(double s, std::uint64_t n_max) {
    check_partial_args(s, n_max, "zeta_so5_split");
    const std::vector<double> logs = log_table(n_max);
    const double log6 = std::log(6.0);
    // off-diagonal wedge n > m, both orientations; the quartic is not
    // symmetric under m <-> n, so each pair contributes its own two terms
    std::vector<double> row(n_max + 1, 0.0);
    const int nw = worker_count();
#pragma omp parallel for schedule(static) num_threads(nw)
    for (u64 n = 2; n <= n_max; ++n) {
        double acc = 0.0;
        for (u64 m = 1; m < n; ++m)
            acc += term(logs, s, log6, m, n) + term(logs, s, log6, n, m);
        row[n] = acc;
    }
    double total = 0.0;
    for (u64 n = 2; n <= n_max; ++n) total += row[n];
    // diagonal m = n collapses to the zeta(4s) truncation
    double diag = 0.0;
    for (u64 n = n_max; n >= 1; --n) diag += std::pow(static_cast<double>(n), -4.0 * s);
    return total + diag;
}

double mt_partial(double s1, double s2, double s3, std::uint64_t n_max) {
    if (!(s1 + s3 > 1.0) || !(s2 + s3 > 1.0) || !(s1 + s2 + s3 > 2.0))
        throw DomainError("mt_partial: outside the convergence region");
    if (n_max < 1 || n_max > kMaxN) throw DomainError("mt_partial: N outside [1, 1e6]");
    const std::vector<double> logs = log_table(n_max);
    std::vector<double> row(n_max + 1, 0.0);
    const int nw = worker_count();
#pragma omp parallel for schedule(static) num_threads(nw)
    for (u64 m = 1; m <= n_max; ++m) {
        double acc = 0.0;
        for (u64 n = 1; n <= n_max; ++n)
            acc += std::exp(-s1 * logs[m] - s2 * logs[n] - s3 * logs[m + n]);
        row[m] = acc;
    }
    double total = 0.0;
    for (u64 m = 1; m <= n_max; ++m) total += row[m];
    return total;
}

double residue_at_half() {
    const auto& c = specfun::constants();
    double g = c.gamma_quarter.value;
    return c.sqrt3.value * g * g / (8.0 * c.sqrt_pi.value);
}

double residue_at_third(int d) {
    if (d > 1) throw DomainError("residue_at_third: d must be <= 1");
    if (d <= 0 && d % 3 == 0)
        throw DomainError("residue_at_third: d in -3N0 is excluded");
    double dd = static_cast<double>(d);
    // every denominator gamma goes through recip_gamma so the even-d zero
    // is exact rather than an overflow artifact
    double num = std::pow(3.0, dd / 3.0 - 1.5) * std::numbers::pi *
                 specfun::gamma(dd / 6.0).value * specfun::zeta(4.0 * dd / 3.0 - 1.0).value;
    double fact = 1.0;
    for (int i = 2; i <= 1 - d; ++i) fact *= static_cast<double>(i);
    double rg3 = specfun::recip_gamma(dd / 3.0).value;
    double rg2 = specfun::recip_gamma(dd / 2.0).value;
    double den_inv = std::pow(2.0, 1.0 - dd / 3.0) / fact * rg3 * rg3 * rg2;
    return num * den_inv * (dd / 3.0) * (1.0 + std::pow(2.0, 2.0 * dd / 3.0 - 1.0));
}

std::vector<PoleSpec> poles(int d_min, int d_max) {
    if (d_min > d_max) throw DomainError("poles: d_min > d_max");
    if (d_max > 1) throw DomainError("poles: d_max must be <= 1");
    std::vector<PoleSpec> out;
    for (int d = d_min; d <= d_max; ++d) {
        if (d % 3 == 0) continue;  // d/3 integral: no pole candidate
        out.push_back({d, 3, d, residue_at_third(d)});
    }
    if (d_max == 1) out.push_back({1, 2, std::nullopt, residue_at_half()});
    std::sort(out.begin(), out.end(),
              [](const PoleSpec& a, const PoleSpec& b) { return a.location() < b.location(); });
    return out;
}

}  // namespace so5::wittenzeta
