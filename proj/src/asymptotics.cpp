#include "so5/asymptotics.hpp"

#include <cmath>

#include "so5/counting.hpp"
#include "so5/errors.hpp"
#include "so5/specfun.hpp"

namespace so5::asymptotics {

namespace {

using u64 = std::uint64_t;

double exact_count(u64 x) {
    return static_cast<double>(
        counting::summatory({counting::Algebra::SO5, x, counting::Method::Hyperbola}));
}

}  // namespace

const AsymptoticCoefficients& coefficients() {
    static const AsymptoticCoefficients coeffs = [] {
        const auto& c = specfun::constants();
        AsymptoticCoefficients a;
        double g = c.gamma_quarter.value;
        a.c_half = c.sqrt3.value * g * g / (4.0 * c.sqrt_pi.value);
        double z13 = c.zeta_third.value;
        double p34 = std::pow(3.0, 4.0 / 3.0);
        double mid = p34 * (std::pow(2.0, -2.0 / 3.0) + 0.5);
        a.k_paper = (z13 + 0.5) * (10.0 * c.cbrt6.value + 2.0 * c.cbrt3.value) - mid +
                    c.cbrt3.value * (2.0 + std::pow(2.0, 4.0 / 3.0));
        a.k_component = (c.cbrt6.value + c.cbrt3.value) * (z13 + 1.5) - mid;
        return a;
    }();
    return coeffs;
}

double predict(std::uint64_t x, SecondTerm which) {
    if (x < 1) throw DomainError("predict: x must be >= 1");
    const auto& a = coefficients();
    double xd = static_cast<double>(x);
    double v = a.c_half * std::sqrt(xd);
    switch (which) {
        case SecondTerm::PaperK: return v + a.k_paper * std::cbrt(xd);
        case SecondTerm::ComponentK: return v + a.k_component * std::cbrt(xd);
        case SecondTerm::MainOnly: return v;
    }
    throw DomainError("predict: bad selector");
}

std::vector<SummatoryRow> residual_scan(const std::vector<std::uint64_t>& xs) {
    const auto& a = coefficients();
    std::vector<SummatoryRow> rows;
    rows.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        u64 x = xs[i];
        if (i > 0 && x < xs[i - 1]) throw DomainError("residual_scan: xs must be ascending");
        SummatoryRow r;
        r.x = x;
        r.s_exact =
            counting::summatory({counting::Algebra::SO5, x, counting::Method::Hyperbola});
        double xd = static_cast<double>(x);
        r.main = a.c_half * std::sqrt(xd);
        double x13 = std::cbrt(xd);
        r.second_paper = a.k_paper * x13;
        r.second_component = a.k_component * x13;
        double s = static_cast<double>(r.s_exact);
        r.resid_paper = s - r.main - r.second_paper;
        r.resid_component = s - r.main - r.second_component;
        r.resid_norm = r.resid_component / std::pow(xd, 0.25);
        rows.push_back(r);
    }
    return rows;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t x_lo, std::uint64_t x_hi, int points) {
    if (x_lo < 1 || x_lo > x_hi) throw DomainError("geometric_grid: bad range");
    if (points < 1) throw DomainError("geometric_grid: points must be >= 1");
    std::vector<u64> xs;
    xs.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        xs.push_back(x_lo);
        return xs;
    }
    double llo = std::log(static_cast<double>(x_lo));
    double lhi = std::log(static_cast<double>(x_hi));
    for (int i = 0; i < points; ++i) {
        double l = llo + (lhi - llo) * i / (points - 1);
        xs.push_back(static_cast<u64>(std::llround(std::exp(l))));
    }
    xs.front() = x_lo;
    xs.back() = x_hi;
    return xs;
}

double fit_second_coefficient_with(std::uint64_t x_lo, std::uint64_t x_hi, int points,
                                   const std::function<double(std::uint64_t)>& count_of) {
    if (points < 8) throw DomainError("fit_second_coefficient: points must be >= 8");
    if (x_lo < 10'000) throw DomainError("fit_second_coefficient: x_lo must be >= 1e4");
    if (x_hi > counting::kMaxX) throw DomainError("fit_second_coefficient: x_hi too large");
    const auto& a = coefficients();
    std::vector<u64> xs = geometric_grid(x_lo, x_hi, points);
    // plain least squares for r(x) = E2 * x^(1/3)
    double num = 0.0, den = 0.0;
    for (u64 x : xs) {
        double xd = static_cast<double>(x);
        double resid = count_of(x) - a.c_half * std::sqrt(xd);
        double w = std::cbrt(xd);
        num += w * resid;
        den += w * w;
    }
    return num / den;
}

double fit_second_coefficient(std::uint64_t x_lo, std::uint64_t x_hi, int points) {
    return fit_second_coefficient_with(x_lo, x_hi, points, exact_count);
}

double su3_leading_coefficient() {
    const auto& c = specfun::constants();
    double g = c.gamma_third.value;
    return std::pow(2.0, 2.0 / 3.0) * c.sqrt3.value * g * g * g / (4.0 * c.pi.value);
}

double su3_model(std::uint64_t x) {
    if (x < 1) throw DomainError("su3_model: x must be >= 1");
    const auto& c = specfun::constants();
    double xd = static_cast<double>(x);
    return su3_leading_coefficient() * std::pow(xd, 2.0 / 3.0) +
           std::pow(2.0, 1.5) * c.zeta_half.value * std::sqrt(xd);
}

}  // namespace so5::asymptotics
