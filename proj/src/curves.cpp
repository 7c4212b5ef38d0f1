#include "so5/curves.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "so5/errors.hpp"
#include "so5/specfun.hpp"

namespace so5::curves {

namespace {

// Both cube-root branches of the depressed cubic y^3 + p y = q/..., written
// as (A + S)^(1/3) and (A - S)^(1/3) with S = sqrt(A^2 - c).  The smaller
// branch is evaluated as c/(A+S); A^2 >> c throughout the counting range
// and the direct difference cancels.
struct CardanoBranches {
    double big;
    double small;
};

CardanoBranches branches(double a, double c, const char* where) {
    double disc = a * a - c;
    if (disc < 0.0) throw DomainError(std::string(where) + ": negative discriminant");
    double s = std::sqrt(disc);
    double apb = a + s;
    return {std::cbrt(apb), std::cbrt(c / apb)};
}

}  // namespace

double t1(double n, double x) {
    if (!(n >= 1.0) || !(x >= 1.0)) throw DomainError("t1: need n >= 1, x >= 1");
    double n4 = n * n * n * n;
    auto [big, small] = branches(3.0 * x / n4, 1.0 / 27.0, "t1");
    return n * (big + small - 1.0);
}

double t2(double m, double x) {
    if (!(m >= 1.0) || !(x >= 1.0)) throw DomainError("t2: need m >= 1, x >= 1");
    double m4 = m * m * m * m;
    auto [big, small] = branches(1.5 * x / m4, 1.0 / 1728.0, "t2");
    return m * (big + small - 0.5);
}

double h_func(double z) {
    if (!(z >= 0.0) || !(z <= 1.0)) throw DomainError("h_func: z outside [0,1]");
    double sz = std::sqrt(z);
    return std::cbrt(1.0 + sz) + std::cbrt((1.0 - z) / (1.0 + sz));
}

double h_series(double z, int order) {
    if (order < 1 || order > 200) throw DomainError("h_series: order outside [1,200]");
    if (!(z >= 0.0) || !(z < 1.0)) throw DomainError("h_series: z outside [0,1)");
    double total = 0.0;
    double zp = 1.0;
    for (int m = 0; m <= order; ++m) {
        total += specfun::gen_binom(1.0 / 3.0, 2 * static_cast<unsigned>(m)) * zp;
        zp *= z;
    }
    return 2.0 * total;
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on the Legendre recurrence.
struct Gauss15 {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};

    Gauss15() {
        constexpr int n = 15;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double w = 2.0 / ((1.0 - x * x) * dp * dp);
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = w;
            weight[n - 1 - i] = w;
        }
    }
};

const Gauss15& gauss15() {
    static const Gauss15 g;
    return g;
}

template <class F>
double gl15(F&& f, double a, double b, std::int64_t& nodes) {
    const Gauss15& g = gauss15();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double total = 0.0;
    for (int i = 0; i < 15; ++i) total += g.weight[i] * f(mid + half * g.node[i]);
    nodes += 15;
    return half * total;
}

struct Segment {
    double a, b, whole, tol;
};

// Adaptive bisection: a panel is accepted when refining it once moves the
// value by no more than its share of the total tolerance, so the summed
// error estimate stays below tol.
template <class F>
QuadratureResult adaptive_gl(F&& f, double a, double b, double tol) {
    constexpr std::int64_t kNodeCap = 4'000'000;
    QuadratureResult out;
    if (!(b > a)) return out;
    std::vector<Segment> stack;
    stack.push_back({a, b, gl15(f, a, b, out.nodes), tol});
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        double m = 0.5 * (s.a + s.b);
        double left = gl15(f, s.a, m, out.nodes);
        double right = gl15(f, m, s.b, out.nodes);
        double diff = std::abs(left + right - s.whole);
        if (diff <= s.tol || (s.b - s.a) < 1e-14) {
            out.value += left + right;
            out.error_estimate += diff;
        } else {
            if (out.nodes > kNodeCap)
                throw ToleranceError("g_integral: node cap reached before tolerance");
            stack.push_back({s.a, m, left, 0.5 * s.tol});
            stack.push_back({m, s.b, right, 0.5 * s.tol});
        }
    }
    return out;
}

}  // namespace

QuadratureResult g_integral(GKind which, double y, double tol) {
    if (tol < 1e-12) throw DomainError("g_integral: tol below 1e-12");
    const double upper_t = std::pow(3.0, -0.25);
    if (!(y >= 0.0) || y > upper_t * (1.0 + 1e-12))
        throw DomainError("g_integral: y outside [0, 3^(-1/4)]");
    const double c = which == GKind::G1 ? 27.0 : 432.0;
    // t = u^(3/2) turns t^(-1/3) H(1-t^8/c) dt into (3/2) H(1-u^12/c) du
    double u_lo = std::pow(y, 2.0 / 3.0);
    double u_hi = std::pow(3.0, -1.0 / 6.0);
    auto f = [c](double u) {
        double u3 = u * u * u;
        double u12 = u3 * u3 * u3 * u3;
        double z = 1.0 - u12 / c;
        if (z < 0.0) z = 0.0;
        if (z > 1.0) z = 1.0;
        return 1.5 * h_func(z);
    };
    return adaptive_gl(f, u_lo, u_hi, tol);
}

double gprime_sum(Side side, double t, double x) {
    if (!(t > 0.0) || !(x > 0.0)) throw DomainError("gprime_sum: need t, x > 0");
    double t4 = t * t * t * t;
    double a = 3.0 * x / t4;
    double c = side == Side::T1side ? 1.0 / 27.0 : 1.0 / 432.0;
    double disc = a * a - c;
    if (disc <= 0.0) throw DomainError("gprime_sum: non-positive discriminant");
    double s = std::sqrt(disc);
    double apb = a + s;
    double diff = std::cbrt(apb) - std::cbrt(c / apb);
    double prefactor = side == Side::T1side ? 4.0 : std::pow(2.0, 5.0 / 3.0);
    return -prefactor * x / (t4 * t) * diff / s;
}

}  // namespace so5::curves
