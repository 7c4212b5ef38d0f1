#pragma once

#include <cstdint>

namespace so5::curves {

// Result of a singular-endpoint integral evaluation.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t nodes = 0;
};

enum class GKind { G1, G2 };
enum class Side { T1side, T2side };

// Positive real m solving m*n*(m+n)*(m+2n) = 6x, Cardano closed form.
// Requires the discriminant (6x/n^4)^2 - 4/27 >= 0.
double t1(double n, double x);

// Positive real n solving m*n*(m+n)*(m+2n) = 6x for fixed m.
// Requires (3x/m^4)^2 - 1/432 >= 0.
double t2(double m, double x);

// H(z) = (1+sqrt(z))^(1/3) + (1-sqrt(z))^(1/3) on [0,1]; the second branch
// is evaluated as (1-z)/(1+sqrt(z)) to control cancellation near z = 1.
double h_func(double z);

// Truncated even-order binomial series 2*sum_{m<=M} C(1/3,2m) z^m,
// converging to h_func(z) for z < 1.  M <= 200.
double h_series(double z, int order);

// G1(y) or G2(y): integral over [y, 3^(-1/4)] of t^(-1/3) H(1 - t^8/c)
// with c = 27 (G1) or 432 (G2).  The endpoint singularity at y = 0 is
// removed by the substitution t = u^(3/2); panels are adaptive
// Gauss-Legendre.  error_estimate <= tol on success.
QuadratureResult g_integral(GKind which, double y, double tol);

// Closed-form fluctuation density g1'+g2' (T1side) or g3'+g4' (T2side).
double gprime_sum(Side side, double t, double x);

}  // namespace so5::curves
