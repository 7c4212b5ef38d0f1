#pragma once

#include <vector>

namespace so5::specfun {

// A computed real number with a conservative absolute error bound.
// Both fields are always finite; operations that cannot produce a finite
// value throw instead of returning one.
struct RealValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

// Gamma function for real x, |x| <= 170.  Fixed Lanczos rational
// approximation plus reflection for x < 1/2.
// Throws PoleError at non-positive integers, RangeError on overflow,
// DomainError on non-finite input.
RealValue gamma(double x);

// 1/Gamma(x).  Total: returns exactly 0 at non-positive integers.
RealValue recip_gamma(double x);

// Riemann zeta for real s != 1.  Euler-Maclaurin summation for s > -1,
// functional equation below that.  Throws PoleError at s = 1.
RealValue zeta(double s);

// Generalized binomial coefficient alpha*(alpha-1)*...*(alpha-m+1)/m!.
double gen_binom(double alpha, unsigned m);

// Euler-Maclaurin tail at explicit truncation parameters, exposed so tests
// can compare two truncation orders.  n_cutoff >= 2, 1 <= bernoulli_terms <= 12.
double zeta_euler_maclaurin(double s, int n_cutoff, int bernoulli_terms);

// sin(pi*x) with argument reduction; exactly 0 at integers.
double sin_pi(double x);

// Every named constant used anywhere in the library comes from this one
// table so the modules cannot drift apart.
struct ConstantsTable {
    RealValue pi;
    RealValue euler_gamma;
    RealValue sqrt_pi;
    RealValue sqrt3;
    RealValue cbrt2;
    RealValue cbrt3;
    RealValue cbrt6;
    RealValue gamma_quarter;  // Gamma(1/4)
    RealValue gamma_third;    // Gamma(1/3)
    RealValue gamma_sixth;    // Gamma(1/6)
    RealValue zeta_third;     // zeta(1/3)
    RealValue zeta_half;      // zeta(1/2)
};

const ConstantsTable& constants();

struct NamedConstant {
    const char* name;
    RealValue v;
};

// The same table in serialization order for the `constants` CLI command.
std::vector<NamedConstant> constants_list();

}  // namespace so5::specfun
