#include "so5/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "so5/asymptotics.hpp"
#include "so5/counting.hpp"
#include "so5/curves.hpp"
#include "so5/errors.hpp"
#include "so5/scan_io.hpp"
#include "so5/specfun.hpp"
#include "so5/wittenzeta.hpp"

namespace so5::verify {

namespace {

using counting::Algebra;
using counting::Method;
using u64 = std::uint64_t;

struct Ctx {
    Level level;
    std::vector<CheckResult> results;

    template <class F>
    void check(int criterion, const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        r.criterion = criterion;
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::ostringstream detail;
            r.passed = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }

    template <class F>
    void info(int criterion, const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        r.criterion = criterion;
        r.informative = true;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream detail;
        body(detail);
        r.detail = detail.str();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
};

u64 hyp(Algebra a, u64 x) { return counting::summatory({a, x, Method::Hyperbola}); }
u64 brute(Algebra a, u64 x) { return counting::summatory({a, x, Method::Brute}); }

// ---------------------------------------------------------------------------
// criterion 1: hyperbola vs brute oracle equivalence
// ---------------------------------------------------------------------------
void run_counting_oracle(Ctx& c) {
    c.check(1, "so5 hyperbola == brute, every x <= 20000", [](std::ostringstream& d) {
        auto rho_all = counting::rho_sieve(Algebra::SO5, 20000);
        u64 prefix = 0;
        for (u64 x = 1; x <= 20000; ++x) {
            prefix += rho_all[x];
            if (hyp(Algebra::SO5, x) != prefix) {
                d << "mismatch at x=" << x;
                return false;
            }
        }
        d << "20000 values";
        return true;
    });

    const bool full = c.level == Level::Full;
    c.check(1, "so5 hyperbola == brute, pseudorandom x", [&](std::ostringstream& d) {
        std::mt19937_64 rng(0x505c0117ULL);
        std::uniform_int_distribution<u64> dist(1, full ? 1'000'000'000ULL : 1'000'000ULL);
        int n = full ? 100 : 20;
        for (int i = 0; i < n; ++i) {
            u64 x = dist(rng);
            if (hyp(Algebra::SO5, x) != brute(Algebra::SO5, x)) {
                d << "mismatch at x=" << x;
                return false;
            }
        }
        d << n << " samples up to " << (full ? "1e9" : "1e6");
        return true;
    });

    if (full) {
        c.check(1, "so5 hyperbola == brute at x = 1e12", [](std::ostringstream& d) {
            u64 x = 1'000'000'000'000ULL;
            u64 h = hyp(Algebra::SO5, x), b = brute(Algebra::SO5, x);
            d << "S(1e12) = " << h;
            return h == b;
        });
    }
}

// ---------------------------------------------------------------------------
// criterion 2: desk-scale exact values
// ---------------------------------------------------------------------------
void run_desk_values(Ctx& c) {
    c.check(2, "desk-scale counts and rho values", [](std::ostringstream& d) {
        bool ok = hyp(Algebra::SO5, 1) == 1 && hyp(Algebra::SO5, 5) == 3 &&
                  hyp(Algebra::SO5, 10) == 4 && hyp(Algebra::SO5, 16) == 6 &&
                  counting::rho(Algebra::SO5, 10) == 1 &&
                  counting::rho(Algebra::SU3, 15) == 4;
        d << "S(1,5,10,16) = 1,3,4,6; rho_so5(10) = 1; rho_su3(15) = 4";
        return ok;
    });
}

// ---------------------------------------------------------------------------
// criterion 3: special functions
// ---------------------------------------------------------------------------
void run_specfun(Ctx& c) {
    c.check(3, "zeta/gamma pinned values", [](std::ostringstream& d) {
        double pi = std::numbers::pi;
        double e1 = std::abs(specfun::zeta(2.0).value - pi * pi / 6.0);
        double e2 = std::abs(specfun::zeta(-1.0).value + 1.0 / 12.0);
        double e3 = std::abs(specfun::gamma(0.5).value - std::sqrt(pi));
        d << "|zeta(2)-pi^2/6| = " << e1 << ", |zeta(-1)+1/12| = " << e2
          << ", |Gamma(1/2)-sqrt(pi)| = " << e3;
        return e1 <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-13;
    });

    c.check(3, "gamma reflection on (0,1)", [](std::ostringstream& d) {
        double worst = 0.0;
        for (int i = 1; i <= 99; ++i) {
            double x = i / 100.0;
            double v = specfun::gamma(x).value * specfun::gamma(1.0 - x).value *
                       specfun::sin_pi(x) / std::numbers::pi;
            worst = std::max(worst, std::abs(v - 1.0));
        }
        d << "worst |Gam(x)Gam(1-x)sin(pi x)/pi - 1| = " << worst;
        return worst <= 1e-10;
    });

    c.check(3, "gamma recurrence on [0.1, 40]", [](std::ostringstream& d) {
        double worst = 0.0;
        for (double x = 0.1; x <= 40.0; x += 0.1) {
            double lhs = specfun::gamma(x + 1.0).value;
            double rhs = x * specfun::gamma(x).value;
            worst = std::max(worst, std::abs(lhs - rhs) / lhs);
        }
        d << "worst relative defect = " << worst;
        return worst <= 1e-11;
    });

    c.check(3, "zeta functional-equation self-consistency", [](std::ostringstream& d) {
        double worst = 0.0;
        for (int i = 1; i <= 9; ++i) {
            double s = -0.1 * i;
            double direct = specfun::zeta(s).value;
            double via_fe = std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1.0) *
                            specfun::sin_pi(s / 2.0) * specfun::gamma(1.0 - s).value *
                            specfun::zeta(1.0 - s).value;
            worst = std::max(worst, std::abs(direct - via_fe) / std::abs(direct));
        }
        d << "worst relative gap on s in [-0.9,-0.1] = " << worst;
        return worst <= 1e-10;
    });
}

// ---------------------------------------------------------------------------
// criterion 4: Tauberian identity
// ---------------------------------------------------------------------------
void run_tauberian(Ctx& c) {
    c.check(4, "c_half == 2 * residue at 1/2, closed form reproduced", [](std::ostringstream& d) {
        double ch = asymptotics::coefficients().c_half;
        double res = wittenzeta::residue_at_half();
        double gap = std::abs(ch - 2.0 * res);
        // independent high-precision evaluation of sqrt(3)Gamma(1/4)^2/(4 sqrt(pi))
        double pinned = 3.2113515421128468;
        d << "c_half = " << ch << ", |c_half - 2 Res| = " << gap
          << ", |c_half - pinned| = " << std::abs(ch - pinned);
        return gap <= 1e-12 && std::abs(ch - pinned) <= 1e-12;
    });
}

// ---------------------------------------------------------------------------
// criterion 5: leading-order sandwich on decades
// ---------------------------------------------------------------------------
void run_leading_order(Ctx& c) {
    c.check(5, "|S(x)/sqrt(x) - c_half| <= 12 x^(-1/6) on decades", [&](std::ostringstream& d) {
        double ch = asymptotics::coefficients().c_half;
        int top = c.level == Level::Full ? 12 : 8;
        double worst_margin = 1e9;
        for (int e = 6; e <= top; ++e) {
            u64 x = 1;
            for (int i = 0; i < e; ++i) x *= 10;
            double lhs = std::abs(static_cast<double>(hyp(Algebra::SO5, x)) /
                                      std::sqrt(static_cast<double>(x)) -
                                  ch);
            double bound = 12.0 * std::pow(static_cast<double>(x), -1.0 / 6.0);
            worst_margin = std::min(worst_margin, bound - lhs);
            if (lhs > bound) {
                d << "violated at x = 1e" << e << " (" << lhs << " > " << bound << ")";
                return false;
            }
        }
        d << "decades 1e6..1e" << top << ", smallest margin " << worst_margin;
        return true;
    });
}

// ---------------------------------------------------------------------------
// criterion 6: coefficient bookkeeping via quadrature
// ---------------------------------------------------------------------------
void run_bookkeeping(Ctx& c) {
    double tol = c.level == Level::Full ? 1e-10 : 1e-9;
    c.check(6, "sqrt3 G1(0) + 2^(-1/3) sqrt3 G2(0) - 7/4 == c_half", [&](std::ostringstream& d) {
        double g1 = curves::g_integral(curves::GKind::G1, 0.0, tol).value;
        double g2 = curves::g_integral(curves::GKind::G2, 0.0, tol).value;
        double s3 = std::sqrt(3.0);
        double lhs = s3 * g1 + std::pow(2.0, -1.0 / 3.0) * s3 * g2 - 1.75;
        double ch = asymptotics::coefficients().c_half;
        d << "lhs = " << lhs << ", c_half = " << ch << ", gap = " << std::abs(lhs - ch);
        return std::abs(lhs - ch) <= 1e-7;
    });

    c.info(6, "closing-remark integral identity (informative)", [&](std::ostringstream& d) {
        double g1 = curves::g_integral(curves::GKind::G1, 0.0, tol).value;
        double g2 = curves::g_integral(curves::GKind::G2, 0.0, tol).value;
        double ch = asymptotics::coefficients().c_half;
        double lhs = g1 + std::pow(2.0, -1.0 / 3.0) * g2;
        double printed_rhs = std::sqrt(3.0) / 4.0 + ch;
        double forced_rhs = (1.75 + ch) / std::sqrt(3.0);
        d << "integral sum = " << lhs << "; printed rhs sqrt3/4 + C1 = " << printed_rhs
          << " (gap " << lhs - printed_rhs << "); bookkeeping-forced (7/4 + C1)/sqrt3 = "
          << forced_rhs << " (gap " << lhs - forced_rhs << ")";
    });

    c.info(0, "boundary-limit constants (informative)", [](std::ostringstream& d) {
        // f1(1,x)/x^(1/3) and the fluctuation density, against both printed
        // candidates; the direct limits feed k_component
        double x = 1e12;
        double f1_over = (curves::t1(1.0, x) + 1.0) / std::cbrt(x);
        double t = 2.0;
        double dens = std::pow(t, 7.0 / 3.0) *
                      curves::gprime_sum(curves::Side::T1side, t, x) / std::cbrt(x);
        double c6 = std::cbrt(6.0);
        d << "f1(1)/x^(1/3) -> " << f1_over << " (6^(1/3) = " << c6
          << ", printed alternative 2*6^(1/3) = " << 2.0 * c6 << "); "
          << "t^(7/3)(g1'+g2')/x^(1/3) -> " << dens << " (-(4/3)6^(1/3) = "
          << -(4.0 / 3.0) * c6 << ", printed alternative " << -(8.0 / 3.0) * c6 << ")";
    });
}

// ---------------------------------------------------------------------------
// criterion 7: second-coefficient adjudication
// ---------------------------------------------------------------------------
void run_adjudication(Ctx& c) {
    const bool full = c.level == Level::Full;
    c.check(7, "fitted E2 stabilizes and bounds the residual", [&](std::ostringstream& d) {
        u64 lo1 = full ? 100'000'000ULL : 1'000'000ULL;
        u64 hi1 = full ? 100'000'000'000ULL : 1'000'000'000ULL;
        u64 lo2 = full ? 1'000'000'000ULL : 10'000'000ULL;
        u64 hi2 = full ? 1'000'000'000'000ULL : 10'000'000'000ULL;
        double ea = asymptotics::fit_second_coefficient(lo1, hi1, 16);
        double eb = asymptotics::fit_second_coefficient(lo2, hi2, 16);
        double e2 = asymptotics::fit_second_coefficient(lo1, hi2, 24);
        const auto& k = asymptotics::coefficients();
        double worst = 0.0;
        for (u64 x : asymptotics::geometric_grid(lo1, hi2, 24)) {
            double xd = static_cast<double>(x);
            double resid = static_cast<double>(hyp(Algebra::SO5, x)) -
                           k.c_half * std::sqrt(xd) - e2 * std::cbrt(xd);
            worst = std::max(worst, std::abs(resid) / std::pow(xd, 0.25));
        }
        d << "E2 = " << e2 << ", window gap = " << std::abs(ea - eb)
          << ", max |resid|/x^(1/4) = " << worst << ", |E2 - k_paper| = "
          << std::abs(e2 - k.k_paper) << ", |E2 - k_component| = "
          << std::abs(e2 - k.k_component);
        return std::abs(ea - eb) <= 0.5 && worst <= 10.0;
    });
}

// ---------------------------------------------------------------------------
// criterion 8: Witten zeta identities
// ---------------------------------------------------------------------------
void run_wittenzeta(Ctx& c) {
    const bool full = c.level == Level::Full;
    c.check(8, "split identity matches the box truncation", [&](std::ostringstream& d) {
        double worst = 0.0;
        for (double s : {0.75, 1.0, 2.0}) {
            for (u64 n : {10ULL, 100ULL, 2000ULL}) {
                if (!full && n > 100) continue;
                double a = wittenzeta::zeta_so5_partial(s, n).value;
                double b = wittenzeta::zeta_so5_split(s, n);
                worst = std::max(worst, std::abs(a - b) / std::abs(a));
            }
        }
        d << "worst relative gap = " << worst;
        return worst <= 1e-12;
    });

    c.check(8, "Dirichlet series matches rho on dims <= 1e4", [](std::ostringstream& d) {
        auto rho_all = counting::rho_sieve(Algebra::SO5, 10000);
        double worst = 0.0;
        for (double s : {0.75, 2.0}) {
            double lhs = 0.0;
            for (u64 n = 10000; n >= 1; --n)
                if (rho_all[n])
                    lhs += rho_all[n] * std::pow(static_cast<double>(n), -s);
            // independent route: walk the index pairs directly
            double rhs = 0.0;
            for (u64 k = 1; counting::dim(Algebra::SO5, 1, k) <= 10000; ++k)
                for (u64 j = 1; counting::dim(Algebra::SO5, j, k) <= 10000; ++j)
                    rhs += std::pow(static_cast<double>(counting::dim(Algebra::SO5, j, k)), -s);
            worst = std::max(worst, std::abs(lhs - rhs) / lhs);
        }
        d << "worst relative gap = " << worst;
        return worst <= 1e-12;
    });

    c.check(8, "residue table: exact zero at d = -2, value at d = 1", [](std::ostringstream& d) {
        double r2 = wittenzeta::residue_at_third(-2);
        // assemble the d = 1 residue from gamma/zeta directly
        double assembled = std::pow(3.0, 1.0 / 3.0 - 1.5) * std::numbers::pi *
                           specfun::gamma(1.0 / 6.0).value * specfun::zeta(1.0 / 3.0).value /
                           (std::pow(2.0, -2.0 / 3.0) * std::pow(specfun::gamma(1.0 / 3.0).value, 2) *
                            specfun::gamma(0.5).value) *
                           (1.0 / 3.0) * (1.0 + std::pow(2.0, -1.0 / 3.0));
        double r1 = wittenzeta::residue_at_third(1);
        d << "res(-2) = " << r2 << ", res(1) = " << r1 << ", assembled = " << assembled;
        return r2 == 0.0 && std::abs(r1 - assembled) <= 1e-9 &&
               std::abs(r1 - (-0.35250459460673796)) <= 1e-9;
    });
}

// ---------------------------------------------------------------------------
// criterion 9: calibrations
// ---------------------------------------------------------------------------
void run_calibrations(Ctx& c) {
    const bool full = c.level == Level::Full;
    c.check(9, "divisor sums: hyperbola == brute", [&](std::ostringstream& d) {
        u64 top = full ? 100'000 : 20'000;
        auto dcounts = counting::divisor_sieve(static_cast<std::uint32_t>(top));
        u64 prefix = 0;
        for (u64 x = 1; x <= top; ++x) {
            prefix += dcounts[x];
            if (counting::divisor_summatory(x, Method::Hyperbola) != prefix) {
                d << "mismatch at x=" << x;
                return false;
            }
        }
        // tie in the O(x) multiple-counting route on a sample
        std::mt19937_64 rng(0xd1510aULL);
        std::uniform_int_distribution<u64> dist(1, top);
        for (int i = 0; i < 50; ++i) {
            u64 x = dist(rng);
            if (counting::divisor_summatory(x, Method::Brute) !=
                counting::divisor_summatory(x, Method::Hyperbola)) {
                d << "brute mismatch at x=" << x;
                return false;
            }
        }
        d << "all x <= " << top << " plus 50 brute samples";
        return true;
    });

    c.check(9, "divisor asymptotic |D(x) - x ln x - (2g-1)x|/sqrt(x) <= 4", [&](std::ostringstream& d) {
        double g = std::numbers::egamma;
        double worst = 0.0;
        int top = full ? 8 : 6;
        for (int e = 4; e <= top; ++e) {
            u64 x = 1;
            for (int i = 0; i < e; ++i) x *= 10;
            double xd = static_cast<double>(x);
            double err = std::abs(static_cast<double>(counting::divisor_summatory(x)) -
                                  xd * std::log(xd) - (2.0 * g - 1.0) * xd) /
                         std::sqrt(xd);
            worst = std::max(worst, err);
        }
        d << "worst = " << worst << " on decades 1e4..1e" << top;
        return worst <= 4.0;
    });

    c.check(9, "su3: model coefficient validated by brute oracle", [&](std::ostringstream& d) {
        u64 probe = full ? 100'000'000ULL : 1'000'000ULL;
        if (hyp(Algebra::SU3, probe) != brute(Algebra::SU3, probe)) {
            d << "su3 hyperbola != brute at x=" << probe;
            return false;
        }
        double worst = 0.0;
        double c_su3 = asymptotics::su3_leading_coefficient();
        int top = full ? 10 : 8;
        for (int e = 6; e <= top; ++e) {
            u64 x = 1;
            for (int i = 0; i < e; ++i) x *= 10;
            double xd = static_cast<double>(x);
            double err = std::abs(static_cast<double>(hyp(Algebra::SU3, x)) -
                                  c_su3 * std::pow(xd, 2.0 / 3.0)) /
                         std::sqrt(xd);
            worst = std::max(worst, err);
        }
        d << "c_su3 = " << c_su3 << ", worst |S - c x^(2/3)|/sqrt(x) = " << worst
          << " on decades 1e6..1e" << top;
        return worst <= 8.0;
    });
}

// ---------------------------------------------------------------------------
// criterion 10: determinism of scan output
// ---------------------------------------------------------------------------
void run_determinism(Ctx& c) {
    c.check(10, "scan bytes identical across runs and worker counts", [](std::ostringstream& d) {
        scan_io::ScanConfig cfg;
        cfg.x_lo = 1000;
        cfg.x_hi = 100'000'000;
        cfg.points = 12;
        const char* saved = std::getenv("WITTEN_THREADS");
        std::string saved_value = saved ? saved : "";
        std::vector<std::string> outs;
        for (const char* threads : {"1", "4", "8"}) {
            setenv("WITTEN_THREADS", threads, 1);
            outs.push_back(scan_io::render_scan(cfg));
            outs.push_back(scan_io::render_scan(cfg));  // rerun, same env
        }
        if (saved)
            setenv("WITTEN_THREADS", saved_value.c_str(), 1);
        else
            unsetenv("WITTEN_THREADS");
        for (const auto& o : outs)
            if (o != outs.front()) {
                d << "outputs differ";
                return false;
            }
        d << outs.size() << " renderings, " << outs.front().size() << " bytes each";
        return true;
    });
}

}  // namespace

std::vector<CheckResult> run(Level level) {
    Ctx c{level, {}};
    run_counting_oracle(c);
    run_desk_values(c);
    run_specfun(c);
    run_tauberian(c);
    run_leading_order(c);
    run_bookkeeping(c);
    run_adjudication(c);
    run_wittenzeta(c);
    run_calibrations(c);
    run_determinism(c);
    return std::move(c.results);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.informative && !r.passed) return false;
    return true;
}

}  // namespace so5::verify
