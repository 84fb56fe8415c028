#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mixmom/bessel.hpp"
#include "mixmom/gamma.hpp"
#include "mixmom/hyp.hpp"
#include "mixmom/quad.hpp"
#include "mixmom/zeta.hpp"

using namespace mixmom;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGammaE = 0.57721566490153286061;

// Independent zeta oracle: alternating series with Cohen-Rodriguez
// Villegas-Zagier acceleration, zeta(s) = eta(s)/(1-2^{1-s}).
cplx zeta_cvz(cplx s, int n = 64) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d;
    cplx sum(0.0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(double(k + 1)));
        b *= 2.0 * (k + n) * (k - n) / ((2.0 * k + 1.0) * (k + 1.0));
    }
    return sum / d / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// Independent midpoint-refinement oracle with Richardson in sqrt(h) for
// inverse-sqrt endpoint behaviour.
double midpoint_oracle(const std::function<double(double)>& f, double a, double b) {
    auto mid = [&](long n) {
        double h = (b - a) / n;
        double s = 0.0;
        for (long i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
        return s * h;
    };
    // endpoint singularity x^{-1/2}: error ~ C h^{1/2}; two-level elimination
    double m1 = mid(1 << 18), m2 = mid(1 << 20);
    double q = std::sqrt(0.25);  // h ratio 1/4 -> error ratio 1/2
    return (m2 - q * m1) / (1.0 - q);
}

}  // namespace

TEST_CASE("complex_gamma classical values") {
    CHECK(std::abs(complex_gamma(cplx(1.0)).value - cplx(1.0)) < 1e-13);
    CHECK(std::abs(complex_gamma(cplx(0.5)).value - std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(complex_gamma(cplx(-0.5)).value - (-2.0 * std::sqrt(kPi))) < 1e-12);
    CHECK_THROWS_AS(complex_gamma(cplx(0.0)), domain_error);
    CHECK_THROWS_AS(complex_gamma(cplx(-3.0)), domain_error);
}

TEST_CASE("gamma recurrence property") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-50.0, 50.0);
    int checked = 0;
    while (checked < 120) {
        cplx z(U(rng), U(rng));
        if (std::abs(z) > 50.0) continue;
        if (z.imag() == 0.0 && z.real() <= 0.5 &&
            std::abs(z.real() - std::round(z.real())) < 1e-3)
            continue;
        if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5) continue;  // keep clear of the pole line
        NumValue g = complex_gamma(z);
        NumValue g1 = complex_gamma(z + cplx(1.0));
        double resid = std::abs(g1.value - z * g.value);
        double budget = 10.0 * (g1.abs_err + std::abs(z) * g.abs_err);
        CHECK(resid <= budget + 1e-300);
        ++checked;
    }
}

TEST_CASE("digamma values") {
    CHECK(std::abs(digamma(1.0).value.real() + kGammaE) < 1e-12);
    CHECK(std::abs(digamma(2.0).value.real() - (1.0 - kGammaE)) < 1e-12);
    // psi(1/4) - psi(3/4) = -pi
    double d = digamma(0.25).value.real() - digamma(0.75).value.real();
    CHECK(std::abs(d + kPi) < 1e-12);
    CHECK_THROWS_AS(digamma(0.0), domain_error);
}

TEST_CASE("riemann zeta: trivial and derived values") {
    CHECK(std::abs(riemann_zeta(cplx(0.0)).value - cplx(-0.5)) < 1e-12);
    CHECK(std::abs(riemann_zeta(cplx(2.0)).value - cplx(kPi * kPi / 6.0)) < 1e-12);
    // derived: independent CVZ-accelerated oracle at s = 3/2
    cplx oracle = zeta_cvz(cplx(1.5));
    NumValue z = riemann_zeta(cplx(1.5));
    CHECK(std::abs(z.value - oracle) < 1e-12);
    CHECK_THROWS_AS(riemann_zeta(cplx(1.0)), domain_error);
}

TEST_CASE("zeta functional equation residual on a grid") {
    for (double re = -2.0; re <= 3.01; re += 1.25) {
        for (double im = 0.0; im <= 50.01; im += 12.5) {
            cplx s(re, im);
            if (std::abs(s - cplx(1.0)) < 0.3 || std::abs(s) < 0.2) continue;
            cplx lhs = riemann_zeta(s).value;
            cplx rhs = std::exp(s * std::log(2.0)) *
                       std::exp((s - 1.0) * std::log(kPi)) * std::sin(kPi * s / 2.0) *
                       std::exp(log_gamma(1.0 - s)) * riemann_zeta(1.0 - s).value;
            CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("zeta derivative via CVZ finite difference oracle") {
    // central difference of the independent oracle
    double h = 1e-5;
    cplx d_oracle = (zeta_cvz(cplx(2.0 + h)) - zeta_cvz(cplx(2.0 - h))) / (2.0 * h);
    NumValue d = riemann_zeta(cplx(2.0), 1);
    CHECK(std::abs(d.value - d_oracle) < 1e-8);
}

TEST_CASE("hurwitz zeta") {
    // reduction to zeta
    CHECK(std::abs(hurwitz_zeta(cplx(2.5), 1.0).value - riemann_zeta(cplx(2.5)).value) <
          1e-12);
    // zeta(2,1/2) = pi^2/2
    CHECK(std::abs(hurwitz_zeta(cplx(2.0), 0.5).value - cplx(kPi * kPi / 2.0)) < 1e-12);
    // zeta(0,a) = 1/2 - a
    for (double a : {0.2, 0.5, 0.9})
        CHECK(std::abs(hurwitz_zeta(cplx(0.0), a).value - cplx(0.5 - a)) < 1e-12);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(1.0), 0.5), domain_error);
}

TEST_CASE("gauss_2f1 basic values") {
    CHECK(std::abs(gauss_2f1(cplx(0.7), cplx(-1.3), cplx(2.1), 0.0).value - cplx(1.0)) <
          1e-14);
    // (1,1;2;x) = -log(1-x)/x at x = 1/2
    NumValue v = gauss_2f1(cplx(1.0), cplx(1.0), cplx(2.0), 0.5);
    CHECK(std::abs(v.value - cplx(2.0 * std::log(2.0))) < 1e-12);
    // Gauss summation at x=1 against the Gamma closed form computed separately
    NumValue g = gauss_2f1(cplx(0.3), cplx(0.4), cplx(2.0), 1.0);
    cplx closed = std::exp(log_gamma(cplx(2.0)) + log_gamma(cplx(1.3)) -
                           log_gamma(cplx(1.7)) - log_gamma(cplx(1.6)));
    CHECK(std::abs(g.value - closed) < 1e-12);
    // near-one connection path agrees with the direct series at x = 0.85
    NumValue a = gauss_2f1(cplx(0.5), cplx(0.25), cplx(1.75), 0.85);
    // direct series reference (same function, forced below the switch): use x
    // slightly under the threshold and Richardson is overkill; instead compare
    // against the log-free connection at a nearby regular point
    NumValue b = gauss_2f1(cplx(0.5), cplx(0.25), cplx(1.75), 0.8499999999);
    CHECK(std::abs(a.value - b.value) < 1e-8);
}

TEST_CASE("gauss_2f1 log case c = a+b") {
    // 2F1(1,1;2;x) = -log(1-x)/x has c-a-b = 0; exercise x near 1
    for (double x : {0.8, 0.95, 0.995}) {
        NumValue v = gauss_2f1(cplx(1.0), cplx(1.0), cplx(2.0), x);
        cplx exact = -std::log(1.0 - x) / x;
        CHECK(std::abs(v.value - exact) < 1e-11 * std::abs(exact));
    }
}

TEST_CASE("gauss_2f1 contiguous relation residuals") {
    // c(1-x) F(a,b;c;x) - c F(a-1,b;c;x) + (c-b) x F(a,b;c+1;x) = 0
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> U(0.1, 0.9);
    for (int i = 0; i < 40; ++i) {
        cplx a(U(rng) * 4.0, U(rng) - 0.5), b(U(rng) * 3.0, 0.0), c(2.0 + U(rng), 0.0);
        double x = U(rng);
        cplx F = gauss_2f1(a, b, c, x).value;
        cplx Fm = gauss_2f1(a - cplx(1.0), b, c, x).value;
        cplx Fc = gauss_2f1(a, b, c + cplx(1.0), x).value;
        cplx resid = c * (1.0 - x) * F - c * Fm + (c - b) * x * Fc;
        double scale = std::abs(c * F) + std::abs(c * Fm) + std::abs((c - b) * x * Fc);
        CHECK(std::abs(resid) <= 1e-9 * (1.0 + scale));
    }
}

TEST_CASE("hyp_3f2_unit basic values") {
    CHECK(std::abs(hyp_3f2_unit(cplx(0.0), cplx(1.3), cplx(2.2), cplx(1.1), cplx(0.9)).value -
                   cplx(1.0)) < 1e-14);
    // 3F2(1,1,1;2,2;1) = pi^2/6
    NumValue v = hyp_3f2_unit(cplx(1.0), cplx(1.0), cplx(1.0), cplx(2.0), cplx(2.0));
    CHECK(std::abs(v.value - cplx(kPi * kPi / 6.0)) < 1e-9);
    CHECK(v.abs_err < 1e-8);
    CHECK_THROWS_AS(
        hyp_3f2_unit(cplx(2.0), cplx(2.0), cplx(2.0), cplx(1.0), cplx(1.0)),
        domain_error);
}

TEST_CASE("bessel classical and seam") {
    CHECK(std::abs(bessel(BesselKind::J0, 0.0).value - cplx(1.0)) == 0.0);
    // K0(1) against the tanh-sinh oracle of int_0^inf exp(-cosh t) dt
    NumValue oracle =
        quad_integrate([](double t) { return cplx(std::exp(-std::cosh(t))); }, 0.0,
                       std::numeric_limits<double>::infinity(), QuadMode::tanh_sinh);
    NumValue k0 = bessel(BesselKind::K0, 1.0);
    CHECK(std::abs(k0.value - oracle.value) < 1e-11 + oracle.abs_err);
    // seam consistency for every kind
    for (auto kind : {BesselKind::J0, BesselKind::Y0, BesselKind::J1, BesselKind::Y1,
                      BesselKind::K0, BesselKind::K1}) {
        double xs = bessel_crossover(kind);
        NumValue s = bessel_series_branch(kind, xs);
        NumValue a = bessel_asymptotic_branch(kind, xs);
        CHECK(std::abs(s.value - a.value) <= 1e-12);
    }
    CHECK_THROWS_AS(bessel(BesselKind::Y0, 0.0), domain_error);
    CHECK_THROWS_AS(bessel(BesselKind::K0, -1.0), domain_error);
}

TEST_CASE("bessel wronskian") {
    // J0'(x) Y0(x) - J0(x) Y0'(x) = -2/(pi x), with J0' = -J1, Y0' = -Y1
    for (double x : {0.3, 1.0, 3.7, 9.2, 14.9, 15.1, 25.0, 80.0}) {
        double j0 = bessel(BesselKind::J0, x).value.real();
        double j1 = bessel(BesselKind::J1, x).value.real();
        double y0 = bessel(BesselKind::Y0, x).value.real();
        double y1 = bessel(BesselKind::Y1, x).value.real();
        double w = -j1 * y0 + j0 * y1;
        CHECK(std::abs(w + 2.0 / (kPi * x)) < 1e-10 * (1.0 + std::abs(2.0 / (kPi * x))));
    }
}

TEST_CASE("airy values, decay, ODE") {
    // classical closed form at 0
    NumValue a0 = airy_ai(0.0);
    CHECK(std::abs(a0.value - cplx(0.35502805388781723926)) < 1e-13);
    // coalescence: argument -gamma^2 k^{2/3} with gamma = 0
    CHECK(std::abs(airy_ai(-0.0).value - a0.value) == 0.0);
    // decay: below 1e-15 for x >= 20
    for (double x : {20.0, 50.0, 200.0}) CHECK(std::abs(airy_ai(x).value) < 1e-15);
    // ODE residual Ai'' = x Ai by 5-point stencil, both branches
    for (double x : {-12.0, -5.0, -1.0, 0.7, 3.0, 6.0, 12.0}) {
        double h = 1e-2;
        auto A = [&](double t) { return airy_ai(t).value.real(); };
        double dd2 = (-A(x - 2 * h) + 16 * A(x - h) - 30 * A(x) + 16 * A(x + h) -
                      A(x + 2 * h)) /
                     (12 * h * h);
        CHECK(std::abs(dd2 - x * A(x)) < 2e-7 * (1.0 + std::abs(x * A(x))));
    }
    // seam
    double d = std::abs(airy_ai(7.999999).value - airy_ai(8.000001).value);
    CHECK(d < 1e-12);
}

TEST_CASE("quad_integrate basics") {
    // algebraic endpoint singularity
    NumValue v = quad_integrate([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0,
                                1.0, QuadMode::tanh_sinh);
    CHECK(std::abs(v.value - cplx(2.0)) < 1e-11);
    // mapped half line
    NumValue e = quad_integrate([](double x) { return cplx(std::exp(-x)); }, 0.0,
                                std::numeric_limits<double>::infinity(),
                                QuadMode::tanh_sinh);
    CHECK(std::abs(e.value - cplx(1.0)) < 1e-11);
    // the (sin 2x)^{-1/2} weight against the midpoint oracle and the Beta form
    NumValue w = quad_integrate(
        [](double x) { return cplx(1.0 / std::sqrt(std::sin(2.0 * x))); }, 0.0,
        kPi / 2.0, QuadMode::tanh_sinh);
    double oracle = midpoint_oracle(
        [](double x) { return 1.0 / std::sqrt(std::sin(2.0 * x)); }, 0.0, kPi / 2.0);
    CHECK(std::abs(w.value.real() - oracle) < 5e-7);
    cplx beta = std::exp(2.0 * log_gamma(cplx(0.25)) - 0.5 * std::log(8.0 * kPi));
    CHECK(std::abs(w.value - beta) < 1e-10);
    // adaptive GK on a smooth oscillator
    NumValue g = quad_integrate([](double x) { return cplx(std::cos(10.0 * x)); }, 0.0,
                                2.0, QuadMode::adaptive_gk);
    CHECK(std::abs(g.value - cplx(std::sin(20.0) / 10.0)) < 1e-10);
}

TEST_CASE("contour_integral_vertical: Cahen-Mellin and zero") {
    // (1/2 pi i) int Gamma(w) x^{-w} dw = e^{-x} at x = 1
    auto f = [](cplx w) { return std::exp(log_gamma(w)); };
    NumValue v = contour_integral_vertical(f, 0.5, 60.0, 1.5);
    CHECK(std::abs(v.value - cplx(std::exp(-1.0))) < 1e-10);
    auto z = [](cplx) { return cplx(0.0); };
    NumValue zv = contour_integral_vertical(z, 0.5, 30.0, 1.5);
    CHECK(std::abs(zv.value) < 1e-15);
}

TEST_CASE("error honesty against deeper reruns") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    EvalConfig hi;
    hi.target_rel_err = 1e-12;
    hi.max_terms = 4000000;
    hi.quad_levels = 14;

    int n_ok = 0, n_tot = 0;
    auto check = [&](const NumValue& lo, const NumValue& hiv) {
        ++n_tot;
        if (std::abs(lo.value - hiv.value) <= 3.0 * lo.abs_err + 1e-15) ++n_ok;
    };
    for (int i = 0; i < 100; ++i) {
        cplx z(0.3 + 6.0 * U(rng), 4.0 * U(rng) - 2.0);
        check(complex_gamma(z), complex_gamma(z, hi));
        cplx s(0.2 + 2.5 * U(rng), 30.0 * U(rng));
        if (std::abs(s - cplx(1.0)) > 0.2) check(riemann_zeta(s), riemann_zeta(s, 0, hi));
        double a = 0.05 + 0.95 * U(rng);
        check(hurwitz_zeta(s + cplx(1.6), a), hurwitz_zeta(s + cplx(1.6), a, hi));
        cplx aa(2.0 * U(rng), U(rng) - 0.5), bb(1.5 * U(rng), 0.0), cc(1.2 + U(rng), 0.0);
        double x = 0.95 * U(rng);
        check(gauss_2f1(aa, bb, cc, x), gauss_2f1(aa, bb, cc, x, hi));
        double bx = 0.1 + 30.0 * U(rng);
        check(bessel(BesselKind::J0, bx), bessel(BesselKind::J0, bx, hi));
        check(bessel(BesselKind::K1, bx), bessel(BesselKind::K1, bx, hi));
        double ax = 20.0 * U(rng) - 10.0;
        check(airy_ai(ax), airy_ai(ax, hi));
    }
    // allow a tiny slack for heuristic error models, but expect near-total honesty
    CHECK(n_ok >= n_tot - n_tot / 100);
}
