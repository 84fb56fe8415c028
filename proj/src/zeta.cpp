#include "mixmom/zeta.hpp"

#include <cmath>

#include "mixmom/dd.hpp"
#include "mixmom/gamma.hpp"

namespace mixmom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2j} for j = 1..13
const double kB2[] = {
    1.0 / 6,       -1.0 / 30,      1.0 / 42,        -1.0 / 30,     5.0 / 66,
    -691.0 / 2730, 7.0 / 6,        -3617.0 / 510,   43867.0 / 798, -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6};

struct EMResult {
    cplx val;
    cplx dval;  // d/ds
    double err;
};

// Euler-Maclaurin for sum_{n>=0} (n+a)^{-s}, a > 0, s != 1.
// Returns value and s-derivative; the truncation error of the asymptotic
// piece is folded into err.
EMResult em_hurwitz(cplx s, double a, double target_rel, long max_terms) {
    double t = std::abs(s.imag());
    long N = (long)std::ceil(std::max(24.0, 0.8 * t + 8.0));
    if (a > 1.0) N = std::max<long>(2, N - (long)std::min<double>(a, N - 2));
    if (N > max_terms) N = max_terms;

    kahan_csum sum, dsum;
    for (long n = 0; n < N; ++n) {
        double x = n + a;
        double lx = std::log(x);
        cplx p = std::exp(-s * lx);
        sum.add(p);
        dsum.add(-lx * p);
    }
    double X = N + a;
    double lX = std::log(X);
    cplx Xp = std::exp((1.0 - s) * lX);  // X^{1-s}
    cplx sm1 = s - 1.0;
    cplx val = sum.value() + Xp / sm1 + 0.5 * Xp / X;
    cplx dval = dsum.value() + (-lX * Xp / sm1 - Xp / (sm1 * sm1)) - 0.5 * lX * Xp / X;

    // correction terms: B_{2j}/(2j)! * (s)_{2j-1} * X^{-s-2j+1}
    cplx poch = s;          // (s)_1
    cplx dpoch = cplx(1.0);  // d/ds poch
    double fact = 2.0;       // (2j)! running
    cplx Xm = std::exp(-s * lX) / X;  // X^{-s-1}, the j=1 power
    double prev_mag = 1e300;
    double err = 0.0;
    for (int j = 1; j <= 13; ++j) {
        cplx term = kB2[j - 1] / fact * poch * Xm;  // X^{-s-2j+1}
        cplx dterm = kB2[j - 1] / fact * (dpoch - lX * poch) * Xm;
        double m = std::abs(term);
        if (m > prev_mag) {  // asymptotic series started diverging
            err += m;
            break;
        }
        val += term;
        dval += dterm;
        prev_mag = m;
        err = m * 1e-2;  // next-term heuristic refreshed below
        if (m < 1e-18 * std::abs(val) + 1e-300) {
            err = m;
            break;
        }
        // advance (s)_{2j-1} -> (s)_{2j+1} and friends
        cplx f1 = s + cplx(2.0 * j - 1.0), f2 = s + cplx(2.0 * j);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        Xm /= X * X;
        err = std::abs(kB2[std::min(j, 12)] / fact * poch * Xm);
    }
    err += std::abs(val) * 5e-16 * std::sqrt((double)N);
    (void)target_rel;
    return {val, dval, err};
}

}  // namespace

NumValue riemann_zeta(cplx s, int derivative_order, const EvalConfig& cfg) {
    if (s == cplx(1.0, 0.0)) throw domain_error("riemann_zeta: pole at s = 1");
    if (std::abs(s.imag()) > 1.1e3)
        throw domain_error("riemann_zeta: |Im s| beyond certified range");
    if (s.real() >= -0.5) {
        EMResult r = em_hurwitz(s, 1.0, cfg.target_rel_err, cfg.max_terms);
        return derivative_order == 0 ? NumValue{r.val, r.err}
                                     : NumValue{r.dval, r.err * (1.0 + std::abs(std::log(2.0 + std::abs(s))))};
    }
    // functional equation for far-left arguments:
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    cplx oms = 1.0 - s;
    EMResult r = em_hurwitz(oms, 1.0, cfg.target_rel_err, cfg.max_terms);
    cplx chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(oms)) *
               std::sin(kPi / 2.0 * s);
    if (derivative_order == 0) return {chi * r.val, std::abs(chi) * r.err + std::abs(chi * r.val) * 1e-13};
    // zeta'(s) = chi'(s) zeta(1-s) - chi(s) zeta'(1-s); chi'/chi = log 2pi - (pi/2)cot(pi s/2)·(-1)...
    cplx dlogchi = std::log(2.0) + std::log(kPi) +
                   kPi / 2.0 * std::cos(kPi / 2.0 * s) / std::sin(kPi / 2.0 * s) -
                   digamma_c(oms);
    cplx dz = chi * (dlogchi * r.val - r.dval);
    return {dz, std::abs(dz) * 1e-11 + std::abs(chi) * r.err};
}

NumValue hurwitz_zeta(cplx s, double a, const EvalConfig& cfg) {
    if (s == cplx(1.0, 0.0)) throw domain_error("hurwitz_zeta: pole at s = 1");
    if (!(a > 0.0 && a <= 1.0)) throw domain_error("hurwitz_zeta: a must lie in (0,1]");
    EMResult r = em_hurwitz(s, a, cfg.target_rel_err, cfg.max_terms);
    return {r.val, r.err};
}

NumValue zeta_tail(cplx s, double a, const EvalConfig& cfg) {
    if (!(a > 0.0)) throw domain_error("zeta_tail: a must be positive");
    EMResult r = em_hurwitz(s, a, cfg.target_rel_err, cfg.max_terms);
    return {r.val, r.err};
}

NumValue zeta_tail_ds(cplx s, double a, const EvalConfig& cfg) {
    if (!(a > 0.0)) throw domain_error("zeta_tail_ds: a must be positive");
    EMResult r = em_hurwitz(s, a, cfg.target_rel_err, cfg.max_terms);
    return {r.dval, r.err * (1.0 + std::abs(std::log(1.0 + a)))};
}

}  // namespace mixmom
