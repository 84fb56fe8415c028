#include "mixmom/hyp.hpp"

#include <cmath>

#include "mixmom/dd.hpp"
#include "mixmom/gamma.hpp"

namespace mixmom {

namespace {

constexpr double kCancelBudget = 1e12;

bool near_nonpos_int(cplx z, double tol = 1e-12) {
    return std::abs(z.imag()) < tol && z.real() < 0.5 &&
           std::abs(z.real() - std::round(z.real())) < tol;
}

struct SeriesOut {
    cplx sum;
    double maxterm;
    double err;
    long terms;
};

// plain compensated series sum_{j} prod (a_i+j)/prod(b_i+j)/(1+j) * x
SeriesOut series_2f1(cplx a, cplx b, cplx c, double x, long max_terms, double tol) {
    kahan_csum acc;
    cplx t(1.0, 0.0);
    acc.add(t);
    double maxt = 1.0;
    long j = 0;
    for (; j < max_terms; ++j) {
        t *= (a + cplx(double(j))) * (b + cplx(double(j))) /
             ((c + cplx(double(j))) * double(j + 1)) * x;
        acc.add(t);
        double m = std::abs(t);
        maxt = std::max(maxt, m);
        if (m < tol * (std::abs(acc.value()) + 1e-300) && j > 4) break;
        if (t == cplx(0.0)) break;  // terminating (polynomial) case
    }
    cplx s = acc.value();
    return {s, maxt, maxt * 1e-16 + std::abs(s) * 1e-15, j};
}

SeriesOut series_2f1_dd(cplx a, cplx b, cplx c, double x, long max_terms, double tol) {
    ddcplx acc(1.0, 0.0), t(1.0, 0.0);
    double maxt = 1.0;
    long j = 0;
    for (; j < max_terms; ++j) {
        cplx num = (a + cplx(double(j))) * (b + cplx(double(j)));
        cplx den = (c + cplx(double(j))) * double(j + 1);
        // complex dd multiply by double-precision ratio factors
        ddcplx f = ddcplx(num.real(), num.imag()) / ddcplx(den.real(), den.imag());
        t = t * f * ddcplx(x, 0.0);
        acc = acc + t;
        double m = mag_hi(t);
        maxt = std::max(maxt, m);
        if (m < tol * (mag_hi(acc) + 1e-300) && j > 4) break;
        if (m == 0.0) break;
    }
    cplx s(double(acc.re), double(acc.im));
    return {s, maxt, maxt * 1e-31 + std::abs(s) * 1e-15, j};
}

NumValue f21_series_guarded(cplx a, cplx b, cplx c, double x, const EvalConfig& cfg) {
    SeriesOut r = series_2f1(a, b, c, x, cfg.max_terms, 1e-17);
    double scale = std::abs(r.sum) + 1e-300;
    if (r.maxterm / scale > kCancelBudget) {
        SeriesOut rd = series_2f1_dd(a, b, c, x, cfg.max_terms, 1e-18);
        double scaled = std::abs(rd.sum) + 1e-300;
        if (rd.maxterm * 1e-31 > cfg.target_rel_err * scaled)
            throw cancellation_error(
                "gauss_2f1: cancellation beyond double-double budget",
                NumValue{rd.sum, rd.maxterm * 1e-31});
        return {rd.sum, rd.err};
    }
    return {r.sum, r.err};
}

// DLMF 15.8.4-style connection for x near 1, c-a-b nonintegral
NumValue f21_near_one(cplx a, cplx b, cplx c, double x, const EvalConfig& cfg) {
    cplx mu = c - a - b;
    double omx = 1.0 - x;
    NumValue F1 = f21_series_guarded(a, b, 1.0 - mu, omx, cfg);
    NumValue F2 = f21_series_guarded(c - a, c - b, 1.0 + mu, omx, cfg);
    NumValue G1 = gamma_ratio(c, c - a, cfg) * gamma_ratio(mu, c - b, cfg);
    NumValue G2 = gamma_ratio(c, a, cfg) * gamma_ratio(-mu, b, cfg);
    cplx pw = std::exp(mu * std::log(omx));
    return G1 * F1 + NumValue{pw, std::abs(pw) * 1e-15} * G2 * F2;
}

// DLMF 15.8.10: c = a+b (log case)
NumValue f21_log_case(cplx a, cplx b, double x, const EvalConfig& cfg) {
    double omx = 1.0 - x;
    double lomx = std::log(omx);
    kahan_csum acc;
    cplx coef(1.0, 0.0);  // (a)_j (b)_j / (j!)^2
    cplx psa = digamma_c(a), psb = digamma_c(b);
    double psj = -0.5772156649015328606;  // psi(1)
    double maxt = 0.0;
    for (long j = 0; j < cfg.max_terms; ++j) {
        cplx bracket = 2.0 * psj - psa - psb - lomx;
        cplx term = coef * bracket;
        acc.add(term);
        double m = std::abs(term);
        maxt = std::max(maxt, m);
        if (m < 1e-17 * (std::abs(acc.value()) + 1e-300) && j > 3) break;
        coef *= (a + cplx(double(j))) * (b + cplx(double(j))) /
                cplx(double(j + 1) * double(j + 1)) * omx;
        psa += 1.0 / (a + cplx(double(j)));
        psb += 1.0 / (b + cplx(double(j)));
        psj += 1.0 / double(j + 1);
    }
    NumValue pre = gamma_ratio(a + b, a, cfg) * gamma_ratio(cplx(1.0), b, cfg);
    cplx s = acc.value();
    return pre * NumValue{s, maxt * 1e-15 + std::abs(s) * 1e-14};
}

}  // namespace

NumValue gauss_2f1(cplx a, cplx b, cplx c, double x, const EvalConfig& cfg) {
    if (near_nonpos_int(c))
        throw domain_error("gauss_2f1: c is a nonpositive integer");
    if (x < 0.0 || x > 1.0) throw domain_error("gauss_2f1: x must lie in [0,1]");
    bool poly = near_nonpos_int(a) || near_nonpos_int(b);
    if (x == 1.0) {
        if (poly) return f21_series_guarded(a, b, c, 1.0, cfg);
        cplx mu = c - a - b;
        if (mu.real() <= 0.0)
            throw domain_error("gauss_2f1: divergent at x=1 (Re(c-a-b) <= 0)");
        // Gauss summation
        return gamma_ratio(c, c - a, cfg) * gamma_ratio(mu, c - b, cfg);
    }
    if (x < 0.72 || poly) return f21_series_guarded(a, b, c, x, cfg);
    cplx mu = c - a - b;
    double mu_int_dist = std::abs(mu.imag()) + std::abs(mu.real() - std::round(mu.real()));
    if (mu_int_dist < 1e-10) {
        if (std::abs(mu) < 1e-10) return f21_log_case(a, b, x, cfg);
        // integral nonzero mu: fall back to the direct series (slower near 1)
        return f21_series_guarded(a, b, c, x, cfg);
    }
    if (mu_int_dist < 1e-3) {
        // connection formula ill-conditioned; direct series still converges
        NumValue v = f21_series_guarded(a, b, c, x, cfg);
        v.abs_err *= 2.0;
        return v;
    }
    return f21_near_one(a, b, c, x, cfg);
}

NumValue hyp_3f2_unit(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2, const EvalConfig& cfg) {
    if (near_nonpos_int(b1) || near_nonpos_int(b2))
        throw domain_error("hyp_3f2_unit: lower parameter is a nonpositive integer");
    cplx mu = b1 + b2 - a1 - a2 - a3;
    bool poly = near_nonpos_int(a1) || near_nonpos_int(a2) || near_nonpos_int(a3) ||
                a1 == cplx(0.0) || a2 == cplx(0.0) || a3 == cplx(0.0);
    if (!poly && mu.real() <= 0.0)
        throw domain_error("hyp_3f2_unit: series divergent, Re(b1+b2-a1-a2-a3) <= 0");

    // double-double accumulation throughout; the peak/result ratio decides
    // whether the result is certifiable
    ddcplx acc(0.0, 0.0), t(1.0, 0.0);
    double maxt = 1.0;
    long J = 0;
    const long jmax = std::max<long>(cfg.max_terms, 20000);
    // snapshots of partial sums at j = J0, 2 J0, 4 J0 for tail extrapolation
    long snap_base = 0;
    cplx S1, S2, S4;
    double asc = std::max({std::abs(a1), std::abs(a2), std::abs(a3), std::abs(b1),
                           std::abs(b2)});
    long settle = std::max<long>((long)std::ceil(8.0 * asc + 64.0), 1500);
    bool terminated = false;
    bool extrapolated = false;

    for (long j = 0; j < jmax; ++j) {
        acc = acc + t;
        double m = mag_hi(t);
        maxt = std::max(maxt, m);
        cplx jj{double(j), 0.0};
        cplx num = (a1 + jj) * (a2 + jj) * (a3 + jj);
        cplx den = (b1 + jj) * (b2 + jj) * double(j + 1);
        if (num == cplx(0.0)) {
            terminated = true;
            J = j;
            break;
        }
        cplx f = num / den;
        t = t * ddcplx(f.real(), f.imag());
        // fast-decay exit
        if (j > settle && m < 1e-18 * (mag_hi(acc) + 1e-300) && mag_hi(t) < m) {
            terminated = true;
            J = j;
            break;
        }
        if (j == settle) {
            snap_base = settle;
            S1 = cplx(double(acc.re), double(acc.im));
        } else if (snap_base > 0 && j == 2 * snap_base) {
            S2 = cplx(double(acc.re), double(acc.im));
        } else if (snap_base > 0 && j == 4 * snap_base) {
            S4 = cplx(double(acc.re), double(acc.im));
            J = j;
            extrapolated = true;
            break;
        }
    }
    (void)J;

    cplx sum(double(acc.re), double(acc.im));
    double scale = std::abs(sum) + 1e-300;
    double cancel_err = maxt * 1e-31;
    if (cancel_err > cfg.target_rel_err * scale && maxt / scale > kCancelBudget)
        throw cancellation_error(
            "hyp_3f2_unit: precision budget cannot certify target accuracy; "
            "use an integral representation",
            NumValue{sum, cancel_err});

    if (terminated) return {sum, cancel_err + scale * 1e-15};
    if (!extrapolated)
        throw accuracy_error("hyp_3f2_unit: max_terms too small for tail extrapolation",
                             NumValue{sum, scale});

    // algebraic tail: S_inf - S_J ~ A J^{-mu}; two-level power-law Richardson
    cplx r = std::pow(2.0, -mu);
    cplx E1a = (S2 - r * S1) / (1.0 - r);
    cplx E1b = (S4 - r * S2) / (1.0 - r);
    cplx r2 = r * 0.5;  // 2^{-mu-1}
    cplx E2 = (E1b - r2 * E1a) / (1.0 - r2);
    double tail_err = std::abs(E2 - E1b) + std::abs(E1b - E1a) * 0.05;
    return {E2, cancel_err + tail_err + std::abs(E2) * 1e-15};
}

}  // namespace mixmom
