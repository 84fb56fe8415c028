#include "mixmom/gamma.hpp"

#include <cmath>

namespace mixmom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 607/128, 15 terms. Relative accuracy ~1e-15 on Re z >= 0.5.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5, 1.5808870322491248884e-4,
    -2.1026444172410488319e-4,  2.1743961811521264320e-4,  -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5, 3.6899182659531622704e-6,
};

cplx lanczos_log_gamma_pos(cplx z) {
    // valid for Re z >= 0.5; z shifted so the series sees z-1
    cplx zm1 = z - cplx(1.0);
    cplx sum(kLanczos[0], 0.0);
    for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (zm1 + cplx(double(i)));
    cplx t = zm1 + cplx(kLanczosG + 0.5);
    return 0.918938533204672741780329736406 /*log sqrt(2 pi)*/
           + (zm1 + cplx(0.5)) * std::log(t) - t + std::log(sum);
}

bool near_nonpositive_integer(cplx z, double tol = 1e-300) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return lanczos_log_gamma_pos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    // log sin via the exponentially safe form to avoid overflow for large |Im z|
    cplx zi = cplx(1.0) - z;
    cplx lg1mz = lanczos_log_gamma_pos(zi);
    // log(sin(pi z)), written so large |Im z| cannot overflow
    cplx log_sin;
    double y = z.imag();
    cplx ipz = cplx(0.0, kPi) * z;
    if (y > 20.0) {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) * (i/2)
        log_sin = -ipz + std::log(cplx(1.0) - std::exp(2.0 * ipz)) + std::log(cplx(0.0, 0.5));
    } else if (y < -20.0) {
        log_sin = ipz + std::log(cplx(1.0) - std::exp(-2.0 * ipz)) + std::log(cplx(0.0, -0.5));
    } else {
        log_sin = std::log(std::sin(kPi * z));
    }
    return std::log(cplx(kPi)) - log_sin - lg1mz;
}

NumValue complex_gamma(cplx z, const EvalConfig& cfg) {
    if (near_nonpositive_integer(z))
        throw domain_error("complex_gamma: pole at nonpositive integer z = " +
                           std::to_string(z.real()));
    cplx lg = log_gamma(z);
    if (lg.real() > 700.0)
        throw accuracy_error("complex_gamma: overflow, use log_gamma/gamma_ratio");
    cplx g = std::exp(lg);
    double rel = std::max(1e-14, cfg.target_rel_err * 1e-2);
    // near a pole the reflection amplifies error
    if (z.real() < 0.5 && z.imag() == 0.0) {
        double d = std::abs(z.real() - std::round(z.real()));
        if (d < 1e-6) rel = std::max(rel, 1e-14 / d * 1e-6);
    }
    return {g, std::abs(g) * rel};
}

NumValue gamma_ratio(cplx a, cplx b, const EvalConfig& cfg) {
    if (near_nonpositive_integer(a))
        throw domain_error("gamma_ratio: pole in numerator");
    cplx lr = log_gamma(a) - log_gamma(b);
    if (lr.real() > 700.0) throw accuracy_error("gamma_ratio: overflow");
    cplx r = std::exp(lr);
    (void)cfg;
    return {r, std::abs(r) * 5e-14 * std::max(1.0, std::abs(lr.real()))};
}

NumValue digamma(double x, const EvalConfig& cfg) {
    if (x <= 0.0 && x == std::floor(x))
        throw domain_error("digamma: pole at nonpositive integer");
    (void)cfg;
    cplx v = digamma_c(cplx(x, 0.0));
    return {v.real(), std::max(1e-15, std::abs(v.real())) * 3e-14};
}

cplx digamma_c(cplx z) {
    // recurrence up to |z| >= 12, then Stirling
    cplx acc(0.0, 0.0);
    bool reflected = false;
    cplx zz = z;
    if (zz.real() < 0.0) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        reflected = true;
        zz = cplx(1.0) - zz;
    }
    while (std::abs(zz) < 12.0) {
        acc -= 1.0 / zz;
        zz += 1.0;
    }
    cplx inv = 1.0 / zz, inv2 = inv * inv;
    // psi(z) ~ log z - 1/(2z) - sum B_{2n}/(2n z^{2n})
    static const double B[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    cplx s = std::log(zz) - 0.5 * inv;
    cplx p = inv2;
    for (double b : B) {
        s -= b * p;
        p *= inv2;
    }
    s += acc;
    if (reflected) {
        cplx cot = std::cos(kPi * z) / std::sin(kPi * z);
        s = s - kPi * cot;
    }
    return s;
}

namespace {

// regularized lower incomplete gamma by series, x < |a|+1 regime
cplx gamma_p_series(cplx a, double x) {
    cplx sum = 1.0 / a, term = sum;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + cplx(double(n)));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    cplx lg = -x + a * std::log(x) - log_gamma(a);
    return std::exp(lg) * sum;  // P = e^{-x} x^a / Gamma(a) * sum
}

// regularized upper incomplete gamma by Lentz continued fraction
cplx gamma_q_cf(cplx a, double x) {
    const double tiny = 1e-300;
    cplx b = cplx(x) + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 10000; ++i) {
        cplx an = -double(i) * (cplx(double(i)) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    cplx lg = -x + a * std::log(x) - log_gamma(a);
    return std::exp(lg) * h;
}

}  // namespace

cplx gamma_q(cplx a, double x) {
    if (x <= 0.0) return cplx(1.0);
    if (x < a.real() + 1.0 || x < 1.0) {
        return cplx(1.0) - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

cplx log_gamma_upper(cplx a, double x) {
    cplx q = gamma_q(a, x);
    return std::log(q) + log_gamma(a);
}

}  // namespace mixmom
