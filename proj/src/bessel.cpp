#include "mixmom/bessel.hpp"

#include <cmath>

#include "mixmom/dd.hpp"
#include "mixmom/gamma.hpp"

namespace mixmom {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kSeamJY = 15.0;
constexpr double kSeamK = 17.0;

// ----- power series in double-double (cancellation-safe) -----

struct ddpair {
    dd val;
    double maxterm;
};

// J0 = sum (-q)^k/(k!)^2, q = x^2/4
dd series_j0(double x) {
    dd q(x * x / 4.0), t(1.0), s(1.0);
    for (int k = 1; k < 400; ++k) {
        t = t * q / dd(double(k) * double(k));
        dd term = (k % 2) ? -t : t;
        s = s + term;
        if (abs_hi(t) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    return s;
}

// J1 = (x/2) sum (-q)^k/(k!(k+1)!)
dd series_j1(double x) {
    dd q(x * x / 4.0), t(1.0), s(1.0);
    for (int k = 1; k < 400; ++k) {
        t = t * q / dd(double(k) * double(k + 1));
        dd term = (k % 2) ? -t : t;
        s = s + term;
        if (abs_hi(t) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    return s * dd(x / 2.0);
}

// Y0 = (2/pi)[(ln(x/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2]
dd series_y0(double x) {
    dd q(x * x / 4.0), t(1.0), s(0.0), H(0.0);
    for (int k = 1; k < 400; ++k) {
        t = t * q / dd(double(k) * double(k));
        H = H + dd(1.0 / k);
        dd term = t * H;
        if (k % 2 == 0) term = -term;
        s = s + term;
        if (abs_hi(term) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    dd j0 = series_j0(x);
    dd lg(std::log(x / 2.0) + kEulerGamma);
    return (lg * j0 + s) * dd(2.0 / kPi);
}

// Y1 = (2/pi)[ (ln(x/2)+gamma) J1 - 1/x - (x/4) sum (-q)^k (H_k + H_{k+1})/(k!(k+1)!) ]
dd series_y1(double x) {
    dd q(x * x / 4.0), t(1.0), s(0.0);
    dd Hk(0.0), Hk1(1.0);
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            t = t * q / dd(double(k) * double(k + 1));
            Hk = Hk + dd(1.0 / k);
            Hk1 = Hk1 + dd(1.0 / (k + 1));
        }
        dd term = t * (Hk + Hk1);
        if (k % 2) term = -term;
        s = s + term;
        if (abs_hi(term) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    dd j1 = series_j1(x);
    dd lg(std::log(x / 2.0) + kEulerGamma);
    return (lg * j1 - dd(1.0 / x) - dd(x / 4.0) * s) * dd(2.0 / kPi);
}

// I0 and the K0 companion sum
dd series_i0(double x) {
    dd q(x * x / 4.0), t(1.0), s(1.0);
    for (int k = 1; k < 500; ++k) {
        t = t * q / dd(double(k) * double(k));
        s = s + t;
        if (abs_hi(t) < 1e-34 * std::fabs(s.hi) && k > 3) break;
    }
    return s;
}
dd series_i1(double x) {
    dd q(x * x / 4.0), t(1.0), s(1.0);
    for (int k = 1; k < 500; ++k) {
        t = t * q / dd(double(k) * double(k + 1));
        s = s + t;
        if (abs_hi(t) < 1e-34 * std::fabs(s.hi) && k > 3) break;
    }
    return s * dd(x / 2.0);
}

// K0 = -(ln(x/2)+gamma) I0 + sum_{k>=1} H_k q^k/(k!)^2
dd series_k0(double x) {
    dd q(x * x / 4.0), t(1.0), s(0.0), H(0.0);
    for (int k = 1; k < 500; ++k) {
        t = t * q / dd(double(k) * double(k));
        H = H + dd(1.0 / k);
        s = s + t * H;
        if (abs_hi(t * H) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    dd lg(std::log(x / 2.0) + kEulerGamma);
    return -(lg * series_i0(x)) + s;
}

// K1 = 1/x + (ln(x/2)) I1 ... use DLMF 10.31.1-style combination:
// K1(x) = 1/x + I1(x) ln(x/2) - (x/4) sum_{k>=0} [psi(k+1)+psi(k+2)]/(k!(k+1)!) q^k
dd series_k1(double x) {
    dd q(x * x / 4.0), t(1.0), s(0.0);
    dd psum(-2.0 * kEulerGamma + 1.0);  // psi(1)+psi(2)
    for (int k = 0; k < 500; ++k) {
        if (k > 0) {
            t = t * q / dd(double(k) * double(k + 1));
            psum = psum + dd(1.0 / k) + dd(1.0 / (k + 1));
        }
        dd term = t * psum;
        s = s + term;
        if (abs_hi(term) < 1e-34 * (std::fabs(s.hi) + 1e-300) && k > 3) break;
    }
    dd lg(std::log(x / 2.0));
    return dd(1.0 / x) + lg * series_i1(x) - dd(x / 4.0) * s;
}

// ----- large-x asymptotics -----

// Hankel P/Q for nu = 0, 1
void hankel_pq(int nu, double x, double& P, double& Q, double& trunc) {
    double mu = 4.0 * nu * nu;
    double A = 1.0;
    P = 1.0;
    Q = 0.0;
    double prev = 1e300;
    int k = 1;
    double sign = 1.0;
    for (; k < 60; ++k) {
        A *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        double m = std::fabs(A);
        if (m > prev) break;
        prev = m;
        if (k % 2 == 1) {
            // contributes to Q with alternating sign starting +
            Q += ((k % 4 == 1) ? 1.0 : -1.0) * A;
        } else {
            P += ((k % 4 == 2) ? -1.0 : 1.0) * A;
        }
        if (m < 1e-18) break;
    }
    sign = sign;
    trunc = prev;
}

dd asym_jy(BesselKind kind, double x) {
    int nu = (kind == BesselKind::J1 || kind == BesselKind::Y1) ? 1 : 0;
    double P, Q, tr;
    hankel_pq(nu, x, P, Q, tr);
    double chi = x - (2.0 * nu + 1.0) * kPi / 4.0;
    double amp = std::sqrt(2.0 / (kPi * x));
    double c = std::cos(chi), s = std::sin(chi);
    switch (kind) {
        case BesselKind::J0:
        case BesselKind::J1:
            return dd(amp * (P * c - Q * s));
        default:
            return dd(amp * (P * s + Q * c));
    }
}

dd asym_k(BesselKind kind, double x) {
    int nu = (kind == BesselKind::K1) ? 1 : 0;
    double mu = 4.0 * nu * nu;
    double t = 1.0, s = 1.0, prev = 1e300;
    for (int k = 1; k < 60; ++k) {
        t *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        if (std::fabs(t) > prev) break;
        prev = std::fabs(t);
        s += t;
        if (std::fabs(t) < 1e-18) break;
    }
    return dd(std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * s);
}

}  // namespace

double bessel_crossover(BesselKind kind) {
    return (kind == BesselKind::K0 || kind == BesselKind::K1) ? kSeamK : kSeamJY;
}

NumValue bessel_series_branch(BesselKind kind, double x) {
    dd v;
    double peak = std::exp(std::min(300.0, x));  // crude cancellation scale
    switch (kind) {
        case BesselKind::J0: v = series_j0(x); break;
        case BesselKind::J1: v = series_j1(x); break;
        case BesselKind::Y0: v = series_y0(x); break;
        case BesselKind::Y1: v = series_y1(x); break;
        case BesselKind::K0: v = series_k0(x); break;
        case BesselKind::K1: v = series_k1(x); break;
    }
    double val = double(v);
    double err = std::max(std::fabs(val), peak * 1e-32) * 1e-15 + peak * 1e-32;
    return {val, err};
}

NumValue bessel_asymptotic_branch(BesselKind kind, double x) {
    dd v;
    switch (kind) {
        case BesselKind::K0:
        case BesselKind::K1:
            v = asym_k(kind, x);
            break;
        default:
            v = asym_jy(kind, x);
            break;
    }
    double val = double(v);
    double floor_amp = (kind == BesselKind::K0 || kind == BesselKind::K1)
                           ? std::fabs(val)
                           : std::sqrt(2.0 / (kPi * x));
    double err = floor_amp * (std::exp(-2.0 * x) * 40.0 + 1e-15) + std::fabs(x) * 1e-16 * floor_amp;
    return {val, err};
}

NumValue bessel(BesselKind kind, double x, const EvalConfig& cfg) {
    (void)cfg;
    bool needs_positive = (kind != BesselKind::J0 && kind != BesselKind::J1);
    if (x < 0.0 || (needs_positive && x == 0.0))
        throw domain_error("bessel: argument must be positive");
    if (x == 0.0) return NumValue{(kind == BesselKind::J0) ? 1.0 : 0.0, 0.0};
    if (x <= bessel_crossover(kind)) return bessel_series_branch(kind, x);
    return bessel_asymptotic_branch(kind, x);
}

// --------------------------------------------------------------------- Airy

namespace {

constexpr double kAirySeam = 8.0;

// Maclaurin: Ai(x) = c1 f(x) - c2 g(x),
// f term ratio x^3/((3k)(3k-1)), g term ratio x^3/((3k+1)(3k))
NumValue airy_series(double x) {
    static const double c1 = 0.35502805388781723926;   // 3^{-2/3}/Gamma(2/3)
    static const double c2 = 0.25881940379280679841;   // 3^{-1/3}/Gamma(1/3)
    dd x3(x * x * x);
    dd f(1.0), tf(1.0), g(x), tg(x);
    double maxt = 1.0;
    for (int k = 1; k < 300; ++k) {
        tf = tf * x3 / dd(double(3 * k) * double(3 * k - 1));
        f = f + tf;
        tg = tg * x3 / dd(double(3 * k + 1) * double(3 * k));
        g = g + tg;
        maxt = std::max({maxt, std::fabs(tf.hi), std::fabs(tg.hi)});
        if (abs_hi(tf) < 1e-34 * (std::fabs(f.hi) + 1e-300) &&
            abs_hi(tg) < 1e-34 * (std::fabs(g.hi) + 1e-300) && k > 3)
            break;
    }
    dd ai = dd(c1) * f - dd(c2) * g;
    double val = double(ai);
    return {val, maxt * 1e-31 + std::fabs(val) * 2e-15};
}

// u_k recurrence for the asymptotic series
double airy_u_next(double u, int k) {
    return u * (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0) /
           (216.0 * (2.0 * k + 1.0) * (k + 1.0));
}

NumValue airy_asym_pos(double x) {
    double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    double t = 1.0, s = 1.0, prev = 1e300;
    for (int k = 0; k < 80; ++k) {
        t = airy_u_next(t, k) / zeta;
        double m = std::fabs(t);
        if (m > prev) break;
        prev = m;
        s += ((k % 2 == 0) ? -1.0 : 1.0) * t;
        if (m < 1e-18) break;
    }
    double amp = std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25));
    double val = amp * s;
    return {val, std::fabs(val) * (prev + 1e-15) + std::fabs(amp) * std::exp(-2.0 * zeta)};
}

NumValue airy_asym_neg(double xm) {
    // x = -xm, xm > 0
    double zeta = 2.0 / 3.0 * std::pow(xm, 1.5);
    double u = 1.0;
    double even = 1.0, odd = 0.0;
    double prev = 1e300;
    for (int k = 1; k < 80; ++k) {
        u = airy_u_next(u, k - 1);
        double term = u / std::pow(zeta, k);
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        int r = k % 4;
        if (r == 1) odd += term;        // * sin, sign +
        else if (r == 2) even -= term;  // cos, sign -
        else if (r == 3) odd -= term;
        else even += term;
        if (std::fabs(term) < 1e-18) break;
    }
    double amp = 1.0 / (std::sqrt(kPi) * std::pow(xm, 0.25));
    double phase = zeta + kPi / 4.0;
    double val = amp * (std::sin(phase) * even - std::cos(phase) * odd);
    double phase_err = zeta * 1e-16;
    return {val, amp * (prev + phase_err + 1e-15)};
}

}  // namespace

NumValue airy_ai(double x, const EvalConfig& cfg) {
    (void)cfg;
    if (std::fabs(x) > 1e6) throw domain_error("airy_ai: |x| beyond certified range");
    if (std::fabs(x) <= kAirySeam) return airy_series(x);
    return (x > 0) ? airy_asym_pos(x) : airy_asym_neg(-x);
}

}  // namespace mixmom
