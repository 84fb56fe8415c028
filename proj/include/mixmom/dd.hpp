#ifndef MIXMOM_DD_HPP
#define MIXMOM_DD_HPP

#include <cmath>

namespace mixmom {

/// Double-double value (~32 significant digits), used as the extended
/// accumulator when hypergeometric series cancel catastrophically.
/// Only the operations the series kernels need are provided.
struct dd {
    double hi = 0.0, lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}
inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}
inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline double abs_hi(dd a) { return std::fabs(a.hi); }

/// Complex double-double, componentwise.
struct ddcplx {
    dd re, im;
    ddcplx() = default;
    ddcplx(dd r, dd i) : re(r), im(i) {}
    ddcplx(double r, double i = 0.0) : re(r), im(i) {}
};

inline ddcplx operator+(ddcplx a, ddcplx b) { return {a.re + b.re, a.im + b.im}; }
inline ddcplx operator-(ddcplx a, ddcplx b) { return {a.re - b.re, a.im - b.im}; }
inline ddcplx operator*(ddcplx a, ddcplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddcplx operator/(ddcplx a, ddcplx b) {
    dd den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline double mag_hi(ddcplx a) { return std::hypot(a.re.hi, a.im.hi); }

/// Neumaier compensated accumulator (binary64 path).
struct kahan_sum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct kahan_csum {
    kahan_sum re, im;
    void add(double r, double i) { re.add(r); im.add(i); }
    void add(std::complex<double> z) { re.add(z.real()); im.add(z.imag()); }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace mixmom

#endif
