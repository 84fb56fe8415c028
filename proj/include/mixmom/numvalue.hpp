#ifndef MIXMOM_NUMVALUE_HPP
#define MIXMOM_NUMVALUE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mixmom {

using cplx = std::complex<double>;

/// A computed number together with an absolute error estimate.
/// Every evaluator in the library returns one of these; arithmetic on
/// NumValues propagates the error bounds to first order.
struct NumValue {
    cplx value{0.0, 0.0};
    double abs_err = 0.0;

    NumValue() = default;
    NumValue(cplx v, double e) : value(v), abs_err(e) {}
    NumValue(double v, double e) : value(v, 0.0), abs_err(e) {}
    explicit NumValue(double v) : value(v, 0.0), abs_err(0.0) {}
    explicit NumValue(cplx v) : value(v), abs_err(0.0) {}

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
    double mag() const { return std::abs(value); }

    bool finite() const {
        return std::isfinite(value.real()) && std::isfinite(value.imag()) &&
               std::isfinite(abs_err) && abs_err >= 0.0;
    }
};

inline NumValue operator+(const NumValue& a, const NumValue& b) {
    return {a.value + b.value, a.abs_err + b.abs_err};
}
inline NumValue operator-(const NumValue& a, const NumValue& b) {
    return {a.value - b.value, a.abs_err + b.abs_err};
}
inline NumValue operator-(const NumValue& a) { return {-a.value, a.abs_err}; }
// |d(ab)| <= |a| db + |b| da + da db
inline NumValue operator*(const NumValue& a, const NumValue& b) {
    double err = std::abs(a.value) * b.abs_err + std::abs(b.value) * a.abs_err +
                 a.abs_err * b.abs_err;
    return {a.value * b.value, err};
}
inline NumValue operator*(cplx c, const NumValue& a) {
    return {c * a.value, std::abs(c) * a.abs_err};
}
inline NumValue operator*(double c, const NumValue& a) {
    return {c * a.value, std::abs(c) * a.abs_err};
}
inline NumValue operator/(const NumValue& a, const NumValue& b) {
    double bm = std::abs(b.value);
    cplx q = a.value / b.value;
    // first order: d(a/b) <= da/|b| + |a| db/|b|^2, inflate if b is badly known
    double err = a.abs_err / bm + std::abs(q) * b.abs_err / bm;
    if (b.abs_err > 0.5 * bm) err = std::abs(q);  // denominator not resolved
    return {q, err};
}
inline NumValue operator/(const NumValue& a, double c) {
    return {a.value / c, a.abs_err / std::abs(c)};
}

/// Global evaluation policy. All operations are pure functions of their
/// inputs and an EvalConfig.
struct EvalConfig {
    double target_rel_err = 1e-10;
    long max_terms = 1000000;
    int quad_levels = 12;  // tanh-sinh refinement depth

    void validate() const {
        if (!(target_rel_err > 0.0 && target_rel_err <= 1e-3))
            throw std::invalid_argument("EvalConfig: target_rel_err must lie in (0, 1e-3]");
        if (max_terms < 1000)
            throw std::invalid_argument("EvalConfig: max_terms must be >= 1000");
    }
};

inline const EvalConfig& default_config() {
    static const EvalConfig cfg{};
    return cfg;
}

/// Domain violations (pole hit, argument outside certified region, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested accuracy could not be certified; carries the best estimate.
struct accuracy_error : std::runtime_error {
    NumValue best;
    explicit accuracy_error(const std::string& what, NumValue b = {})
        : std::runtime_error(what), best(b) {}
};

/// Cancellation budget exceeded (series with huge intermediate terms).
struct cancellation_error : accuracy_error {
    using accuracy_error::accuracy_error;
};

}  // namespace mixmom

#endif
