#ifndef MIXMOM_QUAD_HPP
#define MIXMOM_QUAD_HPP

#include <functional>

#include "mixmom/numvalue.hpp"

namespace mixmom {

using integrand = std::function<cplx(double)>;

enum class QuadMode { tanh_sinh, adaptive_gk, oscillatory };

/// Integral of f over (a,b). tanh_sinh tolerates algebraic-logarithmic
/// endpoint singularities; adaptive_gk is the general workhorse;
/// oscillatory segments between sign changes of the integrand and
/// accelerates the alternating segment series.
/// b may be +infinity for tanh_sinh (exp-sinh map) and adaptive_gk.
NumValue quad_integrate(const integrand& f, double a, double b, QuadMode mode,
                        const EvalConfig& cfg = default_config());

/// Gauss-Kronrod 15(7) on [a,b], no adaptivity. err = |K15-G7| heuristic.
NumValue gk15(const integrand& f, double a, double b);

/// Integral over a vertical line Re w = delta of f(w), normalized by 1/(2 pi i):
/// (1/2pi) * Integral f(delta + i t) dt.
/// The caller certifies |f| <= C |t|^{-decay_exponent} for large |t|; the module
/// fits the observed decay over the last decade and refuses if it is slower.
/// Oscillatory tails are accelerated by iterated averaging of partial sums.
NumValue contour_integral_vertical(const std::function<cplx(cplx)>& f, double delta,
                                   double im_cutoff, double decay_exponent = 1.5,
                                   const EvalConfig& cfg = default_config());

/// Helper: integrate g(t)*exp(i*phase(t)) between consecutive phase zeros
/// supplied by the caller, with Euler-style averaging of the segment series.
NumValue quad_oscillatory_segmented(const integrand& f, const std::vector<double>& cuts,
                                    const EvalConfig& cfg = default_config());

}  // namespace mixmom

#endif
