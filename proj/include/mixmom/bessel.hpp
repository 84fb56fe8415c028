#ifndef MIXMOM_BESSEL_HPP
#define MIXMOM_BESSEL_HPP

#include "mixmom/numvalue.hpp"

namespace mixmom {

enum class BesselKind { J0, Y0, K0, K1, J1, Y1 };

/// Cylinder functions on the positive axis. Power series (double-double
/// where the series cancels) below the crossover, Hankel/exponential
/// asymptotics above; the crossovers are placed so both branches agree to
/// ~1e-12 at the seam.
NumValue bessel(BesselKind kind, double x, const EvalConfig& cfg = default_config());

/// Ai(x) on the real axis, |x| <= 1e6.
NumValue airy_ai(double x, const EvalConfig& cfg = default_config());

/// crossover abscissas, exposed for the seam-consistency tests
double bessel_crossover(BesselKind kind);
NumValue bessel_series_branch(BesselKind kind, double x);
NumValue bessel_asymptotic_branch(BesselKind kind, double x);

}  // namespace mixmom

#endif
