#ifndef MIXMOM_ZETA_HPP
#define MIXMOM_ZETA_HPP

#include "mixmom/numvalue.hpp"

namespace mixmom {

/// Riemann zeta (derivative_order 0) or zeta' (order 1) by Euler-Maclaurin.
/// Certified for |Im s| up to ~1e3.
NumValue riemann_zeta(cplx s, int derivative_order = 0,
                      const EvalConfig& cfg = default_config());

/// Hurwitz zeta(s, a), a in (0,1], s != 1.
NumValue hurwitz_zeta(cplx s, double a, const EvalConfig& cfg = default_config());

/// Generalized tail zeta: sum_{n>=0} (n+a)^{-s} for any real a > 0,
/// and optionally its s-derivative (sum of -log(n+a)(n+a)^{-s}).
/// Used for analytic tail models of truncated Dirichlet series.
NumValue zeta_tail(cplx s, double a, const EvalConfig& cfg = default_config());
NumValue zeta_tail_ds(cplx s, double a, const EvalConfig& cfg = default_config());

}  // namespace mixmom

#endif
