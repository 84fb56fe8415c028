#ifndef MIXMOM_GAMMA_HPP
#define MIXMOM_GAMMA_HPP

#include "mixmom/numvalue.hpp"

namespace mixmom {

/// log Gamma(z), principal branch continued along the standard cut.
/// Accurate to ~1e-13 relative away from the poles.
cplx log_gamma(cplx z);

/// Gamma(z). Throws domain_error at nonpositive integers.
NumValue complex_gamma(cplx z, const EvalConfig& cfg = default_config());

/// exp(log Gamma(a) - log Gamma(b)), safe for |a|,|b| up to ~1e6.
NumValue gamma_ratio(cplx a, cplx b, const EvalConfig& cfg = default_config());

/// psi(x) = Gamma'(x)/Gamma(x) for real x off the poles.
NumValue digamma(double x, const EvalConfig& cfg = default_config());

/// Complex digamma.
cplx digamma_c(cplx z);

/// Regularized upper incomplete gamma Q(a,x) = Gamma(a,x)/Gamma(a),
/// complex a, real x > 0.
cplx gamma_q(cplx a, double x);

/// Upper incomplete gamma Gamma(a,x) computed as Q(a,x)*Gamma(a) in log space:
/// returns log of |Gamma(a,x)| plus phase via the complex result.
cplx log_gamma_upper(cplx a, double x);

}  // namespace mixmom

#endif
