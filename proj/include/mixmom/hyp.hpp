#ifndef MIXMOM_HYP_HPP
#define MIXMOM_HYP_HPP

#include "mixmom/numvalue.hpp"

namespace mixmom {

/// Gauss 2F1(a,b;c;x) for real x in [0,1) (x = 1 allowed when Re(c-a-b) > 0).
/// Switches to the 1-x connection formulas near the unit argument and to a
/// double-double accumulator when the series cancels beyond ~1e12.
NumValue gauss_2f1(cplx a, cplx b, cplx c, double x,
                   const EvalConfig& cfg = default_config());

/// 3F2(a1,a2,a3; b1,b2; 1). Requires Re(b1+b2-a1-a2-a3) > 0. The algebraic
/// tail (terms ~ j^{-1-mu}) is summed by power-law Richardson extrapolation.
/// Refuses with cancellation_error when binary64+double-double cannot certify
/// the target accuracy.
NumValue hyp_3f2_unit(cplx a1, cplx a2, cplx a3, cplx b1, cplx b2,
                      const EvalConfig& cfg = default_config());

}  // namespace mixmom

#endif
