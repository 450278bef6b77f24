#pragma once
// Complex log-gamma on the principal branch, a certified upper bound for
// |Gamma| used in truncation-error control, and the contour decay exponent.

#include <complex>
#include <vector>

#include "glsm/spec.hpp"

namespace glsm {

using Complex = std::complex<double>;

struct LogGammaValue {
  Complex value;        // principal branch of log Gamma(z)
  bool at_pole = false; // never true on return: poles raise AtPole instead
};

// Principal-branch log Gamma.  Relative accuracy <= 1e-13 for |z| <= 1e4 away
// from poles.  Throws AtPole when z is within 1e-12 of a nonpositive integer.
LogGammaValue log_gamma(Complex z);

// Certified upper bound for |Gamma(x+iy)| with the decay factor e^{-pi|y|/2}
// made explicit.  Requires x at distance >= delta from the nonpositive
// integers; throws OutsideStrip otherwise (or when delta <= 0).
double gamma_upper_bound(double x, double y, double delta);

// Exponential decay rate of the contour integrand along direction nu:
//   c(nu) = (pi/2) * sum_{i not in exempt} |<D_i, nu>| - 2*pi*|<B + t, nu>|.
// Positive c certifies decay; the return value may be negative (no decay).
double decay_exponent(const GlsmSpec& spec, const std::vector<int>& exempt,
                      const std::vector<double>& nu, const std::vector<double>& B,
                      const std::vector<double>& t);

// Exact-rational variant used where certified window margins are reported.
Rational decay_exponent_linear_part(const GlsmSpec& spec, const std::vector<int>& exempt,
                                    const QVec& nu);

}  // namespace glsm
