#pragma once
// Contour-integral side of the correspondence: the rank-1 disk partition
// integral over a vertical line, residue-reduced line integrals for higher
// rank, and the residue values shared with the series side.  All truncation
// is certified from the contour decay exponent and the gamma upper bound.

#include <utility>
#include <vector>

#include "glsm/cgamma.hpp"
#include "glsm/higgs.hpp"

namespace glsm {

struct QuadratureResult {
  Complex value{0.0, 0.0};
  long long samples = 0;          // integrand evaluations
  double truncation_radius = 0.0; // |s| beyond which the certified tail < tol/2
  double quadrature_error = 0.0;  // rule-pair estimate plus the certified tail
  bool decay_certified = false;
};

// Integral density at the point sigma:
//   prod_i Gamma(<D_i, sigma> + alpha_i) * exp(<theta + 2 pi i t, sigma>),
// evaluated in log space.  Throws AtPole on a polar hyperplane.
Complex integrand(const GlsmSpec& spec, const std::vector<Complex>& sigma,
                  const std::vector<Complex>& alpha, const ThetaParam& theta,
                  const std::vector<long long>& t);

// Rank-1 disk partition integral over the line sigma = delta + i s:
//   value = -(2 pi)^{-1} * Integral ds integrand(delta + i s),
// extended linearly over the brane.  The truncation radius S is chosen so
// the certified tail is below tol/2; the quadrature is refined until the
// rule-pair error estimate is below tol/2 as well.
// Throws BadDelta unless <D_i, delta> + Re alpha_i > 0 for every row, and
// NoDecay when the decay exponent is nonpositive for some brane character.
// When samples_out is non-null every evaluation (s, value) is recorded.
QuadratureResult mb_integral_1d(const GlsmSpec& spec, double delta, const ThetaParam& theta,
                                const Brane& brane, const std::vector<Complex>& alpha, double tol,
                                std::vector<std::pair<double, Complex>>* samples_out = nullptr);

// One residue-reduced line integral: J is an independent index set of size
// kappa-1, p a base point with <D_j, p> + alpha_j = -m_J[j] for j in J, and h
// an integer direction with <D_j, h> = 0 for all j in J.  Computes
//   prod_{j in J} (-1)^{m_j}/m_j! * (1/|det A|) *
//   -(2 pi)^{-1} Integral ds prod_{i not in J} Gamma(<D_i, p + i s h> + alpha_i)
//                            * exp(<theta + 2 pi i t, p + i s h>),
// where A has rows {D_j}_{j in J} and one integer row eta with <eta, h> = 1.
// For kappa = 1 and empty J this is mb_integral_1d with delta = p.
QuadratureResult line_integral_after_residues(
    const GlsmSpec& spec, const std::vector<int>& J, const std::vector<int>& m_J,
    const std::vector<Complex>& p, const QVec& h, const ThetaParam& theta, const Brane& brane,
    const std::vector<Complex>& alpha, double tol,
    std::vector<std::pair<double, Complex>>* samples_out = nullptr);

// The residue at sigma_m: chamber_term divided by the anticone's stabilizer
// order.  Shared between the series and contour bookkeeping.
Complex residue_value(const GlsmSpec& spec, const Anticone& I, const std::vector<int>& m,
                      const std::vector<Complex>& alpha, const ThetaParam& theta,
                      const std::vector<long long>& t);

// Integer vector eta with <eta, h> = 1 for a primitive integer h
// (extended-gcd construction); used for the line-integral volume factor.
QVec unit_pairing_vector(const QVec& h);

}  // namespace glsm
