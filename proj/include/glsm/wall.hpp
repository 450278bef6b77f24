#pragma once
// Wall-crossing machinery: circuits of adjacent chambers, the essential /
// nonessential split of minimal anticones, the grade restriction rule, the
// wall hemisphere partition function (line integrals plus ray corrections
// plus nonessential residue series), and the end-to-end crossing check.

#include <optional>
#include <vector>

#include "glsm/coulomb.hpp"
#include "glsm/higgs.hpp"
#include "glsm/phases.hpp"

namespace glsm {

struct Circuit {
  QVec h;                        // primitive integer normal, <zeta_plus, h> > 0
  std::vector<long long> h_i;    // pairings <D_i, h>
  std::vector<int> I_plus;       // 0-based rows with h_i > 0
  std::vector<int> I_minus;      // 0-based rows with h_i < 0
};

struct WallData {
  Circuit circuit;
  std::vector<std::vector<int>> a0;   // index sets J of size kappa-1 (sorted)
  std::vector<Anticone> essential_plus;
  std::vector<Anticone> essential_minus;
  std::vector<Anticone> nonessential;  // identical on both sides
};

struct GradeCheck {
  bool ok = false;
  double margin = 0.0;  // sum_i |h_i| / 4 - |<B + t, h>|
};

struct RayCorrection {
  Anticone anticone;    // J together with the crossed row
  std::vector<int> m;   // class coordinates aligned with anticone.indices
  Complex value;        // residue value summed over the brane
};

struct WallResult {
  Complex value{0.0, 0.0};
  double grr_margin = 0.0;  // minimum over brane characters
  // Per-J essential block values (with their global sign applied) and
  // per-anticone nonessential series values.
  std::vector<std::pair<std::vector<int>, Complex>> essential_contributions;
  std::vector<std::pair<std::vector<int>, Complex>> nonessential_contributions;
  std::optional<Complex> chamber_plus_value;   // filled by the crossing check
  std::optional<Complex> chamber_minus_value;
};

struct WallCrossReport {
  Circuit circuit;
  bool grr_ok = false;
  double grr_margin = 0.0;
  bool wall_refused = false;  // grade restriction failed: wall path skipped
  Complex chamber_plus{0.0, 0.0};
  Complex chamber_minus{0.0, 0.0};
  std::optional<Complex> mb_plus, mb_minus, mb_zero;        // rank 1 only
  std::optional<Complex> wall_plus, wall_minus, wall_zero;  // wall value at the probe points
  double max_discrepancy = 0.0;  // largest pairwise gap among same-point values
};

// The circuit of the shared facet between the chambers of the two stability
// parameters.  Throws NotAdjacent when the chambers do not share a facet.
Circuit circuit_of_wall(const GlsmSpec& spec, const QVec& zeta_plus, const QVec& zeta_minus);

// Essential/nonessential partition of the minimal anticones on both sides.
// Throws Unsupported when an anticone contains two same-sign circuit rows or
// the nonessential sets of the two sides disagree.
WallData classify_anticones(const GlsmSpec& spec, const Circuit& circuit, const QVec& zeta_plus,
                            const QVec& zeta_minus);

// Window test |<B + t, h>| < sum_i |h_i| / 4 for one character.
GradeCheck grade_restriction(const Circuit& circuit, const std::vector<double>& B,
                             const std::vector<long long>& t);

// Exact-rational margin for rational B (used where exact equality is checked).
Rational grade_margin_exact(const Circuit& circuit, const QVec& B,
                            const std::vector<long long>& t);

// Base point with <D_j, p> + alpha_j = -m_j for j in J and
// <D_{i0}, p> + alpha_{i0} = epsilon for the smallest i0 in I_plus, so that
// all base points lie on one affine hyperplane.  Throws Resonant when p lands
// on another polar hyperplane (callers retry with a fresh epsilon).
std::vector<Complex> p_of_m(const GlsmSpec& spec, const Circuit& circuit,
                            const std::vector<int>& J, const std::vector<int>& m_J,
                            double epsilon, const std::vector<Complex>& alpha);

// Residues collected between the base point and the convergent half-planes:
// for each row i outside J with <D_i, h> != 0, the classes with
// Re(<D_i, p> + alpha_i) + k < 0, k = 0 .. n_i - 1.
std::vector<RayCorrection> ray_corrections(const GlsmSpec& spec, const Circuit& circuit,
                                           const std::vector<int>& J, const std::vector<int>& m_J,
                                           const std::vector<Complex>& p, const Brane& brane,
                                           const std::vector<Complex>& alpha,
                                           const ThetaParam& theta);

// Wall hemisphere partition function:
//   sum over J in A^0 of (-1)^{|J|} sum_{m_J} [ line integral at p(m_J)
//     - ray corrections ]  +  (-1)^kappa sum over nonessential anticones of
//   their residue series.
// Throws GradeRestrictionViolated before any summation when a brane
// character fails the window test.  Rank <= 2 only.
WallResult wall_partition(const GlsmSpec& spec, const WallData& wall, const ThetaParam& theta,
                          const Brane& brane, const std::vector<Complex>& alpha, double tol,
                          double epsilon = 0.3);

// End-to-end crossing check: chamber series on both sides, the wall value at
// both probe points, and (rank 1) the disk partition integrals, with the
// largest pairwise discrepancy.  A failed grade restriction yields a report
// with wall_refused = true and chamber values only.
WallCrossReport wall_crossing_check(const GlsmSpec& spec, const QVec& zeta_plus,
                                    const QVec& zeta_minus, const std::vector<double>& B,
                                    const Brane& brane, const std::vector<Complex>& alpha,
                                    double tol);

// Midpoint of the rank-1 positivity interval { delta : <D_i,delta> + Re alpha_i > 0 }.
double find_delta_1d(const GlsmSpec& spec, const std::vector<Complex>& alpha);

}  // namespace glsm
