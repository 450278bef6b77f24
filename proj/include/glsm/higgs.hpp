#pragma once
// Residue-series side of the correspondence: chamber hemisphere partition
// functions, equivariant central charges, effective-class enumeration,
// cohomological and K-theoretic generating-series values at fixed points,
// and the growth-vector convergence predicate.

#include <map>
#include <vector>

#include "glsm/cgamma.hpp"
#include "glsm/phases.hpp"
#include "glsm/series.hpp"

namespace glsm {

// Finite integer combination of gauge characters.
struct Brane {
  // Each term: integer character t (length kappa) with a complex coefficient.
  std::vector<std::pair<std::vector<long long>, Complex>> terms;

  static Brane single(std::vector<long long> t, Complex c = 1.0) {
    Brane b;
    b.terms.push_back({std::move(t), c});
    return b;
  }
};

struct ThetaParam {
  std::vector<double> zeta;  // Re theta
  std::vector<double> B;     // Im theta / (2 pi)
};

struct EffectiveClass {
  Anticone anticone;
  std::vector<int> m;       // kappa nonnegative integers (coordinates on the anticone)
  QVec beta;                // kappa rationals: beta = sum_i (m_i + q_i/2) dual_i
  std::vector<Rational> d;  // n+kappa degrees d_j = <D_j, beta> - q_j/2; d_i = m_i on I
};

// sigma_m = - sum_{i in I} (m_i + alpha_i) * dual_i  (complex cocharacter).
std::vector<Complex> sigma_m(const Anticone& I, const std::vector<int>& m,
                             const std::vector<Complex>& alpha);

// One residue-series term (no stabilizer factor):
//   prod_{i' not in I} Gamma(<D_i', sigma_m> + alpha_i')
//   * prod_{i in I} (-1)^{m_i}/m_i!  * exp(<theta + 2 pi i t, sigma_m>).
// Throws Resonant when a gamma argument is within pole tolerance of Z_{<=0}.
Complex chamber_term(const GlsmSpec& spec, const Anticone& I, const std::vector<int>& m,
                     const std::vector<Complex>& alpha, const ThetaParam& theta,
                     const std::vector<long long>& t);

// Full chamber series: (-1)^kappa * sum over minimal anticones of
// (1/|det|) sum_m chamber_term, extended linearly over the brane.
// max_shell <= 0 selects the rank-dependent default (400 for rank 1, 120
// for rank 2, 60 above).
SeriesResult chamber_partition(const GlsmSpec& spec, const Chamber& chamber,
                               const ThetaParam& theta, const Brane& brane,
                               const std::vector<Complex>& alpha, double tol,
                               int max_shell = 0, int threads = 1);

// Growth pairing <log Psi(sigma), sigma> = sum_j t_j log|t_j| with
// t_j = <D_j, sigma> and the convention 0*log 0 = 0.
double horn_vector_log(const GlsmSpec& spec, const Anticone& I, const std::vector<double>& sigma);

// True iff <zeta, sigma> + horn_vector_log(sigma) > 0 on the whole unit
// sphere of the anticone's dual cone, decided on a refined deterministic
// mesh with an explicit modulus-of-continuity margin.  Throws Inconclusive
// when the minimum cannot be separated from zero.  The signed sphere minimum
// is written to *margin_out when non-null.
bool convergence_contains(const GlsmSpec& spec, const Anticone& I, const std::vector<double>& zeta,
                          double* margin_out = nullptr);

// All effective classes with |m| <= degree_cutoff on the anticone.
std::vector<EffectiveClass> effective_classes(const GlsmSpec& spec, const Anticone& I,
                                              int degree_cutoff);

// Values of the cohomological generating series at the fixed point, grouped
// by box class (all effective classes with |m| <= cutoff).  Returned in the
// order of box_elements_of_anticone.
std::vector<std::pair<BoxElement, Complex>> i_function_fixed_point(
    const GlsmSpec& spec, const QVec& zeta, const Anticone& I,
    const std::vector<Complex>& lambda, Complex z, const std::vector<Complex>& log_y, int cutoff);

// K-theoretic counterpart: finite q-product factors per class.
std::vector<std::pair<BoxElement, Complex>> k_i_function_fixed_point(
    const GlsmSpec& spec, const QVec& zeta, const Anticone& I,
    const std::vector<Complex>& Lambda, Complex q, const std::vector<Complex>& y, int cutoff);

// The exponents e appearing in the finite q-product for one degree d:
// factor = prod (1 - U q^e) over num_exponents / prod over den_exponents.
void k_factor_exponents(const Rational& d, std::vector<Rational>& num_exponents,
                        std::vector<Rational>& den_exponents);

// Equivariant central charge as a function of z:
//   (-1)^kappa sum_I (1/|det|) sum_m prod_{i' not in I} Gamma(x_i') z^{x_i'}
//     * prod_{i in I} (-z)^{-m_i}/m_i! * exp(<theta + 2 pi i t, sigma_m>),
// with x_i = <D_i, sigma_m> + alpha_i, alpha_j = lambda_j / z + q_j / 2 and
// theta = - sum_a log_y[a] * (basis character a).  At z = 1 this is the
// chamber series term by term.
SeriesResult central_charge_equivariant(const GlsmSpec& spec, const QVec& zeta,
                                        const std::vector<Complex>& log_y,
                                        const std::vector<Complex>& lambda, Complex z,
                                        const std::vector<long long>& t, double tol = 1e-10,
                                        int max_shell = 0);

// Exact resonance pre-screen for the chamber series: scans all gamma
// arguments x_{i'}(m) = <D_i', sigma_m> + alpha_i' for |m| <= max_shell and
// throws Resonant naming the offending (anticone, row, m) when one lies in
// Z_{<=0} exactly (treating the given doubles as exact rationals).
void screen_resonances(const GlsmSpec& spec, const std::vector<Anticone>& anticones,
                       const std::vector<Complex>& alpha, int max_shell);

int default_max_shell(int kappa);

}  // namespace glsm
