#pragma once
// Exact rational linear algebra over the character/cocharacter lattices:
// pairings, dual bases, determinant indices with cyclic factors from the
// integer normal form, wedge-ratio signs, and the small exact feasibility
// solvers (Fourier-Motzkin) used by the cone combinatorics.

#include <optional>
#include <vector>

#include "glsm/rational.hpp"

namespace glsm {

// Order and cyclic decomposition of the finite stabilizer group attached to a
// square integer matrix: order = |det|, cyclic_factors = nontrivial diagonal
// entries d_1 | d_2 | ... of its integer normal form.
struct GroupStructure {
  Integer order{1};
  std::vector<Integer> cyclic_factors;  // each > 1, successively dividing
};

// <u, v> = sum_a u_a v_a.  Contracts a character with a cocharacter.
Rational pairing(const QVec& u, const QVec& v);

// Given kappa independent character rows, returns the cocharacter vectors
// dual to them: pairing(rows[i], result[j]) == delta_ij.  Throws
// SingularBasis when the rows are dependent.
std::vector<QVec> dual_basis(const std::vector<QVec>& rows);

// Integer normal form data for a square integer matrix given as rational rows
// (entries must be integers).  Throws SingularBasis when det == 0.
GroupStructure det_index(const std::vector<QVec>& rows);

// Sign of det(numerator_basis) / det(denominator_basis); 0 iff the numerator
// is singular.  Throws DivisionByZero when the denominator is singular.
int sign_wedge(const std::vector<QVec>& numerator_basis,
               const std::vector<QVec>& denominator_basis);

// ---------------------------------------------------------------------------
// Supporting exact solvers (shared plumbing for the cone combinatorics).
// ---------------------------------------------------------------------------

// Determinant of a square rational matrix (rows).
Rational det(const std::vector<QVec>& rows);

// Rank of a rational matrix (rows of equal length).
std::size_t rank(const std::vector<QVec>& rows);

// Unique coefficients a with target = sum_i a_i * gens[i], when target lies in
// the span of the (independent) generators; nullopt when it does not.
// Throws SingularBasis if the generators are dependent.
std::optional<std::vector<Rational>> coords_in_span(const std::vector<QVec>& gens,
                                                    const QVec& target);

// Solves the square system: sum_j x_j * rows[j][a] = rhs[a] for all a
// (i.e. x^T * M = rhs with M's rows given).  Throws SingularBasis.
QVec solve_left(const std::vector<QVec>& rows, const QVec& rhs);

// Basis of { v : pairing(rows[i], v) = 0 for all i }.
std::vector<QVec> kernel_basis(const std::vector<QVec>& rows);

// Exact feasibility of { x : sum_j A[i][j] x_j >= b[i] for all i } by
// Fourier-Motzkin elimination.  Intended for the desk-scale systems that
// arise from cone data (tens of constraints, rank <= 12).
bool fm_feasible(const std::vector<QVec>& A, const std::vector<Rational>& b);

// Feasibility of the same system restricted to the hyperplane
// { x : sum_j n_j x_j = 0 } (used for facet identification).
bool fm_feasible_on_hyperplane(const std::vector<QVec>& A,
                               const std::vector<Rational>& b, const QVec& n);

// True iff some nonzero nonnegative rational combination of the rows is zero
// (decided via the dual strict-positivity system).
bool has_nonneg_relation(const std::vector<QVec>& rows);

// Scales a rational vector to a primitive integer vector with the same
// direction (first nonzero entry's sign preserved).  Zero vector -> zero.
QVec primitive(const QVec& v);

}  // namespace glsm
