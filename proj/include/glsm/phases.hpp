#pragma once
// Phase combinatorics: minimal anticones, chambers and their walls, the
// finite box classes with ages and narrowness, and the equivariant
// restriction weights at torus fixed points.

#include <string>
#include <vector>

#include "glsm/spec.hpp"

namespace glsm {

struct Anticone {
  std::vector<int> indices;     // 0-based row indices, sorted, size kappa
  std::vector<QVec> dual;       // dual[k]: cocharacter with <D_{indices[l]}, dual[k]> = delta_lk
  GroupStructure group;
};

struct Chamber {
  std::vector<Anticone> min_anticones;  // sorted by index set
  QVec rep_zeta;                        // the interior point the chamber was built from
};

struct BoxElement {
  QVec gamma;               // kappa rationals in [0,1): class in the rational cocharacter torus
  std::vector<Rational> f;  // n+kappa fractional pairings f_i = frac(<D_i, gamma>)
  Rational age;             // sum of f_i
  bool narrow = false;
};

struct WallFacet {
  QVec h;                   // primitive integer normal, <zeta_C, h> > 0 for the owning chamber
  std::string description;
};

struct FixedPointWeights {
  Anticone anticone;
  // Row j: rational coefficients of lambda_1..lambda_{n+kappa} in the
  // restricted coordinate weight u_j.  Zero row for j in the anticone.
  std::vector<QVec> u_weights;
  // Row a: coefficients of lambda in the restricted basis weight p_a.
  std::vector<QVec> p_weights;
  // Row j: exponents of the multiplicative parameters Lambda_l in the
  // restricted K-theory weight U_j.  Numerically equal to u_weights.
  std::vector<QVec> k_exponents;
};

// All size-kappa index sets I with independent rows covering zeta with
// strictly positive coefficients.  Throws OnWall when zeta admits a covering
// with a zero coefficient (it then lies on a cone wall).
std::vector<Anticone> minimal_anticones(const GlsmSpec& spec, const QVec& zeta);

Chamber chamber_of(const GlsmSpec& spec, const QVec& zeta);
bool contains(const GlsmSpec& spec, const Chamber& chamber, const QVec& zeta);

// Facets of the chamber closure, each with its primitive inward normal.
std::vector<WallFacet> walls_of_chamber(const GlsmSpec& spec, const Chamber& chamber);

// Deduplicated box classes over all minimal anticones at zeta, sorted by age
// then lexicographic representative; gamma = 0 is always present.
std::vector<BoxElement> box_elements(const GlsmSpec& spec, const QVec& zeta);

// Box classes attached to one anticone (those with f_i = 0 on its index set).
std::vector<BoxElement> box_elements_of_anticone(const GlsmSpec& spec, const Anticone& I);

// True iff the component indexed by the box class is compact: no nonzero
// nonnegative combination of the rows { D_i : f_i(box) = 0 } vanishes.
bool narrowness(const GlsmSpec& spec, const QVec& zeta, const BoxElement& box);

FixedPointWeights fixed_point_weights(const GlsmSpec& spec, const Anticone& I);

// Builds the anticone on the given (0-based, sorted) index set, checking
// independence; used when the caller supplies the fixed point directly.
Anticone make_anticone(const GlsmSpec& spec, const std::vector<int>& indices);

}  // namespace glsm
