#pragma once
// Error taxonomy shared by all modules.  Every error carries a stable
// process exit code so the command-line driver can map failures without
// string matching.

#include <stdexcept>
#include <string>

namespace glsm {

// Exit codes (also documented in README.md):
//   0 success
//   2 command-line / file parse errors
//   3 input validation errors (bad spec, singular data, unusable parameters)
//   4 stability parameter on a cone wall
//   5 resonance / gamma-pole configurations
//   6 no convergence certificate (series, integral decay, or mesh test)
//   7 brane outside the admissible window for wall continuation
//   8 requested computation outside the supported range
//   9 internal errors
struct Error : std::runtime_error {
  int exit_code;
  Error(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
};

// --- exact linear algebra ---------------------------------------------------
struct SingularBasis : Error {
  explicit SingularBasis(const std::string& w = "singular basis: determinant is zero") : Error(3, w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w = "sign of wedge ratio: denominator basis is singular") : Error(3, w) {}
};

// --- spec validation / phase combinatorics ---------------------------------
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& w = "charge rows do not span the character space") : Error(3, w) {}
};
struct BadRCharge : Error {
  explicit BadRCharge(const std::string& w = "R-charges must be nonnegative rationals") : Error(3, w) {}
};
struct OnWall : Error {
  explicit OnWall(const std::string& w = "stability parameter lies on a cone wall") : Error(4, w) {}
};

// --- gamma numerics ---------------------------------------------------------
struct AtPole : Error {
  explicit AtPole(const std::string& w = "gamma argument within pole tolerance of a nonpositive integer") : Error(5, w) {}
};
struct OutsideStrip : Error {
  explicit OutsideStrip(const std::string& w = "real part outside the certified strip for the gamma bound") : Error(3, w) {}
};

// --- residue series ---------------------------------------------------------
struct Resonant : Error {
  explicit Resonant(const std::string& w = "resonant parameters: a gamma argument hits a nonpositive integer") : Error(5, w) {}
};
struct NotConverging : Error {
  explicit NotConverging(const std::string& w = "series shows no certified convergence at the shell cap") : Error(6, w) {}
};
struct Inconclusive : Error {
  explicit Inconclusive(const std::string& w = "convergence predicate inconclusive: sphere minimum within mesh resolution of zero") : Error(6, w) {}
};
struct ZeroZ : Error {
  explicit ZeroZ(const std::string& w = "z must be nonzero") : Error(3, w) {}
};
struct UnitCircleQ : Error {
  explicit UnitCircleQ(const std::string& w = "|q| must differ from 1") : Error(3, w) {}
};
struct VanishingFactor : Error {
  explicit VanishingFactor(const std::string& w = "a denominator factor of a q-product vanishes") : Error(3, w) {}
};

// --- contour integrals ------------------------------------------------------
struct NoDecay : Error {
  explicit NoDecay(const std::string& w = "no certified exponential decay along the contour") : Error(6, w) {}
};
struct BadDelta : Error {
  explicit BadDelta(const std::string& w = "contour offset violates the positivity condition") : Error(3, w) {}
};

// --- wall crossing ----------------------------------------------------------
struct NotAdjacent : Error {
  explicit NotAdjacent(const std::string& w = "chambers are not adjacent along a single wall") : Error(3, w) {}
};
struct GradeRestrictionViolated : Error {
  explicit GradeRestrictionViolated(const std::string& w = "brane character outside the admissible window") : Error(7, w) {}
};
struct Unsupported : Error {
  explicit Unsupported(const std::string& w = "requested computation outside the supported range") : Error(8, w) {}
};

// --- CLI --------------------------------------------------------------------
struct ParseError : Error {
  explicit ParseError(const std::string& w = "parse error") : Error(2, w) {}
};

}  // namespace glsm
