#pragma once
// Exact rational scalar type and small helpers used throughout the project.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "glsm/errors.hpp"

namespace glsm {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Vectors over the rationals.  The same representation is used for characters
// (weight rows D_i, stability parameters) and cocharacters (dual-basis
// vectors, wall normals, degree classes); the pairing below contracts one of
// each.  Lengths always equal the rank of the gauge torus.
using QVec = std::vector<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor of a rational as an Integer (denominator is positive by invariant).
inline Integer rfloor(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Integer rceil(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

// Fractional part in [0, 1).
inline Rational rfrac(const Rational& r) { return r - Rational(rfloor(r)); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Parses "p/q", "p", or a plain decimal such as "-1.25" into an exact value.
// Decimal strings are expanded exactly (digits over a power of ten).
Rational rational_from_string(const std::string& s);

// The exact rational value of a finite double (every finite double is a
// dyadic rational).  Used by the resonance pre-screens, which must decide
// integrality of pole locations exactly.
Rational exact_rational(double x);

// Canonical form "p/q" (or "p" when the denominator is one).
std::string rational_to_string(const Rational& r);

}  // namespace glsm
