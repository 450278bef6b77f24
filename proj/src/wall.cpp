#include "glsm/wall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "glsm/errors.hpp"
#include "glsm/series.hpp"

namespace glsm {

namespace {

std::string index_set_str(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << (idx[k] + 1);
  os << "}";
  return os.str();
}

std::string char_str(const std::vector<long long>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  os << ")";
  return os.str();
}

long long integer_pairing(const QVec& u, const QVec& v) {
  Rational r = pairing(u, v);
  if (den(r) != 1) throw Error(9, "expected an integer pairing");
  return static_cast<long long>(num(r));
}

// Gamma argument of one row at a point sigma.
Complex row_argument(const GlsmSpec& spec, int i, const std::vector<Complex>& p,
                     const std::vector<Complex>& alpha) {
  Complex x = alpha[i];
  for (int a = 0; a < spec.kappa; ++a) x += static_cast<double>(spec.charges[i][a]) * p[a];
  return x;
}

// One essential block: line integral at p(m_J) minus the ray corrections,
// with a deterministic retry over base-point offsets when p(m_J) lands on a
// polar hyperplane.
Complex block_value(const GlsmSpec& spec, const Circuit& circuit, const std::vector<int>& J,
                    const std::vector<int>& m_J, const ThetaParam& theta, const Brane& brane,
                    const std::vector<Complex>& alpha, double tol, double epsilon0) {
  std::vector<Complex> p;
  bool have_p = false;
  std::string last_reason;
  for (int attempt = 0; attempt < 20 && !have_p; ++attempt) {
    double e = epsilon0 + 0.137 * attempt;
    e -= std::floor(e);
    e = std::min(0.95, std::max(0.05, e));
    try {
      p = p_of_m(spec, circuit, J, m_J, e, alpha);
      have_p = true;
    } catch (const Resonant& r) {
      last_reason = r.what();
    }
  }
  if (!have_p)
    throw Resonant("no admissible base point for block " + index_set_str(J) +
                   " after 20 offsets; last failure: " + last_reason);

  QuadratureResult line =
      line_integral_after_residues(spec, J, m_J, p, circuit.h, theta, brane, alpha, tol);
  Complex corrections{0.0, 0.0};
  for (const auto& rc : ray_corrections(spec, circuit, J, m_J, p, brane, alpha, theta))
    corrections += rc.value;
  return line.value - corrections;
}

}  // namespace

Circuit circuit_of_wall(const GlsmSpec& spec, const QVec& zeta_plus, const QVec& zeta_minus) {
  Chamber cp = chamber_of(spec, zeta_plus);
  Chamber cm = chamber_of(spec, zeta_minus);

  std::vector<QVec> sep_plus, sep_minus;
  for (const auto& f : walls_of_chamber(spec, cp))
    if (pairing(zeta_minus, f.h) < 0) sep_plus.push_back(f.h);
  for (const auto& f : walls_of_chamber(spec, cm))
    if (pairing(zeta_plus, f.h) < 0) sep_minus.push_back(f.h);

  if (sep_plus.size() != 1 || sep_minus.size() != 1)
    throw NotAdjacent("chambers are separated by " +
                      std::to_string(std::max(sep_plus.size(), sep_minus.size())) +
                      " facets of one side, not exactly one");
  QVec h = sep_plus.front();
  QVec neg = sep_minus.front();
  for (auto& c : neg) c = -c;
  if (neg != h) throw NotAdjacent("the separating facets of the two chambers do not coincide");

  Circuit circuit;
  circuit.h = h;
  circuit.h_i.resize(spec.total());
  for (int i = 0; i < spec.total(); ++i) {
    long long v = integer_pairing(spec.charge_row(i), h);
    circuit.h_i[i] = v;
    if (v > 0)
      circuit.I_plus.push_back(i);
    else if (v < 0)
      circuit.I_minus.push_back(i);
  }
  if (circuit.I_plus.empty() || circuit.I_minus.empty())
    throw NotAdjacent("degenerate circuit: all rows on one side of the wall");
  return circuit;
}

WallData classify_anticones(const GlsmSpec& spec, const Circuit& circuit, const QVec& zeta_plus,
                            const QVec& zeta_minus) {
  WallData wall;
  wall.circuit = circuit;

  auto classify_side = [&](const QVec& zeta, bool plus_side, std::vector<Anticone>& essential,
                           std::vector<Anticone>& nonessential) {
    for (const auto& I : minimal_anticones(spec, zeta)) {
      int npos = 0, nneg = 0;
      for (int i : I.indices) {
        if (circuit.h_i[i] > 0) ++npos;
        if (circuit.h_i[i] < 0) ++nneg;
      }
      if (npos == 0 && nneg == 0)
        throw Unsupported("anticone " + index_set_str(I.indices) +
                          " is disjoint from the circuit support");
      if (npos > 0 && nneg > 0) {
        nonessential.push_back(I);
        continue;
      }
      int same_side = plus_side ? npos : nneg;
      int wrong_side = plus_side ? nneg : npos;
      if (wrong_side > 0)
        throw Unsupported("anticone " + index_set_str(I.indices) +
                          " of the " + (plus_side ? "positive" : "negative") +
                          " chamber meets only the opposite circuit side");
      if (same_side != 1)
        throw Unsupported("anticone " + index_set_str(I.indices) + " contains " +
                          std::to_string(same_side) + " same-sign circuit rows");
      essential.push_back(I);
    }
  };

  std::vector<Anticone> noness_plus, noness_minus;
  classify_side(zeta_plus, true, wall.essential_plus, noness_plus);
  classify_side(zeta_minus, false, wall.essential_minus, noness_minus);

  auto index_sets = [](const std::vector<Anticone>& v) {
    std::vector<std::vector<int>> s;
    s.reserve(v.size());
    for (const auto& a : v) s.push_back(a.indices);
    std::sort(s.begin(), s.end());
    return s;
  };
  if (index_sets(noness_plus) != index_sets(noness_minus))
    throw Unsupported("the nonessential anticones of the two chambers disagree");
  wall.nonessential = noness_plus;

  std::set<std::vector<int>> a0;
  auto strip_circuit_row = [&](const Anticone& I) {
    std::vector<int> J;
    for (int i : I.indices)
      if (circuit.h_i[i] == 0) J.push_back(i);
    return J;
  };
  for (const auto& I : wall.essential_plus) a0.insert(strip_circuit_row(I));
  for (const auto& I : wall.essential_minus) a0.insert(strip_circuit_row(I));
  wall.a0.assign(a0.begin(), a0.end());
  return wall;
}

GradeCheck grade_restriction(const Circuit& circuit, const std::vector<double>& B,
                             const std::vector<long long>& t) {
  double window = 0.0;
  for (long long v : circuit.h_i) window += std::fabs(static_cast<double>(v));
  window *= 0.25;
  double inner = 0.0;
  for (std::size_t a = 0; a < circuit.h.size(); ++a) {
    double Ba = a < B.size() ? B[a] : 0.0;
    double ta = a < t.size() ? static_cast<double>(t[a]) : 0.0;
    inner += (Ba + ta) * to_double(circuit.h[a]);
  }
  GradeCheck g;
  g.margin = window - std::fabs(inner);
  g.ok = g.margin > 0.0;
  return g;
}

Rational grade_margin_exact(const Circuit& circuit, const QVec& B,
                            const std::vector<long long>& t) {
  Rational window = 0;
  for (long long v : circuit.h_i) window += Rational(v < 0 ? -v : v);
  window /= 4;
  Rational inner = 0;
  for (std::size_t a = 0; a < circuit.h.size(); ++a) {
    Rational Ba = a < B.size() ? B[a] : Rational(0);
    Rational ta = a < t.size() ? Rational(t[a]) : Rational(0);
    inner += (Ba + ta) * circuit.h[a];
  }
  if (inner < 0) inner = -inner;
  return window - inner;
}

std::vector<Complex> p_of_m(const GlsmSpec& spec, const Circuit& circuit,
                            const std::vector<int>& J, const std::vector<int>& m_J,
                            double epsilon, const std::vector<Complex>& alpha) {
  if (static_cast<int>(J.size()) != spec.kappa - 1)
    throw Error(9, "base point: J must have size kappa - 1");
  if (m_J.size() != J.size()) throw Error(9, "base point: m_J must match J");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(3, "base point offset must lie strictly between 0 and 1");
  if (circuit.I_plus.empty()) throw Error(9, "base point: circuit has no positive rows");
  int i0 = circuit.I_plus.front();
  for (int j : J)
    if (circuit.h_i[j] != 0)
      throw Error(9, "base point: row " + std::to_string(j + 1) + " is in the circuit support");

  std::vector<int> rows_idx = J;
  rows_idx.push_back(i0);
  std::vector<QVec> duals = dual_basis(spec.charge_rows(rows_idx));

  std::vector<Complex> p(spec.kappa, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < rows_idx.size(); ++k) {
    Complex rhs = (k + 1 == rows_idx.size())
                      ? Complex{epsilon, 0.0} - alpha[i0]
                      : Complex{-static_cast<double>(m_J[k]), 0.0} - alpha[J[k]];
    for (int a = 0; a < spec.kappa; ++a) p[a] += rhs * to_double(duals[k][a]);
  }

  // Genericity: no remaining gamma argument may sit on Z_{<=0}.
  for (int i = 0; i < spec.total(); ++i) {
    if (i == i0 || std::find(J.begin(), J.end(), i) != J.end()) continue;
    Complex x = row_argument(spec, i, p, alpha);
    if (std::fabs(x.imag()) > 1e-9) continue;
    double k = std::round(-x.real());
    if (k > -0.5 && std::fabs(x.real() + k) < 1e-9)
      throw Resonant("base point places row " + std::to_string(i + 1) +
                     " on the pole at -" + std::to_string(static_cast<long long>(k)));
  }
  return p;
}

std::vector<RayCorrection> ray_corrections(const GlsmSpec& spec, const Circuit& circuit,
                                           const std::vector<int>& J, const std::vector<int>& m_J,
                                           const std::vector<Complex>& p, const Brane& brane,
                                           const std::vector<Complex>& alpha,
                                           const ThetaParam& theta) {
  std::vector<RayCorrection> out;
  for (int i = 0; i < spec.total(); ++i) {
    if (circuit.h_i[i] == 0) continue;  // J rows and spectators never cross
    double xre = row_argument(spec, i, p, alpha).real();
    int n_i = static_cast<int>(std::max(0.0, std::ceil(-xre)));
    if (n_i <= 0) continue;

    std::vector<int> idx = J;
    idx.push_back(i);
    std::sort(idx.begin(), idx.end());
    Anticone I = make_anticone(spec, idx);

    for (int k = 0; k < n_i; ++k) {
      std::vector<int> m(idx.size(), 0);
      for (std::size_t l = 0; l < idx.size(); ++l) {
        if (idx[l] == i) {
          m[l] = k;
        } else {
          auto it = std::find(J.begin(), J.end(), idx[l]);
          m[l] = m_J[static_cast<std::size_t>(it - J.begin())];
        }
      }
      Complex v{0.0, 0.0};
      for (const auto& [t, coeff] : brane.terms)
        v += coeff * residue_value(spec, I, m, alpha, theta, t);
      out.push_back(RayCorrection{I, m, v});
    }
  }
  return out;
}

WallResult wall_partition(const GlsmSpec& spec, const WallData& wall, const ThetaParam& theta,
                          const Brane& brane, const std::vector<Complex>& alpha, double tol,
                          double epsilon) {
  if (spec.kappa > 2) throw Unsupported("wall values are implemented for rank 1 and 2 only");

  WallResult result;
  if (brane.terms.empty()) return result;

  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& [t, coeff] : brane.terms) {
    GradeCheck g = grade_restriction(wall.circuit, theta.B, t);
    min_margin = std::min(min_margin, g.margin);
    if (!g.ok)
      throw GradeRestrictionViolated("character " + char_str(t) + " has window margin " +
                                     std::to_string(g.margin));
  }
  result.grr_margin = min_margin;

  const int kJ = spec.kappa - 1;
  for (const auto& J : wall.a0) {
    Complex block{0.0, 0.0};
    if (kJ == 0) {
      block = block_value(spec, wall.circuit, J, {}, theta, brane, alpha, tol, epsilon);
    } else {
      ComplexSum acc;
      std::vector<double> mags;
      int quiet = 0;
      bool settled = false;
      const int cap = 80;
      for (int m = 0; m <= cap; ++m) {
        Complex term = block_value(spec, wall.circuit, J, {m}, theta, brane, alpha, tol, epsilon);
        acc.add(term);
        mags.push_back(std::abs(term));
        double scale = std::max(1.0, std::abs(acc.get()));
        if (mags.back() > 1e100 * scale)
          throw NotConverging("essential block " + index_set_str(J) + " diverges");
        if (mags.back() < tol * scale) {
          if (++quiet >= 3) {
            double r = 0.0;
            std::size_t nmag = mags.size();
            for (std::size_t l = (nmag >= 4 ? nmag - 4 : 0); l + 1 < nmag; ++l)
              if (mags[l] > 0.0) r = std::max(r, mags[l + 1] / mags[l]);
            r = std::min(r, 0.9);
            double tail = mags.back() * r / (1.0 - r);
            if (tail <= tol * scale) {
              settled = true;
              break;
            }
          }
        } else {
          quiet = 0;
        }
      }
      if (!settled)
        throw NotConverging("essential block " + index_set_str(J) +
                            " did not settle within " + std::to_string(cap) + " classes");
      block = acc.get();
    }
    Complex signed_block = (kJ % 2 != 0) ? -block : block;
    result.essential_contributions.push_back({J, signed_block});
    result.value += signed_block;
  }

  const double sign = (spec.kappa % 2 != 0) ? -1.0 : 1.0;
  for (const auto& I : wall.nonessential) {
    SeriesResult series =
        sum_shells(spec.kappa, tol, default_max_shell(spec.kappa), [&](const std::vector<int>& m) {
          Complex v{0.0, 0.0};
          for (const auto& [t, coeff] : brane.terms)
            v += coeff * residue_value(spec, I, m, alpha, theta, t);
          return sign * v;
        });
    if (!series.converged)
      throw NotConverging("nonessential series " + index_set_str(I.indices) +
                          " did not converge within " +
                          std::to_string(default_max_shell(spec.kappa)) + " shells");
    result.nonessential_contributions.push_back({I.indices, series.value});
    result.value += series.value;
  }
  return result;
}

double find_delta_1d(const GlsmSpec& spec, const std::vector<Complex>& alpha) {
  if (spec.kappa != 1) throw Unsupported("contour offset scan is rank-1 only");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spec.total(); ++i) {
    double d = static_cast<double>(spec.charges[i][0]);
    double ar = alpha[i].real();
    if (d > 0.0)
      lo = std::max(lo, -ar / d);
    else if (d < 0.0)
      hi = std::min(hi, ar / (-d));
    else if (ar <= 0.0)
      throw BadDelta("row " + std::to_string(i + 1) +
                     " has nonpositive real part for every contour offset");
  }
  if (!(lo < hi)) throw BadDelta("empty positivity interval for the contour offset");
  if (!std::isfinite(lo)) lo = hi - 1.0;
  if (!std::isfinite(hi)) hi = lo + 1.0;
  return 0.5 * (lo + hi);
}

WallCrossReport wall_crossing_check(const GlsmSpec& spec, const QVec& zeta_plus,
                                    const QVec& zeta_minus, const std::vector<double>& B,
                                    const Brane& brane, const std::vector<Complex>& alpha,
                                    double tol) {
  WallCrossReport report;
  report.circuit = circuit_of_wall(spec, zeta_plus, zeta_minus);
  WallData wall = classify_anticones(spec, report.circuit, zeta_plus, zeta_minus);

  report.grr_ok = true;
  report.grr_margin = 0.0;
  bool first = true;
  for (const auto& [t, coeff] : brane.terms) {
    GradeCheck g = grade_restriction(report.circuit, B, t);
    report.grr_margin = first ? g.margin : std::min(report.grr_margin, g.margin);
    first = false;
    report.grr_ok = report.grr_ok && g.ok;
  }

  auto theta_at = [&](const QVec& zeta) {
    ThetaParam th;
    th.zeta.resize(spec.kappa);
    for (int a = 0; a < spec.kappa; ++a) th.zeta[a] = to_double(zeta[a]);
    th.B = B;
    th.B.resize(spec.kappa, 0.0);
    return th;
  };
  ThetaParam theta_plus = theta_at(zeta_plus);
  ThetaParam theta_minus = theta_at(zeta_minus);

  report.chamber_plus =
      chamber_partition(spec, chamber_of(spec, zeta_plus), theta_plus, brane, alpha, tol).value;
  report.chamber_minus =
      chamber_partition(spec, chamber_of(spec, zeta_minus), theta_minus, brane, alpha, tol).value;

  if (!report.grr_ok) {
    report.wall_refused = true;
    return report;
  }

  report.wall_plus = wall_partition(spec, wall, theta_plus, brane, alpha, tol).value;
  report.wall_minus = wall_partition(spec, wall, theta_minus, brane, alpha, tol).value;

  std::vector<double> gaps;
  gaps.push_back(std::abs(*report.wall_plus - report.chamber_plus));
  gaps.push_back(std::abs(*report.wall_minus - report.chamber_minus));

  if (spec.kappa == 1) {
    double delta = find_delta_1d(spec, alpha);
    report.mb_plus = mb_integral_1d(spec, delta, theta_plus, brane, alpha, tol).value;
    report.mb_minus = mb_integral_1d(spec, delta, theta_minus, brane, alpha, tol).value;
    gaps.push_back(std::abs(*report.mb_plus - report.chamber_plus));
    gaps.push_back(std::abs(*report.mb_minus - report.chamber_minus));
    gaps.push_back(std::abs(*report.mb_plus - *report.wall_plus));
    gaps.push_back(std::abs(*report.mb_minus - *report.wall_minus));

    ThetaParam theta_zero;
    theta_zero.zeta.assign(spec.kappa, 0.0);
    theta_zero.B = theta_plus.B;
    report.wall_zero = wall_partition(spec, wall, theta_zero, brane, alpha, tol).value;
    report.mb_zero = mb_integral_1d(spec, delta, theta_zero, brane, alpha, tol).value;
    gaps.push_back(std::abs(*report.wall_zero - *report.mb_zero));
  }
  report.max_discrepancy = *std::max_element(gaps.begin(), gaps.end());
  return report;
}

}  // namespace glsm
