#include "glsm/coulomb.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace glsm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficient c(x) of the certified line bound
//   |Gamma(x + i y)| <= c(x) * |y|^{x - 1/2} * e^{-pi |y| / 2}   for |y| >= 1.
// For x >= 1/2 this follows from the Stirling-side bound with |z| <= (1+x)|y|;
// for x < 1/2 from the reflection formula with sinh(pi|y|) >= 0.499 e^{pi|y|}
// and a certified lower bound for |Gamma(1 - x - i y)|.
double gamma_line_bound_coeff(double x) {
  if (x >= 0.5) return std::sqrt(2.0 * kPi) * std::exp(1.0 / 3.0) *
                       std::pow(1.0 + x, std::max(x - 0.5, 0.0));
  return 3.51 * std::exp(1.0 - x);
}

// Log-space product of gammas over the non-exempt rows plus the linear factor.
Complex integrand_exempt(const GlsmSpec& spec, const std::vector<char>& skip,
                         const std::vector<Complex>& sigma, const std::vector<Complex>& alpha,
                         const ThetaParam& theta, const std::vector<long long>& t) {
  Complex log_acc{0.0, 0.0};
  for (int i = 0; i < spec.total(); ++i) {
    if (skip[i]) continue;
    Complex x = alpha[i];
    for (int a = 0; a < spec.kappa; ++a)
      x += static_cast<double>(spec.charges[i][a]) * sigma[a];
    log_acc += log_gamma(x).value;
  }
  for (int a = 0; a < spec.kappa; ++a) {
    double ta = t.empty() ? 0.0 : static_cast<double>(t[a]);
    Complex theta_a{theta.zeta[a], 2.0 * kPi * (theta.B[a] + ta)};
    log_acc += theta_a * sigma[a];
  }
  return std::exp(log_acc);
}

struct TailCertificate {
  double C = 0.0;       // amplitude of the envelope C (1+s)^P e^{-c s}
  double P = 0.0;       // polynomial degree
  double c = 0.0;       // decay exponent
  double s_min = 1.0;   // envelope valid for |s| >= s_min
};

// Certified envelope of |prefactor * integrand| along sigma(s) = p + i s h.
TailCertificate line_envelope(const GlsmSpec& spec, const std::vector<char>& skip,
                              const std::vector<Complex>& p, const std::vector<double>& h,
                              const std::vector<Complex>& alpha, const ThetaParam& theta,
                              const std::vector<long long>& t, double prefactor_mag) {
  TailCertificate cert;
  std::vector<double> tvec(spec.kappa, 0.0);
  for (int a = 0; a < spec.kappa; ++a) tvec[a] = t.empty() ? 0.0 : static_cast<double>(t[a]);
  std::vector<int> exempt;
  for (int i = 0; i < spec.total(); ++i)
    if (skip[i]) exempt.push_back(i);
  cert.c = decay_exponent(spec, exempt, h, theta.B, tvec);

  double logC = std::log(prefactor_mag) - std::log(2.0 * kPi);
  // |exp(<theta + 2 pi i (B+t), p>)|
  Complex lin{0.0, 0.0};
  for (int a = 0; a < spec.kappa; ++a) {
    Complex theta_a{theta.zeta[a], 2.0 * kPi * (theta.B[a] + tvec[a])};
    lin += theta_a * p[a];
  }
  logC += lin.real();

  cert.s_min = 1.0;
  for (int i = 0; i < spec.total(); ++i) {
    if (skip[i]) continue;
    double slope = 0.0, xre = 0.0, xim = 0.0;
    Complex arg0 = alpha[i];
    for (int a = 0; a < spec.kappa; ++a) {
      slope += static_cast<double>(spec.charges[i][a]) * h[a];
      arg0 += static_cast<double>(spec.charges[i][a]) * p[a];
    }
    xre = arg0.real();
    xim = arg0.imag();
    double aslope = std::fabs(slope);
    if (aslope == 0.0) {
      // Constant-argument row: exact magnitude along the whole contour.
      logC += log_gamma(Complex{xre, xim}).value.real();
      continue;
    }
    // |y_i(s)| >= aslope*|s| - |xim|; require >= 1 from s_min on.
    cert.s_min = std::max(cert.s_min, (1.0 + std::fabs(xim)) / aslope);
    double Pi_row = std::max(xre - 0.5, 0.0);
    cert.P += Pi_row;
    logC += std::log(gamma_line_bound_coeff(xre));
    logC += Pi_row * std::log(std::max(aslope, std::fabs(xim)) + 1e-300);
    logC += 0.5 * kPi * std::fabs(xim);  // e^{-pi|y|/2} <= e^{pi|xim|/2} e^{-pi a|s|/2}
  }
  cert.C = std::exp(logC);
  return cert;
}

// Certified bound for the two-sided tail beyond radius S.
double tail_bound(const TailCertificate& cert, double S) {
  double margin = cert.c - cert.P / (1.0 + S);
  if (margin <= 0.0) return HUGE_VAL;
  return 2.0 * cert.C * std::pow(1.0 + S, cert.P) * std::exp(-cert.c * S) / margin;
}

QuadratureResult integrate_line(const GlsmSpec& spec, const std::vector<char>& skip,
                                const std::vector<Complex>& p, const std::vector<double>& h,
                                const ThetaParam& theta, const Brane& brane,
                                const std::vector<Complex>& alpha, double tol,
                                double prefactor_mag, Complex prefactor,
                                std::vector<std::pair<double, Complex>>* samples_out) {
  QuadratureResult out;
  out.decay_certified = true;
  double tail_total = 0.0;
  double quad_total = 0.0;

  for (const auto& [t, coeff] : brane.terms) {
    TailCertificate cert =
        line_envelope(spec, skip, p, h, alpha, theta, t, prefactor_mag * std::abs(coeff));
    if (cert.c <= 0.0) {
      std::ostringstream os;
      os << "no certified contour decay for brane character (decay exponent " << cert.c << ")";
      throw NoDecay(os.str());
    }
    double S = std::max({cert.s_min, 2.0 * (cert.P + 1.0) / cert.c, 5.0});
    for (int it = 0; it < 200 && tail_bound(cert, S) > tol / 2.0; ++it) S *= 1.5;
    double tb = tail_bound(cert, S);
    out.truncation_radius = std::max(out.truncation_radius, S);

    long long count = 0;
    auto f = [&](double s) -> Complex {
      ++count;
      std::vector<Complex> sigma(spec.kappa);
      for (int a = 0; a < spec.kappa; ++a) sigma[a] = p[a] + Complex{0.0, s} * h[a];
      Complex v = integrand_exempt(spec, skip, sigma, alpha, theta, t);
      if (samples_out) samples_out->emplace_back(s, v);
      return v;
    };
    double err = 0.0;
    Complex integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, -S, S, 15, std::max(tol / 4.0, 1e-14), &err);
    out.samples += count;
    out.value += coeff * prefactor * (-1.0 / (2.0 * kPi)) * integral;
    tail_total += tb;
    quad_total += err;
  }
  out.quadrature_error = quad_total + tail_total;
  return out;
}

}  // namespace

Complex integrand(const GlsmSpec& spec, const std::vector<Complex>& sigma,
                  const std::vector<Complex>& alpha, const ThetaParam& theta,
                  const std::vector<long long>& t) {
  std::vector<char> skip(spec.total(), 0);
  return integrand_exempt(spec, skip, sigma, alpha, theta, t);
}

QuadratureResult mb_integral_1d(const GlsmSpec& spec, double delta, const ThetaParam& theta,
                                const Brane& brane, const std::vector<Complex>& alpha, double tol,
                                std::vector<std::pair<double, Complex>>* samples_out) {
  if (spec.kappa != 1)
    throw Unsupported("the direct disk partition integral is implemented for gauge rank 1");
  for (int i = 0; i < spec.total(); ++i) {
    double x = static_cast<double>(spec.charges[i][0]) * delta + alpha[i].real();
    if (x <= 0.0) {
      std::ostringstream os;
      os << "contour offset invalid: <D_" << i + 1 << ", delta> + Re alpha = " << x << " <= 0";
      throw BadDelta(os.str());
    }
  }
  if (brane.terms.empty()) {
    QuadratureResult zero;
    zero.decay_certified = true;
    return zero;
  }
  std::vector<char> skip(spec.total(), 0);
  std::vector<Complex> p{Complex{delta, 0.0}};
  std::vector<double> h{1.0};
  return integrate_line(spec, skip, p, h, theta, brane, alpha, tol, 1.0, Complex{1.0, 0.0},
                        samples_out);
}

QVec unit_pairing_vector(const QVec& h) {
  // Extended gcd across the integer entries of h.
  Integer g = 0;
  std::vector<Integer> coeff(h.size(), 0);
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (!is_integer(h[a])) throw Error(9, "unit_pairing_vector: non-integer direction");
    Integer v = num(h[a]);
    if (v == 0) continue;
    if (g == 0) {
      g = v < 0 ? Integer(-v) : v;
      coeff.assign(h.size(), Integer(0));
      coeff[a] = v < 0 ? Integer(-1) : Integer(1);
      continue;
    }
    // g' = gcd(g, v) = x*g + y*v via the classical iteration.
    Integer old_r = g, r = v < 0 ? Integer(-v) : v;
    Integer old_x = 1, xq = 0;
    while (r != 0) {
      Integer q = old_r / r;
      Integer tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_x - q * xq;
      old_x = xq;
      xq = tmp;
    }
    // old_r = gcd, old_x * g + y * |v| = old_r with y recovered below.
    Integer y = (old_r - old_x * g) / (v < 0 ? Integer(-v) : v);
    for (auto& cval : coeff) cval *= old_x;
    coeff[a] = (v < 0 ? Integer(-y) : y);
    g = old_r;
  }
  if (g != 1) throw Error(9, "unit_pairing_vector: direction is not primitive");
  QVec eta(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) eta[a] = Rational(coeff[a]);
  return eta;
}

QuadratureResult line_integral_after_residues(
    const GlsmSpec& spec, const std::vector<int>& J, const std::vector<int>& m_J,
    const std::vector<Complex>& p, const QVec& h, const ThetaParam& theta, const Brane& brane,
    const std::vector<Complex>& alpha, double tol,
    std::vector<std::pair<double, Complex>>* samples_out) {
  if (static_cast<int>(J.size()) != spec.kappa - 1)
    throw Error(9, "line integral: J must have size kappa - 1");
  if (J.size() != m_J.size()) throw Error(9, "line integral: m_J size mismatch");
  for (int j : J)
    if (pairing(spec.charge_row(j), h) != 0)
      throw Error(9, "line integral: direction must annihilate the rows of J");
  if (brane.terms.empty()) {
    QuadratureResult zero;
    zero.decay_certified = true;
    return zero;
  }

  // Volume factor |det A| with A = rows {D_j} plus eta, <eta, h> = 1.
  std::vector<QVec> rows = spec.charge_rows(J);
  rows.push_back(unit_pairing_vector(h));
  Rational dA = det(rows);
  if (dA == 0) throw Error(9, "line integral: degenerate row system");
  double inv_detA = 1.0 / std::fabs(to_double(dA));

  double sign = 1.0;
  double log_fact = 0.0;
  for (std::size_t k = 0; k < m_J.size(); ++k) {
    if (m_J[k] % 2) sign = -sign;
    log_fact += std::lgamma(static_cast<double>(m_J[k]) + 1.0);
  }
  Complex prefactor = sign * inv_detA * std::exp(-log_fact);

  std::vector<char> skip(spec.total(), 0);
  for (int j : J) skip[j] = 1;
  std::vector<double> hd(spec.kappa);
  for (int a = 0; a < spec.kappa; ++a) hd[a] = to_double(h[a]);

  return integrate_line(spec, skip, p, hd, theta, brane, alpha, tol, std::abs(prefactor),
                        prefactor, samples_out);
}

Complex residue_value(const GlsmSpec& spec, const Anticone& I, const std::vector<int>& m,
                      const std::vector<Complex>& alpha, const ThetaParam& theta,
                      const std::vector<long long>& t) {
  double inv_det = 1.0 / I.group.order.convert_to<double>();
  return inv_det * chamber_term(spec, I, m, alpha, theta, t);
}

}  // namespace glsm
