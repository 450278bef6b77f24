#include "glsm/cgamma.hpp"

#include <cmath>
#include <sstream>

namespace glsm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2Pi = 1.837877066409345483560659472811235279;  // log(2*pi)
constexpr double kPoleTol = 1e-12;

// Asymptotic series coefficients c_n = B_{2n} / (2n(2n-1)), n = 1..12.
constexpr double kStirling[] = {
    8.3333333333333333e-02,   // 1/12
    -2.7777777777777778e-03,  // -1/360
    7.9365079365079365e-04,   // 1/1260
    -5.9523809523809524e-04,  // -1/1680
    8.4175084175084175e-04,   // 1/1188
    -1.9175269175269175e-03,  // -691/360360
    6.4102564102564103e-03,   // 1/156
    -2.9550653594771242e-02,  // -3617/122400
    1.7964437236883057e-01,   // 43867/244188
    -1.3924322169059011e+00,  // -174611/125400
    1.3402864044168392e+01,   // 854513/63756
    -1.5684828462600202e+02,  // -236364091/1506960
};

// Stirling expansion, valid for Re z >= 0.5 and |z| >= 12.
Complex stirling(Complex z) {
  Complex lz = std::log(z);
  Complex res = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
  Complex iz2 = 1.0 / (z * z), t = 1.0 / z;
  for (double c : kStirling) {
    res += c * t;
    t *= iz2;
  }
  return res;
}

// Principal branch for Re z >= 0.5 via recurrence shifts into |z| >= 12.
Complex right_half(Complex z) {
  Complex shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

// log sin(pi z) on the branch that makes the reflection formula continuous,
// for Im z >= 0:  log(i/2) - i*pi*z + log1p(-e^{2*pi*i*z}).
Complex log_sin_upper(Complex z) {
  const Complex i(0.0, 1.0);
  Complex w = std::exp(2.0 * kPi * i * z);  // |w| <= 1 for Im z >= 0
  return Complex(-std::log(2.0), 0.5 * kPi) - i * kPi * z + std::log(1.0 - w);
}

}  // namespace

LogGammaValue log_gamma(Complex z) {
  double x = z.real(), y = z.imag();
  if (x < 0.5) {
    double n = std::round(x);
    if (n <= 0.0 && std::hypot(x - n, y) < kPoleTol) {
      std::ostringstream os;
      os << "log_gamma: argument (" << x << "," << y << ") within pole tolerance";
      throw AtPole(os.str());
    }
  }
  LogGammaValue out;
  if (x >= 0.5) {
    out.value = right_half(z);
  } else if (y >= 0.0) {
    out.value = std::log(kPi) - log_sin_upper(z) - right_half(1.0 - z);
  } else {
    Complex zc = std::conj(z);
    Complex v = std::log(kPi) - log_sin_upper(zc) - right_half(1.0 - zc);
    out.value = std::conj(v);
  }
  return out;
}

double gamma_upper_bound(double x, double y, double delta) {
  if (!(delta > 0.0)) throw OutsideStrip("delta must be positive");
  double dist;
  if (x >= 0.0) {
    dist = x;  // distance to the nonpositive integers is x itself
  } else {
    double lo = std::floor(x), hi = std::ceil(x);
    dist = std::min(x - lo, hi - x);
  }
  if (dist < delta) {
    std::ostringstream os;
    os << "gamma_upper_bound: x=" << x << " closer than delta=" << delta
       << " to a nonpositive integer";
    throw OutsideStrip(os.str());
  }
  double ay = std::fabs(y);
  if (x >= delta) {
    // |Gamma(z)| <= sqrt(2 pi) |z|^{x-1/2} e^{-pi |y|/2} e^{1/(3|z|)}
    // (from the Binet remainder bound and -y*arg(z) <= -pi|y|/2 + x).
    double r = std::hypot(x, ay);
    return std::sqrt(2.0 * kPi) * std::pow(r, x - 0.5) * std::exp(-0.5 * kPi * ay) *
           std::exp(1.0 / (3.0 * r));
  }
  // Reflection: |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|) with computable
  // lower bounds for both factors.
  double sin_low = std::max(std::sin(kPi * std::min(delta, 0.5)), std::sinh(kPi * ay));
  double wx = 1.0 - x, wy = ay;  // |Gamma(1-z)| depends on |Im| only
  double wr = std::hypot(wx, wy);
  double gamma_low = std::sqrt(2.0 * kPi) * std::pow(wr, wx - 0.5) * std::exp(-wx) *
                     std::exp(-0.5 * kPi * wy) * std::exp(-1.0 / (3.0 * wr));
  return kPi / (sin_low * gamma_low);
}

double decay_exponent(const GlsmSpec& spec, const std::vector<int>& exempt,
                      const std::vector<double>& nu, const std::vector<double>& B,
                      const std::vector<double>& t) {
  std::vector<char> skip(spec.total(), 0);
  for (int j : exempt) skip[j] = 1;
  double sum = 0.0;
  for (int i = 0; i < spec.total(); ++i) {
    if (skip[i]) continue;
    double p = 0.0;
    for (int a = 0; a < spec.kappa; ++a) p += static_cast<double>(spec.charges[i][a]) * nu[a];
    sum += std::fabs(p);
  }
  double bt = 0.0;
  for (int a = 0; a < spec.kappa; ++a) bt += (B[a] + t[a]) * nu[a];
  return 0.5 * kPi * sum - 2.0 * kPi * std::fabs(bt);
}

Rational decay_exponent_linear_part(const GlsmSpec& spec, const std::vector<int>& exempt,
                                    const QVec& nu) {
  std::vector<char> skip(spec.total(), 0);
  for (int j : exempt) skip[j] = 1;
  Rational sum = 0;
  for (int i = 0; i < spec.total(); ++i) {
    if (skip[i]) continue;
    Rational p = pairing(spec.charge_row(i), nu);
    sum += p < 0 ? -p : p;
  }
  return sum;
}

}  // namespace glsm
