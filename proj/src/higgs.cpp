#include "glsm/higgs.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>

namespace glsm {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kImag{0.0, 1.0};

std::vector<bool> membership(const GlsmSpec& spec, const Anticone& I) {
  std::vector<bool> in(spec.total(), false);
  for (int i : I.indices) in[i] = true;
  return in;
}

Complex pair_row(const GlsmSpec& spec, int row, const std::vector<Complex>& sigma) {
  Complex s = 0.0;
  for (int a = 0; a < spec.kappa; ++a) s += static_cast<double>(spec.charges[row][a]) * sigma[a];
  return s;
}

double pair_row_real(const GlsmSpec& spec, int row, const std::vector<double>& sigma) {
  double s = 0.0;
  for (int a = 0; a < spec.kappa; ++a) s += static_cast<double>(spec.charges[row][a]) * sigma[a];
  return s;
}

std::string index_set_string(const Anticone& I) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < I.indices.size(); ++k) os << (k ? "," : "") << I.indices[k] + 1;
  os << "}";
  return os.str();
}

}  // namespace

int default_max_shell(int kappa) {
  if (kappa <= 1) return 400;
  if (kappa == 2) return 120;
  return 60;
}

std::vector<Complex> sigma_m(const Anticone& I, const std::vector<int>& m,
                             const std::vector<Complex>& alpha) {
  const int kappa = static_cast<int>(I.indices.size());
  if (static_cast<int>(m.size()) != kappa) throw Error(9, "sigma_m: m has wrong length");
  std::vector<Complex> sigma(kappa, Complex{0.0, 0.0});
  for (int l = 0; l < kappa; ++l) {
    Complex coeff = -(static_cast<double>(m[l]) + alpha[I.indices[l]]);
    for (int a = 0; a < kappa; ++a) sigma[a] += coeff * to_double(I.dual[l][a]);
  }
  return sigma;
}

Complex chamber_term(const GlsmSpec& spec, const Anticone& I, const std::vector<int>& m,
                     const std::vector<Complex>& alpha, const ThetaParam& theta,
                     const std::vector<long long>& t) {
  if (static_cast<int>(alpha.size()) != spec.total())
    throw Error(9, "chamber_term: alpha has wrong length");
  const auto in_I = membership(spec, I);
  const auto sigma = sigma_m(I, m, alpha);

  Complex log_acc{0.0, 0.0};
  for (int j = 0; j < spec.total(); ++j) {
    if (in_I[j]) continue;
    Complex x = pair_row(spec, j, sigma) + alpha[j];
    try {
      log_acc += log_gamma(x).value;
    } catch (const AtPole&) {
      std::ostringstream os;
      os << "resonant parameters: gamma argument at row " << j + 1 << ", anticone "
         << index_set_string(I) << ", m-shell " << std::accumulate(m.begin(), m.end(), 0)
         << " lies on a nonpositive integer";
      throw Resonant(os.str());
    }
  }

  double sign = 1.0;
  for (std::size_t l = 0; l < m.size(); ++l) {
    if (m[l] % 2) sign = -sign;
    log_acc -= std::lgamma(static_cast<double>(m[l]) + 1.0);
  }

  for (int a = 0; a < spec.kappa; ++a) {
    double ta = t.empty() ? 0.0 : static_cast<double>(t[a]);
    Complex theta_a{theta.zeta[a], 2.0 * kPi * (theta.B[a] + ta)};
    log_acc += theta_a * sigma[a];
  }
  return sign * std::exp(log_acc);
}

void screen_resonances(const GlsmSpec& spec, const std::vector<Anticone>& anticones,
                       const std::vector<Complex>& alpha, int max_shell) {
  const int kappa = spec.kappa;
  std::vector<Rational> are(alpha.size()), aim(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    are[i] = exact_rational(alpha[i].real());
    aim[i] = exact_rational(alpha[i].imag());
  }
  for (const auto& I : anticones) {
    const auto in_I = membership(spec, I);
    // Exact pairings s_{jl} = <D_j, dual_l> and the constant parts of the
    // gamma arguments x_j(m) = c0_j - sum_l s_{jl} m_l (+ i * cim_j).
    std::vector<std::vector<Rational>> s(spec.total(), std::vector<Rational>(kappa));
    std::vector<Rational> c0(spec.total()), cim(spec.total());
    std::vector<int> rows;  // rows outside I with exactly real arguments
    for (int j = 0; j < spec.total(); ++j) {
      if (in_I[j]) continue;
      Rational re = are[j], im = aim[j];
      for (int l = 0; l < kappa; ++l) {
        Rational p = 0;
        for (int a = 0; a < kappa; ++a) p += Rational(spec.charges[j][a]) * I.dual[l][a];
        s[j][l] = p;
        re -= p * are[I.indices[l]];
        im -= p * aim[I.indices[l]];
      }
      c0[j] = re;
      cim[j] = im;
      if (im == 0) rows.push_back(j);
    }
    if (rows.empty()) continue;
    for (int shell = 0; shell <= max_shell; ++shell) {
      for_each_composition(kappa, shell, [&](const std::vector<int>& m) {
        for (int j : rows) {
          Rational x = c0[j];
          for (int l = 0; l < kappa; ++l) x -= s[j][l] * m[l];
          if (is_integer(x) && x <= 0) {
            std::ostringstream os;
            os << "resonant parameters: gamma argument at row " << j + 1 << ", anticone "
               << index_set_string(I) << ", m = (";
            for (int l = 0; l < kappa; ++l) os << (l ? "," : "") << m[l];
            os << ") equals " << rational_to_string(x);
            throw Resonant(os.str());
          }
        }
      });
    }
  }
}

SeriesResult chamber_partition(const GlsmSpec& spec, const Chamber& chamber,
                               const ThetaParam& theta, const Brane& brane,
                               const std::vector<Complex>& alpha, double tol, int max_shell,
                               int threads) {
  if (max_shell <= 0) max_shell = default_max_shell(spec.kappa);
  if (static_cast<int>(theta.zeta.size()) != spec.kappa ||
      static_cast<int>(theta.B.size()) != spec.kappa)
    throw Error(9, "chamber_partition: theta has wrong length");
  if (brane.terms.empty()) {
    SeriesResult zero;
    zero.converged = true;
    return zero;
  }
  screen_resonances(spec, chamber.min_anticones, alpha, max_shell);

  const double sign_kappa = (spec.kappa % 2) ? -1.0 : 1.0;
  std::vector<double> inv_det;
  inv_det.reserve(chamber.min_anticones.size());
  for (const auto& I : chamber.min_anticones)
    inv_det.push_back(1.0 / I.group.order.convert_to<double>());

  auto term_value = [&](const std::vector<int>& m) -> Complex {
    Complex total{0.0, 0.0};
    for (std::size_t ai = 0; ai < chamber.min_anticones.size(); ++ai) {
      const Anticone& I = chamber.min_anticones[ai];
      for (const auto& [t, c] : brane.terms)
        total += c * inv_det[ai] * chamber_term(spec, I, m, alpha, theta, t);
    }
    return sign_kappa * total;
  };

  SeriesResult res;
  if (threads <= 1) {
    res = sum_shells(spec.kappa, tol, max_shell, term_value);
  } else {
    // Values of each shell are computed in parallel, then replayed to the
    // accumulator in enumeration order, so the reduction order (and hence
    // the result, bit for bit) is independent of the thread count.
    struct ShellCache {
      int shell = -1;
      std::vector<std::vector<int>> ms;
      std::vector<Complex> vals;
      std::size_t next = 0;
    };
    auto cache = std::make_shared<ShellCache>();
    auto cached_term = [&, cache](const std::vector<int>& m) -> Complex {
      int s = std::accumulate(m.begin(), m.end(), 0);
      if (cache->shell != s) {
        cache->shell = s;
        cache->ms.clear();
        cache->next = 0;
        for_each_composition(spec.kappa, s,
                             [&](const std::vector<int>& mm) { cache->ms.push_back(mm); });
        cache->vals.assign(cache->ms.size(), Complex{});
        int nt = std::max(1, std::min<int>(threads, static_cast<int>(cache->ms.size())));
        std::vector<std::exception_ptr> errs(nt);
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (int w = 0; w < nt; ++w) {
          pool.emplace_back([&, w, nt] {
            try {
              for (std::size_t k = w; k < cache->ms.size(); k += nt)
                cache->vals[k] = term_value(cache->ms[k]);
            } catch (...) {
              errs[w] = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs)
          if (e) std::rethrow_exception(e);
      }
      if (cache->next < cache->ms.size() && cache->ms[cache->next] == m)
        return cache->vals[cache->next++];
      return term_value(m);  // only reachable if enumeration orders diverge
    };
    res = sum_shells(spec.kappa, tol, max_shell, cached_term);
  }

  if (!res.converged) {
    std::ostringstream os;
    os << "chamber series not converging after " << res.shells_used
       << " shells (last tail estimate " << res.tail_estimate
       << "); the stability parameter lies outside the certified convergence domain";
    throw NotConverging(os.str());
  }
  return res;
}

double horn_vector_log(const GlsmSpec& spec, const Anticone&, const std::vector<double>& sigma) {
  double acc = 0.0;
  for (int j = 0; j < spec.total(); ++j) {
    double tj = pair_row_real(spec, j, sigma);
    if (tj != 0.0) acc += tj * std::log(std::fabs(tj));
  }
  return acc;
}

namespace {

// Modulus of continuity of x -> x log|x| over [-M, M] for a step s:
// valid (and used) only when s <= 1/(2e).
double xlogx_modulus(double s, double M) {
  if (s <= 0.0) return 0.0;
  double logM = std::max(0.0, std::log(std::max(M, 1e-300)));
  return s * (1.0 + logM + 4.0 * std::max(0.0, std::log(1.0 / s)));
}

double growth_functional(const GlsmSpec& spec, const Anticone& I, const std::vector<double>& zeta,
                         const std::vector<double>& sigma) {
  double lin = 0.0;
  for (int a = 0; a < spec.kappa; ++a) lin += zeta[a] * sigma[a];
  return lin + horn_vector_log(spec, I, sigma);
}

}  // namespace

bool convergence_contains(const GlsmSpec& spec, const Anticone& I, const std::vector<double>& zeta,
                          double* margin_out) {
  if (static_cast<int>(zeta.size()) != spec.kappa)
    throw Error(9, "convergence_contains: zeta has wrong length");
  // Unit generators of the anticone's dual cone.
  std::vector<std::vector<double>> gen;
  for (const auto& u : I.dual) {
    std::vector<double> g(spec.kappa);
    double norm = 0.0;
    for (int a = 0; a < spec.kappa; ++a) {
      g[a] = to_double(u[a]);
      norm += g[a] * g[a];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) throw Error(9, "convergence_contains: zero dual generator");
    for (auto& v : g) v /= norm;
    gen.push_back(std::move(g));
  }

  double zeta_norm = 0.0;
  for (double v : zeta) zeta_norm += v * v;
  zeta_norm = std::sqrt(zeta_norm);

  if (spec.kappa == 1) {
    double f = growth_functional(spec, I, zeta, gen[0]);
    if (margin_out) *margin_out = f;
    double eps = 1e-9 * std::max(1.0, zeta_norm);
    if (f > eps) return true;
    if (f < -eps) return false;
    throw Inconclusive("growth functional vanishes within resolution at the cone generator");
  }
  if (spec.kappa != 2)
    throw Unsupported("convergence certification implemented for gauge rank <= 2");

  // Sweep the circular arc between the two unit generators.
  double a0 = std::atan2(gen[0][1], gen[0][0]);
  double a1 = std::atan2(gen[1][1], gen[1][0]);
  double delta = a1 - a0;
  while (delta <= -kPi) delta += 2.0 * kPi;
  while (delta > kPi) delta -= 2.0 * kPi;
  if (std::fabs(delta) < 1e-14 || std::fabs(std::fabs(delta) - kPi) < 1e-14)
    throw Error(9, "convergence_contains: degenerate dual cone");

  std::vector<double> row_norm(spec.total());
  double max_row = 0.0;
  for (int j = 0; j < spec.total(); ++j) {
    double n2 = 0.0;
    for (int a = 0; a < spec.kappa; ++a)
      n2 += static_cast<double>(spec.charges[j][a]) * static_cast<double>(spec.charges[j][a]);
    row_norm[j] = std::sqrt(n2);
    max_row = std::max(max_row, row_norm[j]);
  }

  for (int n = 64; n <= (1 << 18); n *= 2) {
    double h = std::fabs(delta) / n;  // arc step; chord <= arc
    double min_f = 0.0;
    bool first = true;
    for (int k = 0; k <= n; ++k) {
      double ang = a0 + delta * (static_cast<double>(k) / n);
      std::vector<double> sigma{std::cos(ang), std::sin(ang)};
      double f = growth_functional(spec, I, zeta, sigma);
      if (f < 0.0) {
        if (margin_out) *margin_out = f;
        return false;  // a point of the sphere with nonpositive growth: definitive
      }
      if (first || f < min_f) min_f = f;
      first = false;
    }
    // Certify positivity between samples via the explicit modulus.
    bool modulus_valid = max_row * h <= 0.18;
    if (modulus_valid) {
      double omega = zeta_norm * h;
      for (int j = 0; j < spec.total(); ++j)
        omega += xlogx_modulus(row_norm[j] * h, row_norm[j]);
      if (min_f - omega > 0.0) {
        if (margin_out) *margin_out = min_f - omega;
        return true;
      }
    }
  }
  throw Inconclusive("growth functional minimum straddles zero at the finest mesh");
}

std::vector<EffectiveClass> effective_classes(const GlsmSpec& spec, const Anticone& I,
                                              int degree_cutoff) {
  if (degree_cutoff < 0) throw Error(3, "degree cutoff must be nonnegative");
  const int kappa = spec.kappa;
  std::vector<EffectiveClass> out;
  for (int shell = 0; shell <= degree_cutoff; ++shell) {
    for_each_composition(kappa, shell, [&](const std::vector<int>& m) {
      EffectiveClass c;
      c.anticone = I;
      c.m = m;
      c.beta.assign(kappa, Rational(0));
      for (int l = 0; l < kappa; ++l) {
        Rational coeff = Rational(m[l]) + spec.r_charges[I.indices[l]] / 2;
        for (int a = 0; a < kappa; ++a) c.beta[a] += coeff * I.dual[l][a];
      }
      c.d.assign(spec.total(), Rational(0));
      for (int j = 0; j < spec.total(); ++j) {
        Rational dj = -spec.r_charges[j] / 2;
        for (int a = 0; a < kappa; ++a) dj += Rational(spec.charges[j][a]) * c.beta[a];
        c.d[j] = dj;
      }
      out.push_back(std::move(c));
    });
  }
  return out;
}

namespace {

// Gamma(w - s) / Gamma(w) as the exact finite product, with w = 1 + x + d and
// s = ceil(d).  A vanishing factor on the s > 0 side is a genuine pole of the
// ratio (Resonant); on the s <= 0 side it is an honest zero of the term.
Complex gamma_ratio_factor(Complex x, const Rational& d, bool* term_vanishes) {
  long long s = rceil(d).convert_to<long long>();
  Complex w = Complex(to_double(Rational(1) + d), 0.0) + x;
  Complex acc{1.0, 0.0};
  if (s > 0) {
    for (long long k = 1; k <= s; ++k) {
      Complex f = w - static_cast<double>(k);
      if (std::abs(f) < 1e-12 * std::max(1.0, std::abs(w)))
        throw Resonant("gamma-ratio factor pole: shift the equivariant parameters");
      acc /= f;
    }
  } else {
    for (long long k = 0; k < -s; ++k) {
      Complex f = w + static_cast<double>(k);
      if (std::abs(f) == 0.0) {
        *term_vanishes = true;
        return Complex{0.0, 0.0};
      }
      acc *= f;
    }
  }
  return acc;
}

// Index of the box element whose fractional pairings equal {-d_j} for all j.
std::size_t match_box(const std::vector<BoxElement>& boxes, const std::vector<Rational>& d) {
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    bool ok = true;
    for (std::size_t j = 0; j < d.size() && ok; ++j)
      if (boxes[b].f[j] != rfrac(-d[j])) ok = false;
    if (ok) return b;
  }
  throw Error(9, "effective class does not reduce to any box element of its fixed point");
}

}  // namespace

std::vector<std::pair<BoxElement, Complex>> i_function_fixed_point(
    const GlsmSpec& spec, const QVec& zeta, const Anticone& I,
    const std::vector<Complex>& lambda, Complex z, const std::vector<Complex>& log_y,
    int cutoff) {
  (void)zeta;  // the fixed point determines the grouping; zeta fixes the phase upstream
  if (std::abs(z) < 1e-300) throw ZeroZ("generating-series parameter z must be nonzero");
  if (static_cast<int>(lambda.size()) != spec.total())
    throw Error(9, "i_function_fixed_point: lambda has wrong length");
  if (static_cast<int>(log_y.size()) != spec.kappa)
    throw Error(9, "i_function_fixed_point: log_y has wrong length");

  const auto weights = fixed_point_weights(spec, I);
  std::vector<Complex> iu(spec.total()), ip(spec.kappa);
  for (int j = 0; j < spec.total(); ++j) {
    Complex s = 0.0;
    for (int l = 0; l < spec.total(); ++l) s += to_double(weights.u_weights[j][l]) * lambda[l];
    iu[j] = s;
  }
  for (int a = 0; a < spec.kappa; ++a) {
    Complex s = 0.0;
    for (int l = 0; l < spec.total(); ++l) s += to_double(weights.p_weights[a][l]) * lambda[l];
    ip[a] = s;
  }

  const auto boxes = box_elements_of_anticone(spec, I);
  std::vector<Complex> sums(boxes.size(), Complex{0.0, 0.0});
  const Complex log_z = std::log(z);
  Rational sumD_dot;  // <sum_j D_j, beta> computed per class below

  for (const auto& cls : effective_classes(spec, I, cutoff)) {
    std::size_t b = match_box(boxes, cls.d);
    bool vanishes = false;
    Complex prod{1.0, 0.0};
    for (int j = 0; j < spec.total() && !vanishes; ++j)
      prod *= gamma_ratio_factor(iu[j] / z, cls.d[j], &vanishes);
    if (vanishes) continue;
    sumD_dot = 0;
    for (int j = 0; j < spec.total(); ++j)
      for (int a = 0; a < spec.kappa; ++a) sumD_dot += Rational(spec.charges[j][a]) * cls.beta[a];
    Complex log_term{0.0, 0.0};
    for (int a = 0; a < spec.kappa; ++a) log_term += log_y[a] * to_double(cls.beta[a]);
    log_term -= to_double(sumD_dot) * log_z;
    sums[b] += prod * std::exp(log_term);
  }

  std::vector<std::pair<BoxElement, Complex>> out;
  out.reserve(boxes.size());
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    Complex log_pref{0.0, 0.0};
    for (int a = 0; a < spec.kappa; ++a) log_pref += log_y[a] * ip[a] / z;
    log_pref -= to_double(boxes[b].age - spec.q_hat()) * log_z;
    out.emplace_back(boxes[b], sums[b] * std::exp(log_pref));
  }
  return out;
}

void k_factor_exponents(const Rational& d, std::vector<Rational>& num_exponents,
                        std::vector<Rational>& den_exponents) {
  num_exponents.clear();
  den_exponents.clear();
  long long s = rceil(d).convert_to<long long>();
  if (s > 0) {
    for (long long k = 0; k < s; ++k) den_exponents.push_back(Rational(k) - d);
  } else {
    for (long long k = 0; k < -s; ++k) num_exponents.push_back(rfrac(-d) + Rational(k));
  }
}

std::vector<std::pair<BoxElement, Complex>> k_i_function_fixed_point(
    const GlsmSpec& spec, const QVec& zeta, const Anticone& I,
    const std::vector<Complex>& Lambda, Complex q, const std::vector<Complex>& y, int cutoff) {
  (void)zeta;
  if (std::fabs(std::abs(q) - 1.0) < 1e-12)
    throw UnitCircleQ("|q| = 1: the finite q-products are not defined on the unit circle");
  if (static_cast<int>(Lambda.size()) != spec.total())
    throw Error(9, "k_i_function_fixed_point: Lambda has wrong length");
  if (static_cast<int>(y.size()) != spec.kappa)
    throw Error(9, "k_i_function_fixed_point: y has wrong length");
  for (const auto& L : Lambda)
    if (std::abs(L) < 1e-300) throw Error(3, "equivariant parameters must be nonzero");
  for (const auto& v : y)
    if (std::abs(v) < 1e-300) throw Error(3, "Kaehler parameters must be nonzero");

  const auto weights = fixed_point_weights(spec, I);
  const Complex log_q = std::log(q);
  std::vector<Complex> log_U(spec.total());
  for (int j = 0; j < spec.total(); ++j) {
    Complex s = 0.0;
    for (int l = 0; l < spec.total(); ++l)
      s += to_double(weights.k_exponents[j][l]) * std::log(Lambda[l]);
    log_U[j] = s;
  }
  std::vector<Complex> log_yv(spec.kappa);
  for (int a = 0; a < spec.kappa; ++a) log_yv[a] = std::log(y[a]);

  const auto boxes = box_elements_of_anticone(spec, I);
  std::vector<Complex> sums(boxes.size(), Complex{0.0, 0.0});
  std::vector<Rational> num_e, den_e;

  for (const auto& cls : effective_classes(spec, I, cutoff)) {
    std::size_t b = match_box(boxes, cls.d);
    Complex prod{1.0, 0.0};
    for (int j = 0; j < spec.total(); ++j) {
      k_factor_exponents(cls.d[j], num_e, den_e);
      for (const auto& e : num_e)
        prod *= 1.0 - std::exp(log_U[j] + to_double(e) * log_q);
      for (const auto& e : den_e) {
        Complex f = 1.0 - std::exp(log_U[j] + to_double(e) * log_q);
        if (std::abs(f) < 1e-12)
          throw VanishingFactor("a q-product denominator factor vanishes; move q or Lambda");
        prod /= f;
      }
    }
    Complex log_term{0.0, 0.0};
    for (int a = 0; a < spec.kappa; ++a) log_term += log_yv[a] * to_double(cls.beta[a]);
    sums[b] += prod * std::exp(log_term);
  }

  std::vector<std::pair<BoxElement, Complex>> out;
  out.reserve(boxes.size());
  for (std::size_t b = 0; b < boxes.size(); ++b) out.emplace_back(boxes[b], sums[b]);
  return out;
}

SeriesResult central_charge_equivariant(const GlsmSpec& spec, const QVec& zeta,
                                        const std::vector<Complex>& log_y,
                                        const std::vector<Complex>& lambda, Complex z,
                                        const std::vector<long long>& t, double tol,
                                        int max_shell) {
  if (std::abs(z) < 1e-300) throw ZeroZ("generating-series parameter z must be nonzero");
  if (static_cast<int>(log_y.size()) != spec.kappa)
    throw Error(9, "central_charge_equivariant: log_y has wrong length");
  if (static_cast<int>(lambda.size()) != spec.total())
    throw Error(9, "central_charge_equivariant: lambda has wrong length");
  if (max_shell <= 0) max_shell = default_max_shell(spec.kappa);

  const Chamber chamber = chamber_of(spec, zeta);
  std::vector<Complex> alpha(spec.total());
  for (int j = 0; j < spec.total(); ++j)
    alpha[j] = lambda[j] / z + Complex(to_double(spec.r_charges[j] / 2), 0.0);
  screen_resonances(spec, chamber.min_anticones, alpha, max_shell);

  const Complex log_z = std::log(z);
  const Complex log_mz = std::log(-z);
  const double sign_kappa = (spec.kappa % 2) ? -1.0 : 1.0;
  std::vector<double> inv_det;
  for (const auto& I : chamber.min_anticones)
    inv_det.push_back(1.0 / I.group.order.convert_to<double>());

  auto term_value = [&](const std::vector<int>& m) -> Complex {
    Complex total{0.0, 0.0};
    for (std::size_t ai = 0; ai < chamber.min_anticones.size(); ++ai) {
      const Anticone& I = chamber.min_anticones[ai];
      const auto in_I = membership(spec, I);
      const auto sigma = sigma_m(I, m, alpha);
      Complex log_acc{0.0, 0.0};
      for (int j = 0; j < spec.total(); ++j) {
        if (in_I[j]) continue;
        Complex x = pair_row(spec, j, sigma) + alpha[j];
        try {
          log_acc += log_gamma(x).value + x * log_z;
        } catch (const AtPole&) {
          throw Resonant("gamma argument at a nonpositive integer in the z-twisted series");
        }
      }
      for (std::size_t l = 0; l < m.size(); ++l) {
        log_acc -= static_cast<double>(m[l]) * log_mz;
        log_acc -= std::lgamma(static_cast<double>(m[l]) + 1.0);
      }
      for (int a = 0; a < spec.kappa; ++a) {
        double ta = t.empty() ? 0.0 : static_cast<double>(t[a]);
        log_acc += (-log_y[a] + 2.0 * kPi * kImag * ta) * sigma[a];
      }
      total += inv_det[ai] * std::exp(log_acc);
    }
    return sign_kappa * total;
  };

  SeriesResult res = sum_shells(spec.kappa, tol, max_shell, term_value);
  if (!res.converged) {
    std::ostringstream os;
    os << "z-twisted series not converging after " << res.shells_used << " shells";
    throw NotConverging(os.str());
  }
  return res;
}

}  // namespace glsm
