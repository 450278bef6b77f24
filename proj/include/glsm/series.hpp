#pragma once
// Shell-based summation over multi-indices m in Z_{>=0}^kappa with
// compensated accumulation, a three-quiet-shells stopping rule, and a
// geometric tail estimate.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace glsm {

// Compensated (Neumaier) accumulator.
struct NeumaierSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double get() const { return s + c; }
};

struct ComplexSum {
  NeumaierSum re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> get() const { return {re.get(), im.get()}; }
};

struct SeriesResult {
  std::complex<double> value{0.0, 0.0};
  int shells_used = 0;
  long long terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
  int resonant_terms = 0;
  std::vector<std::complex<double>> shell_partials;  // partial sum after each shell
};

// Visits every m with |m| = shell in lexicographic order.
void for_each_composition(int kappa, int shell,
                          const std::function<void(const std::vector<int>&)>& fn);

// Sums term(m) over all m in Z_{>=0}^kappa by total-degree shells.
// Stopping: shells contribute |shell sum| < tol * max(1, |partial|) three
// times in a row AND the geometric tail estimate is below
// tol * max(1, |partial|).  Divergence detection: shell magnitudes exceeding
// 1e100 * max(1, |partial|) or no convergence by max_shell.
SeriesResult sum_shells(int kappa, double tol, int max_shell,
                        const std::function<std::complex<double>(const std::vector<int>&)>& term);

}  // namespace glsm
