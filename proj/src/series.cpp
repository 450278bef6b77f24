#include "glsm/series.hpp"

#include <algorithm>

namespace glsm {

void for_each_composition(int kappa, int shell,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> m(kappa, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == kappa - 1) {
      m[pos] = remaining;
      fn(m);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      m[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (kappa <= 0) return;
  rec(0, shell);
}

SeriesResult sum_shells(int kappa, double tol, int max_shell,
                        const std::function<std::complex<double>(const std::vector<int>&)>& term) {
  SeriesResult out;
  ComplexSum acc;
  int quiet = 0;
  std::vector<double> shell_mags;
  for (int shell = 0; shell <= max_shell; ++shell) {
    ComplexSum shell_acc;
    long long count = 0;
    for_each_composition(kappa, shell, [&](const std::vector<int>& m) {
      shell_acc.add(term(m));
      ++count;
    });
    std::complex<double> sv = shell_acc.get();
    acc.add(sv);
    out.terms_used += count;
    out.shells_used = shell + 1;
    out.shell_partials.push_back(acc.get());
    double mag = std::abs(sv);
    shell_mags.push_back(mag);
    double scale = std::max(1.0, std::abs(acc.get()));
    if (mag > 1e100 * scale) {
      out.value = acc.get();
      out.converged = false;
      out.tail_estimate = mag;
      return out;  // runaway growth: certainly not converging
    }
    if (mag < tol * scale)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3 && shell >= 2) {
      // Geometric tail from the observed decay of the last shells.
      std::size_t n = shell_mags.size();
      double a1 = shell_mags[n - 3], a2 = shell_mags[n - 2], a3 = shell_mags[n - 1];
      double r = 0.0;
      if (a1 > 0.0 && a2 > 0.0) r = std::max(a2 / a1, a3 > 0.0 ? a3 / a2 : 0.0);
      r = std::min(r, 0.99);
      double top = std::max({a3, a2 * r, a1 * r * r});
      out.tail_estimate = top * r / (1.0 - r) + 1e-300;
      if (out.tail_estimate <= tol * scale) {
        out.value = acc.get();
        out.converged = true;
        return out;
      }
      quiet = 0;  // tail still too large: keep summing
    }
  }
  out.value = acc.get();
  out.converged = false;
  if (out.tail_estimate == 0.0 && !shell_mags.empty()) out.tail_estimate = shell_mags.back();
  return out;
}

}  // namespace glsm
