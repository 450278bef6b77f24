#pragma once
// Model specification: gauge rank, integer weight rows, R-charges.

#include <string>
#include <vector>

#include "glsm/exact.hpp"

namespace glsm {

struct GlsmSpec {
  std::string name;
  int kappa = 0;                                  // gauge torus rank
  std::vector<std::vector<long long>> charges;    // (n+kappa) rows D_i of length kappa
  std::vector<Rational> r_charges;                // q_i >= 0
  std::vector<std::string> labels;                // optional coordinate labels
  bool is_calabi_yau = false;                     // derived: sum of rows == 0

  int total() const { return static_cast<int>(charges.size()); }

  QVec charge_row(int i) const {
    QVec r(kappa);
    for (int a = 0; a < kappa; ++a) r[a] = Rational(charges[i][a]);
    return r;
  }
  std::vector<QVec> charge_rows(const std::vector<int>& idx) const {
    std::vector<QVec> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(charge_row(i));
    return out;
  }
  Rational q_hat() const {
    Rational s = 0;
    for (const auto& q : r_charges) s += q;
    return s / 2;
  }
};

// Validates dimensions, the spanning condition, and R-charge signs; fills the
// derived fields.  Throws RankDeficient / BadRCharge.
GlsmSpec validate_spec(const std::string& name, int kappa,
                       const std::vector<std::vector<long long>>& charges,
                       const std::vector<Rational>& r_charges,
                       const std::vector<std::string>& labels = {});

}  // namespace glsm
