#include "glsm/spec.hpp"

namespace glsm {

GlsmSpec validate_spec(const std::string& name, int kappa,
                       const std::vector<std::vector<long long>>& charges,
                       const std::vector<Rational>& r_charges,
                       const std::vector<std::string>& labels) {
  GlsmSpec s;
  s.name = name;
  s.kappa = kappa;
  s.charges = charges;
  s.r_charges = r_charges;
  s.labels = labels;
  if (kappa <= 0) throw RankDeficient("gauge rank must be positive");
  if (charges.size() < static_cast<std::size_t>(kappa))
    throw RankDeficient("fewer charge rows than the gauge rank");
  for (const auto& row : charges)
    if (row.size() != static_cast<std::size_t>(kappa))
      throw RankDeficient("charge row length differs from the gauge rank");
  if (r_charges.size() != charges.size())
    throw BadRCharge("need one R-charge per charge row");
  for (const auto& q : r_charges)
    if (q < 0) throw BadRCharge();
  if (!labels.empty() && labels.size() != charges.size())
    throw RankDeficient("label count differs from the charge row count");

  std::vector<QVec> rows;
  rows.reserve(charges.size());
  for (int i = 0; i < s.total(); ++i) rows.push_back(s.charge_row(i));
  if (rank(rows) != static_cast<std::size_t>(kappa)) throw RankDeficient();

  s.is_calabi_yau = true;
  for (int a = 0; a < kappa; ++a) {
    long long sum = 0;
    for (const auto& row : charges) sum += row[a];
    if (sum != 0) s.is_calabi_yau = false;
  }
  return s;
}

}  // namespace glsm
