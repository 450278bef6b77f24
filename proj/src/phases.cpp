#include "glsm/phases.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace glsm {

namespace {

// Enumerate all size-k subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (k > n) return;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Anticone make_anticone(const GlsmSpec& spec, const std::vector<int>& indices) {
  Anticone ac;
  ac.indices = indices;
  std::sort(ac.indices.begin(), ac.indices.end());
  if (static_cast<int>(ac.indices.size()) != spec.kappa)
    throw Error(9, "anticone index set must have size equal to the gauge rank");
  for (int i : ac.indices)
    if (i < 0 || i >= spec.total()) throw Error(9, "anticone index out of range");
  auto rows = spec.charge_rows(ac.indices);
  ac.dual = dual_basis(rows);  // throws SingularBasis when dependent
  ac.group = det_index(rows);
  return ac;
}

std::vector<Anticone> minimal_anticones(const GlsmSpec& spec, const QVec& zeta) {
  if (static_cast<int>(zeta.size()) != spec.kappa)
    throw Error(9, "stability parameter has wrong length");
  std::vector<Anticone> result;
  bool wall_witness = false;
  std::vector<int> witness;
  for_each_subset(spec.total(), spec.kappa, [&](const std::vector<int>& idx) {
    auto rows = spec.charge_rows(idx);
    if (det(rows) == 0) return;
    auto coeff = coords_in_span(rows, zeta);
    if (!coeff) return;  // cannot happen for square nonsingular, kept for clarity
    bool all_pos = true, any_zero = false;
    for (const auto& c : *coeff) {
      if (c < 0) {
        all_pos = false;
        break;
      }
      if (c == 0) any_zero = true;
    }
    if (!all_pos) return;
    if (any_zero) {
      if (!wall_witness) witness = idx;
      wall_witness = true;
      return;
    }
    Anticone ac;
    ac.indices = idx;
    ac.dual = dual_basis(rows);
    ac.group = det_index(rows);
    result.push_back(std::move(ac));
  });
  if (wall_witness) {
    std::ostringstream os;
    os << "stability parameter lies on a cone wall (zero coefficient over rows {";
    for (std::size_t k = 0; k < witness.size(); ++k) os << (k ? "," : "") << witness[k] + 1;
    os << "})";
    throw OnWall(os.str());
  }
  return result;
}

Chamber chamber_of(const GlsmSpec& spec, const QVec& zeta) {
  Chamber c;
  c.min_anticones = minimal_anticones(spec, zeta);
  if (c.min_anticones.empty())
    throw OnWall("stability parameter lies outside the support of the cone decomposition");
  c.rep_zeta = zeta;
  return c;
}

bool contains(const GlsmSpec& spec, const Chamber& chamber, const QVec& zeta) {
  std::vector<Anticone> other;
  try {
    other = minimal_anticones(spec, zeta);
  } catch (const OnWall&) {
    return false;
  }
  if (other.size() != chamber.min_anticones.size()) return false;
  for (std::size_t k = 0; k < other.size(); ++k)
    if (other[k].indices != chamber.min_anticones[k].indices) return false;
  return true;
}

std::vector<WallFacet> walls_of_chamber(const GlsmSpec& spec, const Chamber& chamber) {
  // Closure of the chamber as an H-cone: for every minimal anticone I and
  // j in I, the coefficient <w, dual_j> must be >= 0.
  std::vector<QVec> normals;  // cocharacter normals n with <w, n> >= 0 on the closure
  auto add_normal = [&](const QVec& n) {
    QVec p = primitive(n);
    for (const auto& q : normals)
      if (q == p) return;
    normals.push_back(p);
  };
  for (const auto& ac : chamber.min_anticones)
    for (const auto& d : ac.dual) add_normal(d);
  // Drop normals that are strictly positive on the whole closure (non-facets):
  // n is a facet normal iff some w satisfies <w,n> = 0 and <w,m> >= 1 for all
  // other retained normals m.
  std::vector<WallFacet> facets;
  for (std::size_t k = 0; k < normals.size(); ++k) {
    std::vector<QVec> A;
    std::vector<Rational> b;
    for (std::size_t l = 0; l < normals.size(); ++l) {
      if (l == k) continue;
      A.push_back(normals[l]);
      b.push_back(Rational(1));
    }
    if (fm_feasible_on_hyperplane(A, b, normals[k])) {
      WallFacet f;
      f.h = normals[k];
      std::ostringstream os;
      os << "wall { <w,h> = 0, h = (";
      for (int a = 0; a < spec.kappa; ++a) os << (a ? "," : "") << rational_to_string(f.h[a]);
      os << ") }";
      f.description = os.str();
      facets.push_back(std::move(f));
    }
  }
  return facets;
}

namespace {

// Canonical [0,1)^kappa representative.
QVec mod1(const QVec& g) {
  QVec out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) out[a] = rfrac(g[a]);
  return out;
}

BoxElement build_box(const GlsmSpec& spec, const QVec& gamma) {
  BoxElement b;
  b.gamma = gamma;
  b.f.resize(spec.total());
  b.age = 0;
  for (int i = 0; i < spec.total(); ++i) {
    b.f[i] = rfrac(pairing(spec.charge_row(i), gamma));
    b.age += b.f[i];
  }
  std::vector<QVec> zero_rows;
  for (int i = 0; i < spec.total(); ++i)
    if (b.f[i] == 0) zero_rows.push_back(spec.charge_row(i));
  b.narrow = !has_nonneg_relation(zero_rows);
  return b;
}

}  // namespace

std::vector<BoxElement> box_elements_of_anticone(const GlsmSpec& spec, const Anticone& I) {
  // The classes fixed by the anticone are generated by its dual vectors
  // modulo the integer lattice; close under generator addition.
  std::set<QVec> seen;
  std::vector<QVec> queue;
  QVec zero(spec.kappa, Rational(0));
  seen.insert(zero);
  queue.push_back(zero);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    QVec cur = queue[head];
    for (const auto& g : I.dual) {
      QVec nxt(spec.kappa);
      for (int a = 0; a < spec.kappa; ++a) nxt[a] = cur[a] + g[a];
      nxt = mod1(nxt);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::vector<BoxElement> out;
  out.reserve(queue.size());
  for (const auto& g : seen) out.push_back(build_box(spec, g));
  std::sort(out.begin(), out.end(), [](const BoxElement& x, const BoxElement& y) {
    if (x.age != y.age) return x.age < y.age;
    return x.gamma < y.gamma;
  });
  return out;
}

std::vector<BoxElement> box_elements(const GlsmSpec& spec, const QVec& zeta) {
  auto anticones = minimal_anticones(spec, zeta);
  std::map<QVec, BoxElement> merged;
  for (const auto& ac : anticones)
    for (auto& b : box_elements_of_anticone(spec, ac)) merged.emplace(b.gamma, std::move(b));
  std::vector<BoxElement> out;
  out.reserve(merged.size());
  for (auto& [g, b] : merged) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(), [](const BoxElement& x, const BoxElement& y) {
    if (x.age != y.age) return x.age < y.age;
    return x.gamma < y.gamma;
  });
  return out;
}

bool narrowness(const GlsmSpec& spec, const QVec& /*zeta*/, const BoxElement& box) {
  std::vector<QVec> zero_rows;
  for (int i = 0; i < spec.total(); ++i)
    if (box.f[i] == 0) zero_rows.push_back(spec.charge_row(i));
  return !has_nonneg_relation(zero_rows);
}

FixedPointWeights fixed_point_weights(const GlsmSpec& spec, const Anticone& I) {
  FixedPointWeights w;
  w.anticone = I;
  int n = spec.total(), kappa = spec.kappa;
  w.u_weights.assign(n, QVec(n, Rational(0)));
  w.p_weights.assign(kappa, QVec(n, Rational(0)));
  // p_a restricts to sum over l in I of (a-th coordinate of dual_l) * lambda_l.
  for (int a = 0; a < kappa; ++a)
    for (int l = 0; l < kappa; ++l) w.p_weights[a][I.indices[l]] = I.dual[l][a];
  // u_j restricts to sum over l in I of <D_j, dual_l> * lambda_l - lambda_j.
  for (int j = 0; j < n; ++j) {
    QVec Dj = spec.charge_row(j);
    for (int l = 0; l < kappa; ++l)
      w.u_weights[j][I.indices[l]] += pairing(Dj, I.dual[l]);
    w.u_weights[j][j] -= 1;
  }
  w.k_exponents = w.u_weights;
  return w;
}

}  // namespace glsm
