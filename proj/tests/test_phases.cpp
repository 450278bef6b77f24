#include <algorithm>
#include <set>

#include "doctest.h"
#include "glsm/phases.hpp"

using namespace glsm;

namespace {

QVec qv(std::initializer_list<long long> xs) {
  QVec v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

GlsmSpec quintic() {
  return validate_spec("quintic", 1, {{1}, {1}, {1}, {1}, {1}, {-5}},
                       {0, 0, 0, 0, 0, 2});
}
GlsmSpec conifold() {
  return validate_spec("conifold", 1, {{1}, {1}, {-1}, {-1}}, {0, 0, 0, 0});
}
GlsmSpec kp1p1() {
  return validate_spec("kp1p1", 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-2, -2}},
                       {0, 0, 0, 0, 2});
}
GlsmSpec sixline() {
  return validate_spec("sixline", 2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}},
                       {0, 0, 0, 0, 0, 0});
}

std::vector<std::vector<int>> index_sets(const std::vector<Anticone>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& a : v) out.push_back(a.indices);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("spec validation rejects degenerate data") {
  CHECK_THROWS_AS(validate_spec("flat", 2, {{1, 0}, {2, 0}}, {0, 0}), RankDeficient);
  CHECK_THROWS_AS(validate_spec("neg", 1, {{1}, {-1}}, {0, Rational(-1, 2)}), BadRCharge);
  auto s = quintic();
  CHECK(s.is_calabi_yau);
  CHECK(s.q_hat() == 1);
}

TEST_CASE("minimal anticones of the one-parameter models") {
  auto q = quintic();
  auto plus = minimal_anticones(q, qv({1}));
  CHECK(index_sets(plus) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}});
  auto minus = minimal_anticones(q, qv({-1}));
  REQUIRE(minus.size() == 1);
  CHECK(minus[0].indices == std::vector<int>{5});
  CHECK(minus[0].group.order == 5);
  REQUIRE(minus[0].group.cyclic_factors.size() == 1);
  CHECK(minus[0].group.cyclic_factors[0] == 5);

  auto c = conifold();
  CHECK(index_sets(minimal_anticones(c, qv({3}))) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(index_sets(minimal_anticones(c, qv({-3}))) ==
        std::vector<std::vector<int>>{{2}, {3}});
}

TEST_CASE("minimal anticones of the rank-two models") {
  auto k = kp1p1();
  CHECK(index_sets(minimal_anticones(k, qv({4, 4}))) ==
        std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(index_sets(minimal_anticones(k, qv({4, -4}))) ==
        std::vector<std::vector<int>>{{0, 4}, {1, 4}});
  CHECK(index_sets(minimal_anticones(sixline(), qv({1, 2}))) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(index_sets(minimal_anticones(sixline(), qv({2, 1}))) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {2, 4}});
}

TEST_CASE("stability parameters on cone walls are refused") {
  CHECK_THROWS_AS(minimal_anticones(quintic(), qv({0})), OnWall);
  CHECK_THROWS_AS(minimal_anticones(kp1p1(), qv({-1, -1})), OnWall);
  CHECK_THROWS_AS(chamber_of(kp1p1(), qv({1, 0})), OnWall);
}

TEST_CASE("chamber membership and walls") {
  auto q = quintic();
  auto cp = chamber_of(q, qv({1}));
  CHECK(contains(q, cp, qv({7})));
  CHECK_FALSE(contains(q, cp, qv({-1})));
  auto wp = walls_of_chamber(q, cp);
  REQUIRE(wp.size() == 1);
  CHECK(wp[0].h == qv({1}));
  auto wm = walls_of_chamber(q, chamber_of(q, qv({-1})));
  REQUIRE(wm.size() == 1);
  CHECK(wm[0].h == qv({-1}));

  auto k = kp1p1();
  auto geom = walls_of_chamber(k, chamber_of(k, qv({4, 4})));
  std::set<QVec> normals;
  for (const auto& w : geom) normals.insert(w.h);
  CHECK(normals == std::set<QVec>{qv({1, 0}), qv({0, 1})});
  auto side = walls_of_chamber(k, chamber_of(k, qv({4, -4})));
  normals.clear();
  for (const auto& w : side) normals.insert(w.h);
  CHECK(normals == std::set<QVec>{qv({0, -1}), qv({1, -1})});
}

TEST_CASE("box classes of the quintic Landau-Ginzburg chamber") {
  auto q = quintic();
  auto geom = box_elements(q, qv({1}));
  REQUIRE(geom.size() == 1);
  CHECK(geom[0].age == 0);

  auto lg = box_elements(q, qv({-1}));
  REQUIRE(lg.size() == 5);
  std::multiset<Rational> ages;
  for (const auto& b : lg) ages.insert(b.age);
  CHECK(ages == std::multiset<Rational>{0, 1, 2, 3, 4});
  for (const auto& b : lg) {
    if (b.age == 0) {
      CHECK_FALSE(b.narrow);  // the zero class meets the noncompact directions
    } else {
      CHECK(b.narrow);
    }
    // Age identity: age(gamma) + age(-gamma) counts the moving rows.
    if (b.age != 0) {
      QVec inv(1);
      inv[0] = rfrac(-b.gamma[0]);
      bool found = false;
      for (const auto& other : lg)
        if (other.gamma == inv) {
          found = true;
          int moving = 0;
          for (const auto& f : b.f)
            if (f != 0) ++moving;
          CHECK(b.age + other.age == moving);
        }
      CHECK(found);
    }
  }

  CHECK(box_elements(kp1p1(), qv({4, 4})).size() == 1);
}

TEST_CASE("row permutations relabel but do not change the combinatorics") {
  auto q = quintic();
  auto perm = validate_spec("quintic-perm", 1, {{-5}, {1}, {1}, {1}, {1}, {1}},
                            {2, 0, 0, 0, 0, 0});
  CHECK(minimal_anticones(perm, qv({1})).size() == 5);
  auto lg = minimal_anticones(perm, qv({-1}));
  REQUIRE(lg.size() == 1);
  CHECK(lg[0].indices == std::vector<int>{0});
  CHECK(lg[0].group.order == 5);
  auto boxes = box_elements(perm, qv({-1}));
  std::multiset<Rational> ages;
  for (const auto& b : boxes) ages.insert(b.age);
  std::multiset<Rational> ref;
  for (const auto& b : box_elements(q, qv({-1}))) ref.insert(b.age);
  CHECK(ages == ref);
}

TEST_CASE("unimodular column changes preserve anticone index sets") {
  // D' = D U, zeta' = zeta U for U = [[1,1],[0,1]] acting on characters.
  auto k = kp1p1();
  auto kt = validate_spec("kp1p1-u", 2, {{1, 1}, {1, 1}, {0, 1}, {0, 1}, {-2, -4}},
                          {0, 0, 0, 0, 2});
  // zeta = (4,4) -> zeta' = (4, 8).
  CHECK(index_sets(minimal_anticones(kt, qv({4, 8}))) ==
        index_sets(minimal_anticones(k, qv({4, 4}))));
  CHECK(index_sets(minimal_anticones(kt, qv({4, 0}))) ==
        index_sets(minimal_anticones(k, qv({4, -4}))));
  auto b1 = box_elements(kt, qv({4, 8}));
  CHECK(b1.size() == box_elements(k, qv({4, 4})).size());
}

TEST_CASE("restricted coordinate weights satisfy the defining relation") {
  std::vector<std::pair<GlsmSpec, QVec>> cases = {
      {quintic(), qv({1})}, {kp1p1(), qv({4, 4})}, {sixline(), qv({1, 2})}};
  for (const auto& [spec, zeta] : cases) {
    {
      for (const auto& I : minimal_anticones(spec, zeta)) {
        auto w = fixed_point_weights(spec, I);
        for (int j = 0; j < spec.total(); ++j) {
          // u_j = sum_a Q_j^a p_a - lambda_j as weight vectors.
          QVec expect(spec.total(), Rational(0));
          for (int a = 0; a < spec.kappa; ++a)
            for (int l = 0; l < spec.total(); ++l)
              expect[l] += Rational(spec.charges[j][a]) * w.p_weights[a][l];
          expect[j] -= 1;
          CHECK(w.u_weights[j] == expect);
          CHECK(w.k_exponents[j] == w.u_weights[j]);
        }
        // Rows inside the anticone restrict to zero.
        for (int l : I.indices)
          CHECK(w.u_weights[l] == QVec(spec.total(), Rational(0)));
      }
    }
  }
}

TEST_CASE("narrowness matches the invariant-direction criterion") {
  auto q = quintic();
  for (const auto& b : box_elements(q, qv({-1})))
    CHECK(narrowness(q, qv({-1}), b) == b.narrow);
}

TEST_CASE("anticone construction validates independence") {
  CHECK_THROWS_AS(make_anticone(kp1p1(), std::vector<int>{0, 1}), SingularBasis);
  auto I = make_anticone(kp1p1(), std::vector<int>{0, 2});
  CHECK(I.group.order == 1);
}
