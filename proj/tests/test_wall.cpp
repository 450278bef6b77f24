#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "glsm/coulomb.hpp"
#include "glsm/higgs.hpp"
#include "glsm/wall.hpp"
#include "oracles.hpp"

using namespace glsm;

namespace {

QVec qv(std::initializer_list<long long> xs) {
  QVec v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

GlsmSpec barnes() { return validate_spec("barnes", 1, {{1}, {-1}}, {0, 0}); }
GlsmSpec conifold() {
  return validate_spec("conifold", 1, {{1}, {1}, {-1}, {-1}}, {0, 0, 0, 0});
}
GlsmSpec quintic() {
  return validate_spec("quintic", 1, {{1}, {1}, {1}, {1}, {1}, {-5}},
                       {0, 0, 0, 0, 0, 2});
}
GlsmSpec kp1p1() {
  return validate_spec("kp1p1", 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {-2, -2}},
                       {0, 0, 0, 0, 2});
}
GlsmSpec sixline() {
  return validate_spec("sixline", 2,
                       {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}},
                       {0, 0, 0, 0, 0, 0});
}

std::vector<Complex> alpha_conifold() {
  return {{0.11, 0.0}, {0.13, 0.0}, {0.17, 0.0}, {0.19, 0.0}};
}
std::vector<Complex> alpha_kp1p1() {
  return {{0.0137, 0.0}, {0.0299, 0.0}, {0.0413, 0.0}, {0.0531, 0.0}, {1.0167, 0.0}};
}

ThetaParam theta1(double z, double b = 0.0) { return ThetaParam{{z}, {b}}; }
Brane unit_brane(int kappa) { return Brane::single(std::vector<long long>(kappa, 0)); }

std::set<std::vector<int>> index_sets(const std::vector<Anticone>& list) {
  std::set<std::vector<int>> out;
  for (const auto& a : list) out.insert(a.indices);
  return out;
}

}  // namespace

TEST_CASE("circuits orient from the positive chamber across the shared facet") {
  auto coni = conifold();
  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  CHECK(c.h == qv({1}));
  CHECK(c.h_i == std::vector<long long>{1, 1, -1, -1});
  CHECK(c.I_plus == std::vector<int>{0, 1});
  CHECK(c.I_minus == std::vector<int>{2, 3});
  Circuit cswap = circuit_of_wall(coni, qv({-3}), qv({3}));
  CHECK(cswap.h == qv({-1}));
  CHECK(cswap.I_plus == std::vector<int>{2, 3});

  auto q = quintic();
  Circuit cq = circuit_of_wall(q, qv({1}), qv({-1}));
  CHECK(cq.h == qv({1}));
  CHECK(cq.h_i == std::vector<long long>{1, 1, 1, 1, 1, -5});
  CHECK(cq.I_minus == std::vector<int>{5});

  auto b = barnes();
  Circuit cb = circuit_of_wall(b, qv({2}), qv({-2}));
  CHECK(cb.h_i == std::vector<long long>{1, -1});

  auto k = kp1p1();
  Circuit ck = circuit_of_wall(k, qv({4, 4}), qv({4, -4}));
  CHECK(ck.h == qv({0, 1}));
  CHECK(ck.h_i == std::vector<long long>{0, 0, 1, 1, -2});
  CHECK(ck.I_plus == std::vector<int>{2, 3});
  CHECK(ck.I_minus == std::vector<int>{4});
}

TEST_CASE("chambers without a shared facet are rejected") {
  auto s = sixline();
  CHECK_THROWS_AS(circuit_of_wall(s, qv({2, 1}), qv({-2, -1})), NotAdjacent);
}

TEST_CASE("anticones split into essential sides and a shared nonessential core") {
  auto coni = conifold();
  Circuit cc = circuit_of_wall(coni, qv({3}), qv({-3}));
  WallData wc = classify_anticones(coni, cc, qv({3}), qv({-3}));
  CHECK(index_sets(wc.essential_plus) == std::set<std::vector<int>>{{0}, {1}});
  CHECK(index_sets(wc.essential_minus) == std::set<std::vector<int>>{{2}, {3}});
  CHECK(wc.nonessential.empty());
  CHECK(wc.a0 == std::vector<std::vector<int>>{{}});

  auto q = quintic();
  Circuit cq = circuit_of_wall(q, qv({1}), qv({-1}));
  WallData wq = classify_anticones(q, cq, qv({1}), qv({-1}));
  CHECK(wq.essential_plus.size() == 5);
  CHECK(index_sets(wq.essential_minus) == std::set<std::vector<int>>{{5}});
  CHECK(wq.nonessential.empty());
  CHECK(wq.a0 == std::vector<std::vector<int>>{{}});

  auto k = kp1p1();
  Circuit ck = circuit_of_wall(k, qv({4, 4}), qv({4, -4}));
  WallData wk = classify_anticones(k, ck, qv({4, 4}), qv({4, -4}));
  CHECK(index_sets(wk.essential_plus) ==
        std::set<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(index_sets(wk.essential_minus) == std::set<std::vector<int>>{{0, 4}, {1, 4}});
  CHECK(wk.nonessential.empty());
  CHECK(wk.a0 == std::vector<std::vector<int>>{{0}, {1}});

  auto s = sixline();
  Circuit cs = circuit_of_wall(s, qv({1, 2}), qv({2, 1}));
  CHECK(cs.h == qv({-1, 1}));
  CHECK(cs.h_i == std::vector<long long>{-1, 1, 0, 1, -1, 0});
  CHECK(cs.I_plus == std::vector<int>{1, 3});
  CHECK(cs.I_minus == std::vector<int>{0, 4});
  WallData ws = classify_anticones(s, cs, qv({1, 2}), qv({2, 1}));
  CHECK(index_sets(ws.essential_plus) == std::set<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(index_sets(ws.essential_minus) == std::set<std::vector<int>>{{0, 2}, {2, 4}});
  CHECK(index_sets(ws.nonessential) == std::set<std::vector<int>>{{0, 1}});
  CHECK(ws.a0 == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("the split partitions the minimal anticones on each side exactly") {
  struct Pair {
    GlsmSpec spec;
    QVec zp, zm;
  };
  std::vector<Pair> cases;
  cases.push_back({conifold(), qv({3}), qv({-3})});
  cases.push_back({quintic(), qv({1}), qv({-1})});
  cases.push_back({kp1p1(), qv({4, 4}), qv({4, -4})});
  cases.push_back({sixline(), qv({1, 2}), qv({2, 1})});
  for (const auto& cs : cases) {
    Circuit c = circuit_of_wall(cs.spec, cs.zp, cs.zm);
    WallData w = classify_anticones(cs.spec, c, cs.zp, cs.zm);
    auto check_side = [&](const std::vector<Anticone>& essential, const QVec& zeta) {
      auto all = index_sets(minimal_anticones(cs.spec, zeta));
      auto ess = index_sets(essential);
      auto non = index_sets(w.nonessential);
      CHECK(ess.size() + non.size() == all.size());
      for (const auto& idx : ess) CHECK(all.count(idx) == 1);
      for (const auto& idx : non) CHECK(all.count(idx) == 1);
      for (const auto& idx : ess) CHECK(non.count(idx) == 0);
    };
    check_side(w.essential_plus, cs.zp);
    check_side(w.essential_minus, cs.zm);
    // Nonessential anticones contain circuit rows of both signs.
    for (const auto& a : w.nonessential) {
      bool pos = false, neg = false;
      for (int i : a.indices) {
        if (c.h_i[i] > 0) pos = true;
        if (c.h_i[i] < 0) neg = true;
      }
      CHECK(pos);
      CHECK(neg);
    }
  }
}

TEST_CASE("window margins are exact rationals and reject the boundary") {
  auto q = quintic();
  Circuit cq = circuit_of_wall(q, qv({1}), qv({-1}));
  CHECK(grade_margin_exact(cq, qv({0}), {0}) == Rational(5, 2));

  auto coni = conifold();
  Circuit cc = circuit_of_wall(coni, qv({3}), qv({-3}));
  CHECK(grade_margin_exact(cc, qv({0}), {0}) == Rational(1));
  // A unit character sits exactly on the window boundary: refused.
  CHECK(grade_margin_exact(cc, qv({0}), {1}) == Rational(0));
  CHECK_FALSE(grade_restriction(cc, {0.0}, {1}).ok);
  GradeCheck in = grade_restriction(cc, {0.3}, {0});
  CHECK(in.ok);
  CHECK(in.margin == doctest::Approx(0.7).epsilon(1e-14));
  GradeCheck out = grade_restriction(cc, {1.5}, {0});
  CHECK_FALSE(out.ok);
  CHECK(out.margin == doctest::Approx(-0.5).epsilon(1e-14));
  // Without the window there is also no contour decay at this flat field.
  CHECK(decay_exponent(coni, {}, {1.0}, {1.5}, {0.0}) <= 0.0);
}

TEST_CASE("base points sit on the offset hyperplane and dodge poles") {
  auto coni = conifold();
  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  auto p = p_of_m(coni, c, {}, {}, 0.35, alpha_conifold());
  REQUIRE(p.size() == 1);
  CHECK(std::abs(p[0] - Complex{0.24, 0.0}) <= 1e-15);
  // epsilon = 0.3 puts the fourth row exactly on its pole at zero.
  CHECK_THROWS_AS(p_of_m(coni, c, {}, {}, 0.3, alpha_conifold()), Resonant);

  auto k = kp1p1();
  Circuit ck = circuit_of_wall(k, qv({4, 4}), qv({4, -4}));
  auto alpha = alpha_kp1p1();
  auto pk = p_of_m(k, ck, {0}, {0}, 0.3, alpha);
  REQUIRE(pk.size() == 2);
  CHECK(std::abs(pk[0] - Complex{-alpha[0].real(), 0.0}) <= 1e-15);
  CHECK(std::abs(pk[1] - Complex{0.3 - alpha[2].real(), 0.0}) <= 1e-15);
}

TEST_CASE("ray corrections collect exactly the residues between the contours") {
  auto coni = conifold();
  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  auto alpha = alpha_conifold();
  auto p = p_of_m(coni, c, {}, {}, 0.35, alpha);
  auto theta = theta1(3.0);
  auto rcs = ray_corrections(coni, c, {}, {}, p, unit_brane(1), alpha, theta);
  REQUIRE(rcs.size() == 2);
  std::set<std::vector<int>> seen;
  for (const auto& rc : rcs) {
    seen.insert(rc.anticone.indices);
    CHECK(rc.m == std::vector<int>{0});
    Complex res = residue_value(coni, rc.anticone, rc.m, alpha, theta, {0});
    CHECK(std::abs(rc.value - res) <= 1e-15 * std::max(1.0, std::abs(res)));
  }
  CHECK(seen == std::set<std::vector<int>>{{2}, {3}});

  // At the rank-two base point every non-pinned argument stays positive:
  // no residues are crossed.
  auto k = kp1p1();
  Circuit ck = circuit_of_wall(k, qv({4, 4}), qv({4, -4}));
  auto ak = alpha_kp1p1();
  auto pk = p_of_m(k, ck, {0}, {0}, 0.3, ak);
  CHECK(ray_corrections(k, ck, {0}, {0}, pk, unit_brane(2), ak,
                        ThetaParam{{4.0, 4.0}, {0.0, 0.0}})
            .empty());
}

TEST_CASE("the wall value does not depend on the admissible offset") {
  auto coni = conifold();
  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  WallData w = classify_anticones(coni, c, qv({3}), qv({-3}));
  auto a = alpha_conifold();
  Complex v1 = wall_partition(coni, w, theta1(3.0), unit_brane(1), a, 1e-10, 0.35).value;
  Complex v2 = wall_partition(coni, w, theta1(3.0), unit_brane(1), a, 1e-10, 0.55).value;
  CHECK(std::abs(v1 - v2) <= 1e-7);
}

TEST_CASE("the wall value continues both chambers and holds on the wall itself") {
  auto coni = conifold();
  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  WallData w = classify_anticones(coni, c, qv({3}), qv({-3}));
  auto a = alpha_conifold();

  auto wp = wall_partition(coni, w, theta1(3.0), unit_brane(1), a, 1e-9);
  CHECK(wp.grr_margin == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(wp.essential_contributions.size() == 1);
  CHECK(wp.nonessential_contributions.empty());
  CHECK(std::abs(wp.value - Complex{oracle::kConifoldZPlus, 0.0}) <=
        1e-6 * std::abs(oracle::kConifoldZPlus));
  Complex mb = mb_integral_1d(coni, 0.03, theta1(3.0), unit_brane(1), a, 1e-9).value;
  CHECK(std::abs(wp.value - mb) <= 1e-6 * std::abs(mb));

  auto w0 = wall_partition(coni, w, theta1(0.0), unit_brane(1), a, 1e-9);
  CHECK(std::abs(w0.value - Complex{oracle::kConifoldZWall, 0.0}) <=
        1e-6 * std::abs(oracle::kConifoldZWall));
}

TEST_CASE("rank-two wall value matches the chamber series on both sides") {
  auto k = kp1p1();
  Circuit c = circuit_of_wall(k, qv({4, 4}), qv({4, -4}));
  WallData w = classify_anticones(k, c, qv({4, 4}), qv({4, -4}));
  auto a = alpha_kp1p1();

  auto plus = wall_partition(k, w, ThetaParam{{4.0, 4.0}, {0.0, 0.0}}, unit_brane(2), a, 1e-8);
  CHECK(std::abs(plus.value - Complex{oracle::kKp1p1ZGeom, 0.0}) <=
        1e-6 * std::abs(oracle::kKp1p1ZGeom));
  CHECK(plus.essential_contributions.size() == 2);  // blocks J = {1} and J = {2}

  auto minus = wall_partition(k, w, ThetaParam{{4.0, -4.0}, {0.0, 0.0}}, unit_brane(2), a, 1e-8);
  Complex zm = chamber_partition(k, chamber_of(k, qv({4, -4})),
                                 ThetaParam{{4.0, -4.0}, {0.0, 0.0}}, unit_brane(2), a, 1e-10)
                   .value;
  CHECK(std::abs(minus.value - zm) <= 1e-6 * std::max(1.0, std::abs(zm)));
}

TEST_CASE("the end-to-end crossing check closes the triangle of evaluations") {
  auto coni = conifold();
  auto report = wall_crossing_check(coni, qv({3}), qv({-3}), {0.0}, unit_brane(1),
                                    alpha_conifold(), 1e-8);
  CHECK(report.grr_ok);
  CHECK_FALSE(report.wall_refused);
  REQUIRE(report.mb_plus.has_value());
  REQUIRE(report.mb_minus.has_value());
  REQUIRE(report.mb_zero.has_value());
  REQUIRE(report.wall_plus.has_value());
  REQUIRE(report.wall_minus.has_value());
  REQUIRE(report.wall_zero.has_value());
  CHECK(std::abs(report.chamber_plus - Complex{oracle::kConifoldZPlus, 0.0}) <=
        1e-6 * std::abs(oracle::kConifoldZPlus));
  CHECK(std::abs(report.chamber_minus - Complex{oracle::kConifoldZMinus, 0.0}) <=
        1e-6 * std::abs(oracle::kConifoldZMinus));
  CHECK(std::abs(*report.mb_zero - Complex{oracle::kConifoldZWall, 0.0}) <=
        1e-6 * std::abs(oracle::kConifoldZWall));
  CHECK(report.max_discrepancy < 1e-6);
}

TEST_CASE("a refused window degrades to chamber values instead of throwing") {
  auto coni = conifold();
  auto report = wall_crossing_check(coni, qv({3}), qv({-3}), {0.0}, Brane::single({1}),
                                    alpha_conifold(), 1e-8);
  CHECK_FALSE(report.grr_ok);
  CHECK(report.wall_refused);
  CHECK(report.grr_margin == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_FALSE(report.wall_plus.has_value());
  CHECK_FALSE(report.mb_plus.has_value());
  CHECK(std::isfinite(report.chamber_plus.real()));
  CHECK(std::isfinite(report.chamber_minus.real()));

  Circuit c = circuit_of_wall(coni, qv({3}), qv({-3}));
  WallData w = classify_anticones(coni, c, qv({3}), qv({-3}));
  CHECK_THROWS_AS(wall_partition(coni, w, theta1(3.0), Brane::single({1}),
                                 alpha_conifold(), 1e-8),
                  GradeRestrictionViolated);
}

TEST_CASE("gauge rank three walls are classified but not summed") {
  auto three = validate_spec("three", 3,
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                             {0, 0, 0, 0});
  Circuit c = circuit_of_wall(three, qv({1, 1, 1}), qv({1, 1, -1}));
  CHECK(c.h == qv({0, 0, 1}));
  WallData w = classify_anticones(three, c, qv({1, 1, 1}), qv({1, 1, -1}));
  CHECK(w.a0 == std::vector<std::vector<int>>{{0, 1}});
  std::vector<Complex> alpha{{0.11, 0.0}, {0.13, 0.0}, {0.17, 0.0}, {0.41, 0.0}};
  CHECK_THROWS_AS(wall_partition(three, w, ThetaParam{{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}},
                                 unit_brane(3), alpha, 1e-8),
                  Unsupported);
}
