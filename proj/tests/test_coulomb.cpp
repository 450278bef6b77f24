#include <cmath>
#include <complex>

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

std::vector<Complex> alpha_barnes() { return {{0.3, 0.0}, {0.4, 0.0}}; }
std::vector<Complex> alpha_conifold() {
  return {{0.11, 0.0}, {0.13, 0.0}, {0.17, 0.0}, {0.19, 0.0}};
}
std::vector<Complex> alpha_quintic() {
  return {{0.013, 0.0}, {0.029, 0.0}, {0.041, 0.0},
          {0.053, 0.0}, {0.067, 0.0}, {1.019, 0.0}};
}
std::vector<Complex> alpha_kp1p1() {
  return {{0.0137, 0.0}, {0.0299, 0.0}, {0.0413, 0.0}, {0.0531, 0.0}, {1.0167, 0.0}};
}

ThetaParam theta1(double z, double b = 0.0) { return ThetaParam{{z}, {b}}; }
Brane unit_brane(int kappa) { return Brane::single(std::vector<long long>(kappa, 0)); }

}  // namespace

TEST_CASE("two-row contour integral matches the closed form and the series") {
  auto spec = barnes();
  for (double theta : {2.0, -2.0}) {
    auto r = mb_integral_1d(spec, 0.05, theta1(theta), unit_brane(1), alpha_barnes(), 1e-10);
    CHECK(r.decay_certified);
    double c = 0.7;
    double closed =
        -std::exp(-theta * 0.3) * std::tgamma(c) * std::pow(1.0 + std::exp(-theta), -c);
    CHECK(std::abs(r.value - Complex{closed, 0.0}) <= 1e-8 * std::abs(closed));
    double frozen = theta > 0 ? oracle::kBarnesZPlus : oracle::kBarnesZMinus;
    CHECK(std::abs(r.value - Complex{frozen, 0.0}) <= 1e-8);
  }
}

TEST_CASE("contour value is independent of the offset inside the positivity strip") {
  auto spec = barnes();
  Complex a = mb_integral_1d(spec, 0.01, theta1(2.0), unit_brane(1), alpha_barnes(), 1e-11).value;
  Complex b = mb_integral_1d(spec, 0.10, theta1(2.0), unit_brane(1), alpha_barnes(), 1e-11).value;
  Complex c = mb_integral_1d(spec, 0.20, theta1(2.0), unit_brane(1), alpha_barnes(), 1e-11).value;
  CHECK(std::abs(a - b) <= 1e-9);
  CHECK(std::abs(a - c) <= 1e-9);
  CHECK(std::abs(b - c) <= 1e-9);
}

TEST_CASE("contour integral agrees with the frozen references on both chambers") {
  auto coni = conifold();
  auto zp = mb_integral_1d(coni, 0.03, theta1(3.0), unit_brane(1), alpha_conifold(), 1e-9);
  CHECK(std::abs(zp.value - Complex{oracle::kConifoldZPlus, 0.0}) <=
        1e-8 * std::abs(oracle::kConifoldZPlus));
  auto zm = mb_integral_1d(coni, 0.03, theta1(-3.0), unit_brane(1), alpha_conifold(), 1e-9);
  CHECK(std::abs(zm.value - Complex{oracle::kConifoldZMinus, 0.0}) <=
        1e-8 * std::abs(oracle::kConifoldZMinus));
  // On the wall itself the contour integral is still perfectly regular.
  auto zw = mb_integral_1d(coni, 0.03, theta1(0.0), unit_brane(1), alpha_conifold(), 1e-9);
  CHECK(std::abs(zw.value - Complex{oracle::kConifoldZWall, 0.0}) <=
        1e-8 * std::abs(oracle::kConifoldZWall));

  auto q = quintic();
  auto zq = mb_integral_1d(q, 0.0954, theta1(10.0), unit_brane(1), alpha_quintic(), 1e-9);
  CHECK(std::abs(zq.value - Complex{oracle::kQuinticZPlus, 0.0}) <=
        1e-8 * std::abs(oracle::kQuinticZPlus));
}

TEST_CASE("the offset finder lands mid-strip and rejects empty strips") {
  auto coni = conifold();
  double d = find_delta_1d(coni, alpha_conifold());
  CHECK(d == doctest::Approx(0.03).epsilon(1e-12));
  auto q = quintic();
  double dq = find_delta_1d(q, alpha_quintic());
  // Strip: max_i(-alpha_i) < delta < alpha_6/5.
  CHECK(dq == doctest::Approx((1.019 / 5.0 - 0.013) / 2.0).epsilon(1e-12));
  // An offset outside the strip is refused up front.
  CHECK_THROWS_AS(
      mb_integral_1d(coni, 0.5, theta1(3.0), unit_brane(1), alpha_conifold(), 1e-9),
      BadDelta);
  CHECK_THROWS_AS(
      mb_integral_1d(coni, -0.2, theta1(3.0), unit_brane(1), alpha_conifold(), 1e-9),
      BadDelta);
}

TEST_CASE("empty residue set reduces the line integral to the direct contour") {
  auto coni = conifold();
  auto direct = mb_integral_1d(coni, 0.03, theta1(3.0), unit_brane(1), alpha_conifold(), 1e-10);
  auto line = line_integral_after_residues(coni, {}, {}, {Complex{0.03, 0.0}}, qv({1}),
                                           theta1(3.0), unit_brane(1), alpha_conifold(), 1e-10);
  CHECK(line.value.real() == direct.value.real());
  CHECK(line.value.imag() == direct.value.imag());
  CHECK(line.samples == direct.samples);
}

TEST_CASE("shifted base point reproduces the frozen line value") {
  auto coni = conifold();
  auto line = line_integral_after_residues(coni, {}, {}, {Complex{0.24, 0.0}}, qv({1}),
                                           theta1(3.0), unit_brane(1), alpha_conifold(), 1e-9);
  CHECK(std::abs(line.value - Complex{oracle::kConifoldLineP024, 0.0}) <=
        1e-8 * std::abs(oracle::kConifoldLineP024));
}

TEST_CASE("rank-two line block equals minus the residue slice sums") {
  auto spec = kp1p1();
  auto alpha = alpha_kp1p1();
  ThetaParam theta{{4.0, 4.0}, {0.0, 0.0}};
  // Base point for J = {first row}, m = 0, offset 0.3 on the second pairing.
  std::vector<Complex> p{Complex{-alpha[0].real(), 0.0}, Complex{0.3 - alpha[2].real(), 0.0}};
  auto line = line_integral_after_residues(spec, {0}, {0}, p, qv({0, 1}), theta, unit_brane(2),
                                           alpha, 1e-8);
  CHECK(line.decay_certified);
  CHECK(std::abs(line.value - Complex{oracle::kKp1p1LineJ1, 0.0}) <=
        1e-6 * std::abs(oracle::kKp1p1LineJ1));

  // The two completions of J = {0} by a row with nonzero pairing against the
  // direction give geometrically convergent residue slices.
  auto slice = [&](int other) {
    auto I = make_anticone(spec, {0, other});
    Complex acc{0.0, 0.0};
    for (int k = 0; k <= 60; ++k) acc += residue_value(spec, I, {0, k}, alpha, theta, {0, 0});
    return acc;
  };
  Complex s13 = slice(2), s14 = slice(3);
  CHECK(std::abs(s13 - Complex{oracle::kKp1p1Slice13, 0.0}) <=
        1e-9 * std::abs(oracle::kKp1p1Slice13));
  CHECK(std::abs(s14 - Complex{oracle::kKp1p1Slice14, 0.0}) <=
        1e-9 * std::abs(oracle::kKp1p1Slice14));
  CHECK(std::abs(line.value + (s13 + s14)) <= 1e-6 * std::abs(line.value));
}

TEST_CASE("the truncation radius really sits in the certified decay region") {
  auto coni = conifold();
  double tol = 1e-8;
  auto r = mb_integral_1d(coni, 0.03, theta1(3.0), unit_brane(1), alpha_conifold(), tol);
  CHECK(r.decay_certified);
  CHECK(r.truncation_radius >= 5.0);
  Complex edge = integrand(coni, {Complex{0.03, r.truncation_radius}}, alpha_conifold(),
                           theta1(3.0), {0});
  CHECK(std::abs(edge) <= 10.0 * tol);
  CHECK(r.samples > 0);
}

TEST_CASE("contours without certified decay are refused") {
  auto b = barnes();
  // Flat direction with |B| = 1/2 cancels the gamma decay exactly.
  CHECK_THROWS_AS(
      mb_integral_1d(b, 0.05, theta1(2.0, 0.5), unit_brane(1), alpha_barnes(), 1e-8), NoDecay);
  // A unit character does the same through t.
  auto coni = conifold();
  CHECK_THROWS_AS(
      mb_integral_1d(coni, 0.03, theta1(3.0), Brane::single({1}), alpha_conifold(), 1e-8),
      NoDecay);
}

TEST_CASE("the contour integral is linear over brane terms") {
  auto q = quintic();
  Complex c0{2.0, 1.0}, c1{-0.5, 0.25};
  Brane combined;
  combined.terms = {{{0}, c0}, {{1}, c1}};
  auto whole = mb_integral_1d(q, 0.0954, theta1(10.0), combined, alpha_quintic(), 1e-10);
  auto part0 =
      mb_integral_1d(q, 0.0954, theta1(10.0), Brane::single({0}), alpha_quintic(), 1e-10);
  auto part1 =
      mb_integral_1d(q, 0.0954, theta1(10.0), Brane::single({1}), alpha_quintic(), 1e-10);
  Complex lin = c0 * part0.value + c1 * part1.value;
  CHECK(std::abs(whole.value - lin) <= 1e-9 * std::max(1.0, std::abs(whole.value)));
}

TEST_CASE("sample recording captures the vertical line parameterization") {
  auto b = barnes();
  std::vector<std::pair<double, Complex>> samples;
  auto r = mb_integral_1d(b, 0.05, theta1(2.0), unit_brane(1), alpha_barnes(), 1e-8, &samples);
  CHECK(static_cast<long long>(samples.size()) == r.samples);
  REQUIRE(!samples.empty());
  for (const auto& [s, v] : samples) {
    CHECK(std::abs(s) <= r.truncation_radius + 1e-12);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}

TEST_CASE("integer pairing partners exist exactly for primitive directions") {
  QVec h = qv({2, 3});
  QVec eta = unit_pairing_vector(h);
  CHECK(pairing(eta, h) == 1);
  CHECK(pairing(unit_pairing_vector(qv({0, 1})), qv({0, 1})) == 1);
  CHECK(pairing(unit_pairing_vector(qv({1})), qv({1})) == 1);
  CHECK(pairing(unit_pairing_vector(qv({-1})), qv({-1})) == 1);
  CHECK(pairing(unit_pairing_vector(qv({6, 10, 15})), qv({6, 10, 15})) == 1);
  CHECK_THROWS_AS(unit_pairing_vector(qv({2, 4})), Error);
}
