// Copyright 2026 The nclinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "nclinv/invariants.hpp"
#include "nclinv/passive.hpp"
#include "test_helpers.hpp"

using namespace nclinv;
using testutil::close;

TEST_CASE("local determinant on reference states") {
  CHECK(local_determinant(thermal(0.8), 0) == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(local_determinant(reduce(twin_beam(1.5), {0}), 0) ==
        doctest::Approx(2.25).epsilon(1e-12));
  const double r = 0.9;
  const double expected = -std::sinh(r) * std::sinh(r);
  CHECK(close(local_determinant(squeezed_thermal(0.0, r, 0.3), 0), expected,
              1e-12));
  CHECK_THROWS_AS(local_determinant(thermal(1.0), 1), DimensionMismatchError);
}

TEST_CASE("Lee depth on reference states") {
  CHECK(lee_depth(vacuum(1), 0) == 0.0);
  CHECK(lee_depth(thermal(0.6), 0) == -0.6);
  CHECK_THROWS_AS(lee_depth(vacuum(1), -1), DimensionMismatchError);
}

TEST_CASE("Lee depth is the degenerate root of the local determinant") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const MomentMatrices s = testutil::random_single_mode(rng);
    const double i0 = local_determinant(s, 0);
    const double tau = lee_depth(s, 0);
    CHECK(std::abs(i0 + tau * (tau + 2.0 * s.B(0))) <= 1e-12);
  }
}

TEST_CASE("block determinants of reference two-mode states") {
  SUBCASE("vacuum") {
    const SimonInvariants s = simon_invariants(vacuum(2));
    CHECK(close(s.IS1, 0.25, 1e-15));
    CHECK(close(s.IS2, 0.25, 1e-15));
    CHECK(s.IS3 == 0.0);
    CHECK(close(s.IS4, 1.0 / 16.0, 1e-15));
    CHECK(close(s.DeltaTildeS, 0.5, 1e-15));
    CHECK(close(s.DeltaS, 0.5, 1e-15));
  }
  SUBCASE("twin beam") {
    const SimonInvariants s = simon_invariants(twin_beam(1.0));
    CHECK(close(s.IS1, 2.25, 1e-12));
    CHECK(close(s.IS2, 2.25, 1e-12));
    CHECK(close(s.IS3, -2.0, 1e-12));
    CHECK(close(s.IS4, 1.0 / 16.0, 1e-12));
  }
  SUBCASE("mode count is enforced") {
    CHECK_THROWS_AS(simon_invariants(vacuum(3)), DimensionMismatchError);
  }
}

TEST_CASE("pure-state identities of the block determinants") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 50; ++i) {
    const MomentMatrices s = testutil::random_two_mode_pure(rng);
    const SimonInvariants inv = simon_invariants(s);
    CHECK(close(inv.IS4, 1.0 / 16.0, 1e-10));
    CHECK(close(inv.DeltaS, 0.5, 1e-10));
    CHECK(close(entanglement_invariant(s), -inv.IS3, 1e-10));
  }
}

TEST_CASE("entanglement invariant on reference states") {
  CHECK(std::abs(entanglement_invariant(vacuum(2))) <= 1e-15);
  for (const double bp : {0.2, 1.0, 4.0}) {
    CHECK(close(entanglement_invariant(twin_beam(bp)), bp * bp + bp, 1e-10));
  }
  // Products of thermals are separable: EI = -B1(B1+1) B2(B2+1) <= 0.
  const MomentMatrices prod = tensor_product(thermal(1.0), thermal(1.0));
  CHECK(close(entanglement_invariant(prod), -4.0, 1e-12));
  const MomentMatrices prod2 = tensor_product(thermal(0.5), thermal(2.0));
  CHECK(close(entanglement_invariant(prod2), -0.75 * 6.0, 1e-12));
  // Boundary: thermal x vacuum sits exactly on the separability boundary.
  CHECK(std::abs(entanglement_invariant(
            tensor_product(thermal(0.9), vacuum(1)))) <= 1e-12);
}

TEST_CASE("smallest PT symplectic eigenvalue on reference states") {
  CHECK(close(d_minus(vacuum(2)), 0.5, 1e-12));
  const double root2p1 = 1.0 + std::sqrt(2.0);
  CHECK(close(d_minus(twin_beam(1.0)), 0.5 / (root2p1 * root2p1), 1e-12));
  // PT leaves a thermal product unchanged: d_minus = min(B) + 1/2.
  CHECK(close(d_minus(tensor_product(thermal(2.0), thermal(0.3))), 0.8, 1e-12));
}

TEST_CASE("the two closed-form routes and the PT oracle agree") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const MomentMatrices s = i % 2 == 0
                                 ? testutil::random_two_mode_mixed(rng)
                                 : testutil::random_two_mode_pure(rng);
    const double direct = d_minus(s);
    CHECK(close(direct, d_minus_via_ei(s), 1e-10));
    CHECK(close(direct, testutil::pt_d_minus_oracle(s), 1e-10));
  }
}

TEST_CASE("radicand beyond the clamping window raises an error") {
  // Structurally valid but grossly unphysical: strong x-x and p-p
  // correlations with no photons behind them.
  Eigen::MatrixXd sigma(4, 4);
  sigma << 0.5, 0.0, 1.0, 0.0,
           0.0, 0.5, 0.0, 1.0,
           1.0, 0.0, 0.5, 0.0,
           0.0, 1.0, 0.0, 0.5;
  const MomentMatrices s = from_quadrature(QuadratureCM(sigma));
  CHECK_FALSE(validate_physical(s).physical);
  CHECK_THROWS_AS(d_minus(s), NumericalDomainError);
  CHECK_THROWS_AS(log_negativity(s), NumericalDomainError);
}

TEST_CASE("logarithmic negativity on reference states") {
  CHECK(log_negativity(vacuum(2)) == 0.0);
  CHECK(close(log_negativity(twin_beam(1.0)), 2.0 * std::log(1.0 + std::sqrt(2.0)),
              1e-10));
  CHECK(log_negativity(tensor_product(thermal(1.0), thermal(0.5))) == 0.0);
}

TEST_CASE("pure-state logarithmic negativity closed form") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const MomentMatrices s = testutil::random_two_mode_pure(rng);
    const double ei = entanglement_invariant(s);
    if (ei < 0.0) {
      continue;  // roundoff below the boundary; nothing to compare
    }
    const double closed =
        std::log(2.0 * std::sqrt(ei) + std::sqrt(1.0 + 4.0 * ei));
    CHECK(close(log_negativity(s), closed, 1e-10));
  }
}

TEST_CASE("two-mode report on reference states") {
  SUBCASE("vacuum is the all-zero report") {
    const InvariantReport2 r = gni_two_mode(vacuum(2));
    CHECK(r.I1 == 0.0);
    CHECK(r.tau1 == 0.0);
    CHECK(r.LNI1 == 0.0);
    CHECK(close(r.IS1, 0.25, 1e-15));
    CHECK(close(r.IS4, 1.0 / 16.0, 1e-15));
    CHECK(close(r.d_minus, 0.5, 1e-12));
    CHECK(r.E_N == 0.0);
    CHECK(std::abs(r.EI) <= 1e-15);
    CHECK(std::abs(r.GNI) <= 1e-15);
    CHECK_FALSE(r.entangled);
  }
  SUBCASE("twin beam") {
    for (const double bp : {0.1, 1.0, 5.0}) {
      const InvariantReport2 r = gni_two_mode(twin_beam(bp));
      CHECK(close(r.GNI, 2.0 * bp, 1e-10));
      CHECK(close(r.LNI1, -bp * bp, 1e-12));
      CHECK(close(r.EI, bp * bp + bp, 1e-10));
      CHECK(close(gni_via_global_invariants(twin_beam(bp)), 2.0 * bp, 1e-9));
      CHECK(r.entangled == (bp > 0.0));
    }
  }
  SUBCASE("noisy twin beam, frozen pre-build values") {
    const InvariantReport2 r = gni_two_mode(noisy_twin_beam(1.0, 0.2, 0.2));
    CHECK(close(r.GNI, 0.3008, 1e-12));
    CHECK(close(r.EI, 1.5904, 1e-12));
    CHECK(close(r.d_minus, 0.28578643762690542, 1e-12));
    CHECK(close(r.E_N, 0.55936328812201486, 1e-10));
    CHECK(close(gni_via_global_invariants(noisy_twin_beam(1.0, 0.2, 0.2)),
                0.3008, 1e-10));
    CHECK(r.entangled);

    const InvariantReport2 r2 = gni_two_mode(noisy_twin_beam(1.0, 0.3, 0.7));
    CHECK(close(r2.GNI, -6.3482, 1e-12));
    CHECK(close(r2.EI, -0.8841, 1e-12));
    CHECK_FALSE(r2.entangled);
    CHECK(r2.ppt_witness == -r2.EI);
  }
  SUBCASE("mode count is enforced") {
    CHECK_THROWS_AS(gni_two_mode(vacuum(1)), DimensionMismatchError);
    CHECK_THROWS_AS(gni_two_mode(vacuum(3)), DimensionMismatchError);
  }
}

TEST_CASE("the defining sum and the global-invariant form agree") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 200; ++i) {
    const MomentMatrices s = testutil::random_two_mode_mixed(rng);
    const InvariantReport2 r = gni_two_mode(s);
    CHECK(close(r.GNI, gni_via_global_invariants(s),
                1e-10 * std::max(1.0, std::abs(r.GNI))));
    CHECK(r.LNI1 == -r.I1);
    CHECK(r.GNI == r.LNI1 + r.LNI2 + 2.0 * r.EI);
  }
}

TEST_CASE("pure two-mode states: total equals the mean photon number") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 50; ++i) {
    const MomentMatrices s = testutil::random_two_mode_pure(rng);
    const InvariantReport2 r = gni_two_mode(s);
    CHECK(close(r.GNI, s.mean_photons(), 1e-9 * std::max(1.0, s.mean_photons())));
    CHECK(close(r.GNI, -r.Delta, 1e-9 * std::max(1.0, std::abs(r.Delta))));
  }
}

TEST_CASE("two-mode conservation under random passive unitaries") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 30; ++i) {
    const MomentMatrices s = testutil::random_two_mode_mixed(rng);
    const double gni0 = gni_two_mode(s).GNI;
    const double scale = std::max(1.0, std::abs(gni0));
    for (int trial = 0; trial < 10; ++trial) {
      const double gni = gni_two_mode(apply(haar_random(2, rng), s)).GNI;
      CHECK(std::abs(gni - gni0) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("local quantities ignore phase rotations") {
  std::mt19937_64 rng(555);
  const MomentMatrices s = testutil::random_two_mode_mixed(rng);
  const InvariantReport2 base = gni_two_mode(s);
  for (int i = 0; i < 20; ++i) {
    const PassiveUnitary u =
        compose(phase_shifter(2, 0, testutil::uniform(rng, 0.0, 6.28)),
                phase_shifter(2, 1, testutil::uniform(rng, 0.0, 6.28)));
    const InvariantReport2 rotated = gni_two_mode(apply(u, s));
    CHECK(close(rotated.LNI1, base.LNI1, 1e-10));
    CHECK(close(rotated.LNI2, base.LNI2, 1e-10));
    CHECK(close(rotated.tau1, base.tau1, 1e-10));
    CHECK(close(rotated.tau2, base.tau2, 1e-10));
  }
}

TEST_CASE("EI orders passive-orbit points exactly as E_N does") {
  std::mt19937_64 rng(8080);
  const MomentMatrices s = noisy_twin_beam(1.0, 0.15, 0.05);
  std::vector<std::pair<double, double>> points;  // (EI, E_N)
  for (int i = 0; i < 100; ++i) {
    const InvariantReport2 r = gni_two_mode(apply(haar_random(2, rng), s));
    if (r.E_N > 1e-12) {
      points.emplace_back(r.EI, r.E_N);
    }
  }
  REQUIRE(points.size() > 10);
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].second >= points[i - 1].second - 1e-12);
  }
}

TEST_CASE("three-mode report on reference states") {
  SUBCASE("three vacua") {
    const InvariantReport3 r = gni_three_mode(vacuum(3));
    for (const double v : r.LNI) CHECK(v == 0.0);
    for (const double v : r.EI_pair) CHECK(std::abs(v) <= 1e-15);
    CHECK(std::abs(r.GNI3) <= 1e-15);
    CHECK(std::abs(r.K) <= 1e-15);
    CHECK(close(r.DeltaS3, 0.75, 1e-15));
  }
  SUBCASE("twin beam with an idle vacuum mode") {
    for (const double bp : {0.4, 2.0}) {
      const MomentMatrices s = tensor_product(twin_beam(bp), vacuum(1));
      const InvariantReport3 r = gni_three_mode(s);
      CHECK(close(r.GNI3, 2.0 * bp, 1e-10));
      CHECK(close(gni3_via_global_invariants(s), 2.0 * bp,
                  1e-9 * std::max(1.0, 2.0 * bp)));
      CHECK(close(r.LNI[2], 0.0, 1e-12));
      CHECK(close(r.EI_pair[1], 0.0, 1e-12));  // pair (1,3)
    }
  }
  SUBCASE("mode count is enforced") {
    CHECK_THROWS_AS(gni_three_mode(vacuum(2)), DimensionMismatchError);
  }
}

TEST_CASE("pure three-mode identities") {
  std::mt19937_64 rng(1414);
  for (int i = 0; i < 40; ++i) {
    const MomentMatrices s = apply(
        haar_random(3, rng),
        tensor_product(twin_beam(testutil::uniform(rng, 0.0, 3.0)), vacuum(1)));
    const InvariantReport3 r = gni_three_mode(s);
    CHECK(std::abs(r.K) <= 1e-9);
    CHECK(close(r.DeltaS3, 0.75, 1e-9));
    CHECK(close(r.GNI3, -r.Delta3, 1e-9 * std::max(1.0, std::abs(r.GNI3))));
    CHECK(close(r.GNI3, s.mean_photons(),
                1e-9 * std::max(1.0, s.mean_photons())));
    // Pair-marginal determinant equals a quarter of the left-out mode's
    // block determinant for pure states.
    const QuadratureCM cm = to_quadrature(s);
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (int p = 0; p < 3; ++p) {
      const auto [a, b] = pairs[p];
      const int k = 3 - a - b;
      Eigen::Matrix4d pair_cm;
      pair_cm.topLeftCorner<2, 2>() = cm.mode_block(a, a);
      pair_cm.topRightCorner<2, 2>() = cm.mode_block(a, b);
      pair_cm.bottomLeftCorner<2, 2>() = cm.mode_block(b, a);
      pair_cm.bottomRightCorner<2, 2>() = cm.mode_block(b, b);
      const Eigen::Matrix2d sk = cm.mode_block(k, k);
      const double det_sk = sk(0, 0) * sk(1, 1) - sk(0, 1) * sk(1, 0);
      CHECK(close(pair_cm.determinant(), 0.25 * det_sk, 1e-9));
    }
  }
}

TEST_CASE("pure three-mode conservation under random passive unitaries") {
  std::mt19937_64 rng(16180);
  const MomentMatrices s = tensor_product(twin_beam(1.2), vacuum(1));
  const double gni0 = gni_three_mode(s).GNI3;
  const double scale = std::max(1.0, std::abs(gni0));
  for (int trial = 0; trial < 200; ++trial) {
    const double gni = gni_three_mode(apply(haar_random(3, rng), s)).GNI3;
    CHECK(std::abs(gni - gni0) <= 1e-9 * scale);
  }
}

TEST_CASE("mixed three-mode states break the conservation law") {
  std::mt19937_64 rng(97);
  const MomentMatrices s =
      tensor_product(noisy_twin_beam(1.0, 0.3, 0.7), vacuum(1));
  const double gni0 = gni_three_mode(s).GNI3;
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const double gni = gni_three_mode(apply(haar_random(3, rng), s)).GNI3;
    worst = std::max(worst, std::abs(gni - gni0));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("no four-mode analog: the pairwise total is not invariant") {
  const MomentMatrices s = tensor_product(twin_beam(0.7), twin_beam(1.9));
  const auto pairwise_total = [](const MomentMatrices& state) {
    double total = 0.0;
    for (int j = 0; j < 4; ++j) {
      total -= local_determinant(state, j);
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        total += 2.0 * entanglement_invariant(reduce(state, {a, b}));
      }
    }
    return total;
  };
  const double before = pairwise_total(s);
  std::mt19937_64 rng(4242);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    worst = std::max(worst,
                     std::abs(pairwise_total(apply(haar_random(4, rng), s)) -
                              before));
  }
  CHECK(worst > 1e-1);
}
