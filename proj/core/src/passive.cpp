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

#include "nclinv/passive.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nclinv {

namespace {

void require_mode_range(int n, int mode, const char* what) {
  if (mode < 0 || mode >= n) {
    throw DimensionMismatchError(std::string(what) + " index " +
                                 std::to_string(mode) +
                                 " out of range for " + std::to_string(n) +
                                 " modes");
  }
}

// 53-bit uniform in (0, 1), from the raw mt19937_64 stream. Avoids
// std::uniform_real_distribution / std::normal_distribution, whose outputs
// differ between standard library implementations.
double unit_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Complex standard_normal_pair(std::mt19937_64& rng) {
  const double u1 = unit_uniform(rng);
  const double u2 = unit_uniform(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

PassiveUnitary::PassiveUnitary(Eigen::MatrixXcd u, double tol) {
  const Eigen::Index n = u.rows();
  if (n == 0 || u.cols() != n) {
    throw MalformedStateError("mode transformation must be square and nonempty");
  }
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  const double residual =
      (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw MalformedStateError("mode transformation is not unitary: ||U^H U - I||_max = " +
                              std::to_string(residual));
  }
  u_ = std::move(u);
}

PassiveUnitary PassiveUnitary::identity(int n) {
  if (n <= 0) {
    throw DimensionMismatchError("mode count must be positive");
  }
  return PassiveUnitary(Eigen::MatrixXcd::Identity(n, n));
}

PassiveUnitary beam_splitter(int n, int mode_a, int mode_b,
                             double transmissivity, double phase) {
  require_mode_range(n, mode_a, "beam splitter mode");
  require_mode_range(n, mode_b, "beam splitter mode");
  if (mode_a == mode_b) {
    throw DimensionMismatchError("beam splitter needs two distinct modes");
  }
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
  const double t = std::sqrt(transmissivity);
  const double rr = std::sqrt(1.0 - transmissivity);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  u(mode_a, mode_a) = t;
  u(mode_a, mode_b) = std::polar(rr, phase);
  u(mode_b, mode_a) = -std::polar(rr, -phase);
  u(mode_b, mode_b) = t;
  return PassiveUnitary(std::move(u));
}

PassiveUnitary phase_shifter(int n, int mode, double theta) {
  require_mode_range(n, mode, "phase shifter mode");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  u(mode, mode) = std::polar(1.0, theta);
  return PassiveUnitary(std::move(u));
}

PassiveUnitary compose(const PassiveUnitary& second,
                       const PassiveUnitary& first) {
  if (second.modes() != first.modes()) {
    throw DimensionMismatchError("cannot compose transformations on " +
                                 std::to_string(second.modes()) + " and " +
                                 std::to_string(first.modes()) + " modes");
  }
  return PassiveUnitary(second.matrix() * first.matrix());
}

PassiveUnitary haar_random(int n, std::mt19937_64& rng) {
  if (n <= 0) {
    throw DimensionMismatchError("mode count must be positive");
  }
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      g(r, c) = standard_normal_pair(rng);
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& packed = qr.matrixQR();
  // Absorb the phases of R's diagonal so the distribution is Haar rather
  // than biased by the QR phase convention.
  for (int j = 0; j < n; ++j) {
    const Complex rjj = packed(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
  }
  return PassiveUnitary(std::move(q));
}

PassiveUnitary haar_random(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random(n, rng);
}

MomentMatrices apply(const PassiveUnitary& u, const MomentMatrices& state) {
  if (u.modes() != state.modes()) {
    throw DimensionMismatchError("transformation acts on " +
                                 std::to_string(u.modes()) +
                                 " modes but the state has " +
                                 std::to_string(state.modes()));
  }
  const Eigen::MatrixXcd& m = u.matrix();
  return MomentMatrices(m.conjugate() * state.normal() * m.transpose(),
                        m * state.anomalous() * m.transpose());
}

Eigen::MatrixXd orthosymplectic_image(const PassiveUnitary& u) {
  const int n = u.modes();
  Eigen::MatrixXd s(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Complex e = u.matrix()(j, k);
      s(2 * j, 2 * k) = e.real();
      s(2 * j, 2 * k + 1) = -e.imag();
      s(2 * j + 1, 2 * k) = e.imag();
      s(2 * j + 1, 2 * k + 1) = e.real();
    }
  }
  return s;
}

PassiveUnitary build_network(const std::vector<NetworkElement>& elements,
                             int n) {
  PassiveUnitary total = PassiveUnitary::identity(n);
  for (const NetworkElement& element : elements) {
    const PassiveUnitary step = std::visit(
        [n](const auto& e) -> PassiveUnitary {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, BeamSplitterElement>) {
            return beam_splitter(n, e.mode_a, e.mode_b, e.transmissivity,
                                 e.phase);
          } else {
            return phase_shifter(n, e.mode, e.theta);
          }
        },
        element);
    total = compose(step, total);
  }
  return total;
}

}  // namespace nclinv
