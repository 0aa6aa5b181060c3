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

#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "nclinv/gaussian_state.hpp"

namespace nclinv {

/**
 * Photon-number-conserving mode transformation a' = U a with U in U(n).
 * Covers any network of beam splitters and phase shifters.
 */
class PassiveUnitary {
 public:
  /// Validates ||U^dag U - I||_max <= tol.
  explicit PassiveUnitary(Eigen::MatrixXcd u, double tol = kTolStruct);

  int modes() const { return static_cast<int>(u_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return u_; }

  static PassiveUnitary identity(int n);

 private:
  Eigen::MatrixXcd u_;
};

/// Beam splitter between modes `mode_a` and `mode_b` of an n-mode system,
/// identity elsewhere. On the two coupled modes:
///   [[sqrt(T), e^{i phase} sqrt(1-T)], [-e^{-i phase} sqrt(1-T), sqrt(T)]]
/// with transmissivity T in [0, 1].
PassiveUnitary beam_splitter(int n, int mode_a, int mode_b,
                             double transmissivity, double phase = 0.0);

/// Phase shifter e^{i theta} on one mode of an n-mode system.
PassiveUnitary phase_shifter(int n, int mode, double theta);

/// Matrix product second.U * first.U: `first` acts on the state first.
PassiveUnitary compose(const PassiveUnitary& second,
                       const PassiveUnitary& first);

/// Haar-distributed random element of U(n). Deterministic for a given seed
/// across platforms: draws from an mt19937_64 stream through a fixed
/// Box-Muller mapping, then QR with the phases of R's diagonal absorbed.
PassiveUnitary haar_random(int n, std::uint64_t seed);
PassiveUnitary haar_random(int n, std::mt19937_64& rng);

/// Image of the state: N' = U^* N U^T, M' = U M U^T.
MomentMatrices apply(const PassiveUnitary& u, const MomentMatrices& state);

/// The 2n x 2n orthogonal symplectic matrix acting on interleaved
/// quadratures that represents the same transformation:
/// apply(u, s) and the congruence of sigma by this matrix agree.
Eigen::MatrixXd orthosymplectic_image(const PassiveUnitary& u);

// Serializable network description, consumed by the JSON interface and the
// CLI. Mode indices here are 0-based; the JSON layer converts from the
// 1-based indices used in files.

struct BeamSplitterElement {
  int mode_a;
  int mode_b;
  double transmissivity;
  double phase;
};

struct PhaseShifterElement {
  int mode;
  double theta;
};

using NetworkElement = std::variant<BeamSplitterElement, PhaseShifterElement>;

/// Folds the element list (applied in order) into a single PassiveUnitary
/// on n modes. Throws DimensionMismatchError if an element addresses a mode
/// outside [0, n).
PassiveUnitary build_network(const std::vector<NetworkElement>& elements,
                             int n);

}  // namespace nclinv
