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

#include "nclinv/invariants.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace nclinv {

namespace {

void require_modes(const MomentMatrices& state, int n, const char* op) {
  if (state.modes() != n) {
    std::ostringstream msg;
    msg << op << " requires a " << n << "-mode state, got " << state.modes();
    throw DimensionMismatchError(msg.str());
  }
}

void require_mode_index(const MomentMatrices& state, int mode) {
  if (mode < 0 || mode >= state.modes()) {
    throw DimensionMismatchError("mode index out of range");
  }
}

double det2(const Eigen::Matrix2d& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double clamp_nonnegative(double value, const char* what) {
  if (value < 0.0) {
    if (value >= -kRadicandClamp) {
      return 0.0;
    }
    std::ostringstream msg;
    msg << what << " is negative beyond roundoff: " << value;
    throw NumericalDomainError(msg.str());
  }
  return value;
}

double d_minus_from(double delta_tilde, double is4) {
  const double disc = clamp_nonnegative(
      delta_tilde * delta_tilde - 4.0 * is4,
      "discriminant of the partial-transpose symplectic spectrum");
  const double dsq = clamp_nonnegative(
      0.5 * (delta_tilde - std::sqrt(disc)),
      "squared smallest partial-transpose symplectic eigenvalue");
  return std::sqrt(dsq);
}

}  // namespace

double local_determinant(const MomentMatrices& state, int mode) {
  require_mode_index(state, mode);
  const double b = state.B(mode);
  return b * b - std::norm(state.C(mode));
}

double lee_depth(const MomentMatrices& state, int mode) {
  require_mode_index(state, mode);
  return std::abs(state.C(mode)) - state.B(mode);
}

SimonInvariants simon_invariants(const MomentMatrices& state) {
  require_modes(state, 2, "simon_invariants");
  const QuadratureCM cm = to_quadrature(state);
  SimonInvariants out;
  out.IS1 = det2(cm.mode_block(0, 0));
  out.IS2 = det2(cm.mode_block(1, 1));
  out.IS3 = det2(cm.mode_block(0, 1));
  out.IS4 = cm.sigma().determinant();
  out.DeltaTildeS = out.IS1 + out.IS2 - 2.0 * out.IS3;
  out.DeltaS = out.IS1 + out.IS2 + 2.0 * out.IS3;
  return out;
}

double entanglement_invariant(const MomentMatrices& state) {
  const SimonInvariants s = simon_invariants(state);
  return 0.25 * s.DeltaTildeS - s.IS4 - 1.0 / 16.0;
}

double d_minus(const MomentMatrices& state) {
  const SimonInvariants s = simon_invariants(state);
  return d_minus_from(s.DeltaTildeS, s.IS4);
}

double d_minus_via_ei(const MomentMatrices& state) {
  const SimonInvariants s = simon_invariants(state);
  const double ei = 0.25 * s.DeltaTildeS - s.IS4 - 1.0 / 16.0;
  return d_minus_from(4.0 * s.IS4 + 4.0 * ei + 0.25, s.IS4);
}

double log_negativity(const MomentMatrices& state) {
  return std::max(0.0, -std::log(2.0 * d_minus(state)));
}

InvariantReport2 gni_two_mode(const MomentMatrices& state) {
  require_modes(state, 2, "gni_two_mode");
  InvariantReport2 r{};
  r.I1 = local_determinant(state, 0);
  r.I2 = local_determinant(state, 1);
  r.tau1 = lee_depth(state, 0);
  r.tau2 = lee_depth(state, 1);
  r.LNI1 = -r.I1;
  r.LNI2 = -r.I2;
  const SimonInvariants s = simon_invariants(state);
  r.IS1 = s.IS1;
  r.IS2 = s.IS2;
  r.IS3 = s.IS3;
  r.IS4 = s.IS4;
  r.DeltaTildeS = s.DeltaTildeS;
  r.DeltaS = s.DeltaS;
  r.EI = 0.25 * s.DeltaTildeS - s.IS4 - 1.0 / 16.0;
  r.d_minus = d_minus_from(s.DeltaTildeS, s.IS4);
  r.E_N_raw = -std::log(2.0 * r.d_minus);
  r.E_N = std::max(0.0, r.E_N_raw);
  r.Delta = r.I1 + r.I2 + 2.0 * s.IS3;
  r.GNI = r.LNI1 + r.LNI2 + 2.0 * r.EI;
  r.ppt_witness = -r.EI;
  r.entangled = r.EI > kTolEnt;
  return r;
}

double gni_via_global_invariants(const MomentMatrices& state) {
  require_modes(state, 2, "gni_via_global_invariants");
  const SimonInvariants s = simon_invariants(state);
  const double delta = local_determinant(state, 0) +
                       local_determinant(state, 1) + 2.0 * s.IS3;
  return -delta + 0.5 * s.DeltaS - 2.0 * s.IS4 - 0.125;
}

InvariantReport3 gni_three_mode(const MomentMatrices& state) {
  require_modes(state, 3, "gni_three_mode");
  InvariantReport3 r{};
  const QuadratureCM cm = to_quadrature(state);
  constexpr std::array<std::pair<int, int>, 3> pairs{
      {{0, 1}, {0, 2}, {1, 2}}};
  double sum_i = 0.0, sum_det_s = 0.0, sum_cross = 0.0, sum_pair4 = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double i_j = local_determinant(state, j);
    r.LNI[j] = -i_j;
    sum_i += i_j;
    sum_det_s += det2(cm.mode_block(j, j));
  }
  double sum_ei = 0.0;
  for (int p = 0; p < 3; ++p) {
    const auto [j, k] = pairs[p];
    r.EI_pair[p] = entanglement_invariant(reduce(state, {j, k}));
    sum_ei += r.EI_pair[p];
    sum_cross += det2(cm.mode_block(j, k));
    Eigen::Matrix4d pair_cm;
    pair_cm.topLeftCorner<2, 2>() = cm.mode_block(j, j);
    pair_cm.topRightCorner<2, 2>() = cm.mode_block(j, k);
    pair_cm.bottomLeftCorner<2, 2>() = cm.mode_block(k, j);
    pair_cm.bottomRightCorner<2, 2>() = cm.mode_block(k, k);
    sum_pair4 += pair_cm.determinant();
  }
  r.Delta3 = sum_i + 2.0 * sum_cross;
  r.DeltaS3 = sum_det_s + 2.0 * sum_cross;
  r.K = 2.0 * sum_pair4 - 0.5 * sum_det_s;
  r.GNI3 = r.LNI[0] + r.LNI[1] + r.LNI[2] + 2.0 * sum_ei;
  return r;
}

double gni3_via_global_invariants(const MomentMatrices& state) {
  const InvariantReport3 r = gni_three_mode(state);
  return -r.Delta3 + 0.5 * r.DeltaS3 - r.K - 3.0 / 8.0;
}

}  // namespace nclinv
