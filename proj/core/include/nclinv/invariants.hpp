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

#include <array>

#include "nclinv/gaussian_state.hpp"

namespace nclinv {

/// Witness margin above which a state is reported as entangled.
inline constexpr double kTolEnt = 1e-12;
/// Nonnegative quantities this far below zero are treated as roundoff and
/// clamped; anything lower raises NumericalDomainError.
inline constexpr double kRadicandClamp = 1e-12;

/// Determinants of the 2x2 covariance blocks of a two-mode state, plus the
/// two symplectic combinations built from them.
struct SimonInvariants {
  double IS1;  ///< det of mode-1 block
  double IS2;  ///< det of mode-2 block
  double IS3;  ///< det of the cross block
  double IS4;  ///< det of the full 4x4 covariance matrix
  double DeltaTildeS;  ///< IS1 + IS2 - 2*IS3 (partial-transpose seralian)
  double DeltaS;       ///< IS1 + IS2 + 2*IS3
};

/// Everything the two-mode analysis produces, in one pass.
struct InvariantReport2 {
  double I1, I2;      ///< local determinants B_j^2 - |C_j|^2
  double tau1, tau2;  ///< Lee nonclassicality depths |C_j| - B_j
  double LNI1, LNI2;  ///< local nonclassicality invariants -I_j
  double IS1, IS2, IS3, IS4;
  double DeltaTildeS;
  double EI;           ///< entanglement invariant; > 0 iff PPT is violated
  double d_minus;      ///< smallest partial-transpose symplectic eigenvalue
  double E_N;          ///< logarithmic negativity, clipped at zero
  double Delta;        ///< I1 + I2 + 2*IS3
  double DeltaS;
  double GNI;          ///< LNI1 + LNI2 + 2*EI, conserved under passive U(2)
  double ppt_witness;  ///< -EI; negative iff entangled
  bool entangled;      ///< EI > kTolEnt
  double E_N_raw;      ///< -ln(2 d_minus) before clipping
};

/// Three-mode analysis: local invariants, pairwise entanglement invariants
/// and their conserved total.
struct InvariantReport3 {
  std::array<double, 3> LNI;      ///< per-mode, order 1,2,3
  std::array<double, 3> EI_pair;  ///< pairs (1,2), (1,3), (2,3)
  double GNI3;                    ///< sum LNI_j + 2 * sum EI_pair
  double Delta3;   ///< sum I_j + 2 * sum of cross-block determinants
  double DeltaS3;  ///< sum det S_j + 2 * sum of cross-block determinants
  double K;        ///< 2 * sum det(pair CM) - (1/2) * sum det S_j
};

/// I_j = B_j^2 - |C_j|^2 for any mode of any state. Negative iff the
/// reduced single-mode state is nonclassical.
double local_determinant(const MomentMatrices& state, int mode);

/// tau_j = |C_j| - B_j. Positive iff mode j is nonclassical; degenerate
/// root of I_j via I_j = -tau_j (tau_j + 2 B_j).
double lee_depth(const MomentMatrices& state, int mode);

/// Block determinants of a two-mode state's covariance matrix. IS3 does not
/// depend on which mode is listed first.
SimonInvariants simon_invariants(const MomentMatrices& state);

/// EI = DeltaTildeS/4 - IS4 - 1/16. Positive iff the partial transpose is
/// unphysical (entangled two-mode Gaussian state); <= 0 for separable
/// states, with equality on the separability boundary.
double entanglement_invariant(const MomentMatrices& state);

/// Smallest symplectic eigenvalue of the partially transposed covariance
/// matrix, from the closed form in the block determinants.
/// Radicands below -kRadicandClamp raise NumericalDomainError.
double d_minus(const MomentMatrices& state);

/// Same quantity recovered from EI and IS4 alone; agrees with d_minus to
/// floating error.
double d_minus_via_ei(const MomentMatrices& state);

/// E_N = max(0, -ln 2 d_minus).
double log_negativity(const MomentMatrices& state);

/// Full two-mode report, computed in one pass over the covariance data.
InvariantReport2 gni_two_mode(const MomentMatrices& state);

/// GNI recovered from the global invariants alone:
/// -Delta + DeltaS/2 - 2*IS4 - 1/8. Cross-check for gni_two_mode().GNI.
double gni_via_global_invariants(const MomentMatrices& state);

/// Full three-mode report. LNI from the single-mode data, EI from the
/// pairwise reductions.
InvariantReport3 gni_three_mode(const MomentMatrices& state);

/// GNI3 recovered from three-mode global invariants:
/// -Delta3 + DeltaS3/2 - K - 3/8. Cross-check for gni_three_mode().GNI3.
double gni3_via_global_invariants(const MomentMatrices& state);

}  // namespace nclinv
