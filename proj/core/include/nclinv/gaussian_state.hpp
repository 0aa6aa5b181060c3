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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nclinv/errors.hpp"

namespace nclinv {

using Complex = std::complex<double>;

/// Default tolerance for structural checks (Hermiticity, symmetry).
inline constexpr double kTolStruct = 1e-10;
/// Default slack on the uncertainty-principle eigenvalue bound.
inline constexpr double kTolPhys = 1e-9;
/// Default slack on |nu - 1/2| for the purity test.
inline constexpr double kTolPure = 1e-9;

/**
 * Second moments of an n-mode Gaussian state in the mode-operator picture.
 *
 * Stores the normal correlations N[k][l] = <da_k^dag da_l> (Hermitian,
 * nonnegative real diagonal) and the anomalous correlations
 * M[k][l] = <da_k da_l> (symmetric), where da = a - <a>. First moments are
 * irrelevant for every quantity computed here and are not tracked.
 *
 * Scalar accessors follow the usual shorthand for mode pairs:
 * B_j = N[j][j], C_j = M[j][j], D_jk = M[j][k] and Dbar_jk = -N[j][k].
 */
class MomentMatrices {
 public:
  /// Validates shapes, Hermiticity of N, symmetry of M and B_j >= 0
  /// (tolerance `tol`), then stores the exactly symmetrized matrices.
  MomentMatrices(Eigen::MatrixXcd normal, Eigen::MatrixXcd anomalous,
                 double tol = kTolStruct);

  int modes() const { return static_cast<int>(n_.rows()); }
  const Eigen::MatrixXcd& normal() const { return n_; }
  const Eigen::MatrixXcd& anomalous() const { return m_; }

  double B(int j) const { return n_(j, j).real(); }
  Complex C(int j) const { return m_(j, j); }
  Complex D(int j, int k) const { return m_(j, k); }
  Complex Dbar(int j, int k) const { return -n_(j, k); }

  /// Total mean photon number sum_j B_j (for a zero-mean state).
  double mean_photons() const { return n_.trace().real(); }

 private:
  Eigen::MatrixXcd n_, m_;
};

/**
 * Real 2n x 2n quadrature covariance matrix, interleaved mode ordering
 * (x_1, p_1, x_2, p_2, ...) with x = (a + a^dag)/sqrt(2); vacuum variance
 * is 1/2 per quadrature.
 */
class QuadratureCM {
 public:
  /// Validates even size and symmetry (tolerance `tol`); stores the
  /// symmetrized matrix.
  explicit QuadratureCM(Eigen::MatrixXd sigma, double tol = kTolStruct);

  int modes() const { return static_cast<int>(sigma_.rows()) / 2; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }

  /// 2x2 block coupling modes j and k (j == k gives the single-mode block).
  Eigen::Matrix2d mode_block(int j, int k) const;

 private:
  Eigen::MatrixXd sigma_;
};

/// Symplectic form Omega for n modes, interleaved ordering:
/// direct sum of n copies of [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int n);

/// Exact linear map from mode-operator moments to the quadrature picture.
QuadratureCM to_quadrature(const MomentMatrices& state);

/// Inverse of to_quadrature; round-trips are exact to floating error.
MomentMatrices from_quadrature(const QuadratureCM& cm);

struct PhysicalityVerdict {
  bool physical;
  double min_eig;  ///< smallest eigenvalue of sigma + (i/2) Omega
};

/// Uncertainty-principle check: sigma + (i/2) Omega >= -tol.
PhysicalityVerdict validate_physical(const QuadratureCM& cm,
                                     double tol = kTolPhys);
PhysicalityVerdict validate_physical(const MomentMatrices& state,
                                     double tol = kTolPhys);

/// Symplectic eigenvalues of sigma, ascending. Computed as the magnitudes
/// of the spectrum of i Omega sigma, collapsed from +/- pairs.
/// Throws NumericalDegeneracyError if the magnitudes fail to pair up.
std::vector<double> symplectic_eigenvalues(const QuadratureCM& cm);
std::vector<double> symplectic_eigenvalues(const MomentMatrices& state);

/// True when every symplectic eigenvalue equals 1/2 within tol.
/// Throws UnphysicalStateError first if the state fails validate_physical.
bool purity_check(const MomentMatrices& state, double tol = kTolPure);

/// Marginal state on the listed modes (order preserved). `keep` must be
/// nonempty, in range and free of duplicates.
MomentMatrices reduce(const MomentMatrices& state, const std::vector<int>& keep);

/// 2n x 2n Hermitian normal-ordered covariance matrix in the
/// (da_1, da_1^dag, da_2, da_2^dag, ...) basis: diagonal 2x2 blocks
/// [[-B_j, C_j], [C_j^*, -B_j]], off-diagonal blocks
/// [[Dbar_jk^*, D_jk], [D_jk^*, Dbar_jk]]. Display/interop view only; all
/// computations go through the accessors or the quadrature picture.
Eigen::MatrixXcd normal_covariance_view(const MomentMatrices& state);

// Reference states. Parameters are mean photon numbers unless noted.

MomentMatrices vacuum(int n);
MomentMatrices thermal(double mean_photons);
/// Squeezed thermal mode: thermal input `thermal_photons`, squeezing
/// parameter r >= 0, squeezing phase `phase`.
MomentMatrices squeezed_thermal(double thermal_photons, double r, double phase);
/// Two-mode squeezed vacuum with `pair_photons` mean photons per mode.
MomentMatrices twin_beam(double pair_photons);
/// Twin beam with independent thermal noise added to each mode.
MomentMatrices noisy_twin_beam(double pair_photons, double noise1,
                               double noise2);

MomentMatrices tensor_product(const MomentMatrices& a, const MomentMatrices& b);
MomentMatrices tensor_product(const std::vector<MomentMatrices>& factors);

}  // namespace nclinv
