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

#include "nclinv/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

namespace nclinv {

namespace {

double inf_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

void require_nonnegative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be nonnegative");
  }
}

}  // namespace

MomentMatrices::MomentMatrices(Eigen::MatrixXcd normal,
                               Eigen::MatrixXcd anomalous, double tol) {
  const Eigen::Index n = normal.rows();
  if (n == 0 || normal.cols() != n) {
    throw MalformedStateError(
        "normal correlation matrix must be square and nonempty");
  }
  if (anomalous.rows() != n || anomalous.cols() != n) {
    throw MalformedStateError(
        "anomalous correlation matrix must match the normal one in size");
  }
  const double scale = std::max({1.0, inf_norm(normal), inf_norm(anomalous)});
  if (inf_norm(normal - normal.adjoint()) > tol * scale) {
    throw MalformedStateError("normal correlation matrix is not Hermitian");
  }
  if (inf_norm(anomalous - anomalous.transpose()) > tol * scale) {
    throw MalformedStateError("anomalous correlation matrix is not symmetric");
  }
  n_ = 0.5 * (normal + normal.adjoint().eval());
  m_ = 0.5 * (anomalous + anomalous.transpose().eval());
  for (Eigen::Index j = 0; j < n; ++j) {
    const double b = n_(j, j).real();
    if (b < -tol * scale) {
      throw MalformedStateError("negative mean photon number on mode " +
                                std::to_string(j + 1));
    }
    n_(j, j) = std::max(b, 0.0);
  }
}

QuadratureCM::QuadratureCM(Eigen::MatrixXd sigma, double tol) {
  const Eigen::Index r = sigma.rows();
  if (r == 0 || r % 2 != 0 || sigma.cols() != r) {
    throw MalformedStateError(
        "covariance matrix must be square with even, nonzero size");
  }
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw MalformedStateError("covariance matrix is not symmetric");
  }
  sigma_ = 0.5 * (sigma + sigma.transpose().eval());
}

Eigen::Matrix2d QuadratureCM::mode_block(int j, int k) const {
  const int n = modes();
  if (j < 0 || j >= n || k < 0 || k >= n) {
    throw DimensionMismatchError("mode index out of range");
  }
  return sigma_.block<2, 2>(2 * j, 2 * k);
}

Eigen::MatrixXd symplectic_form(int n) {
  if (n <= 0) {
    throw DimensionMismatchError("mode count must be positive");
  }
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    omega(2 * j, 2 * j + 1) = 1.0;
    omega(2 * j + 1, 2 * j) = -1.0;
  }
  return omega;
}

QuadratureCM to_quadrature(const MomentMatrices& state) {
  const int n = state.modes();
  Eigen::MatrixXd sigma(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    const double b = state.B(j);
    const Complex c = state.C(j);
    sigma(2 * j, 2 * j) = b + 0.5 + c.real();
    sigma(2 * j, 2 * j + 1) = c.imag();
    sigma(2 * j + 1, 2 * j) = c.imag();
    sigma(2 * j + 1, 2 * j + 1) = b + 0.5 - c.real();
    for (int k = j + 1; k < n; ++k) {
      const Complex d = state.D(j, k);
      const Complex db = state.Dbar(j, k);
      Eigen::Matrix2d blk;
      blk << (d - db).real(), (d - db).imag(),
             (d + db).imag(), -(d + db).real();
      sigma.block<2, 2>(2 * j, 2 * k) = blk;
      sigma.block<2, 2>(2 * k, 2 * j) = blk.transpose();
    }
  }
  return QuadratureCM(std::move(sigma));
}

MomentMatrices from_quadrature(const QuadratureCM& cm) {
  const int n = cm.modes();
  Eigen::MatrixXcd nn = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Eigen::Matrix2d s = cm.mode_block(j, j);
    nn(j, j) = 0.5 * (s(0, 0) + s(1, 1)) - 0.5;
    mm(j, j) = Complex(0.5 * (s(0, 0) - s(1, 1)), s(0, 1));
    for (int k = j + 1; k < n; ++k) {
      const Eigen::Matrix2d t = cm.mode_block(j, k);
      const Complex d(0.5 * (t(0, 0) - t(1, 1)), 0.5 * (t(0, 1) + t(1, 0)));
      const Complex db(-0.5 * (t(0, 0) + t(1, 1)), 0.5 * (t(1, 0) - t(0, 1)));
      mm(j, k) = d;
      mm(k, j) = d;
      nn(j, k) = -db;
      nn(k, j) = -std::conj(db);
    }
  }
  return MomentMatrices(std::move(nn), std::move(mm));
}

PhysicalityVerdict validate_physical(const QuadratureCM& cm, double tol) {
  const int n = cm.modes();
  Eigen::MatrixXcd h = cm.sigma().cast<Complex>();
  h += Complex(0.0, 0.5) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -tol, min_eig};
}

PhysicalityVerdict validate_physical(const MomentMatrices& state, double tol) {
  return validate_physical(to_quadrature(state), tol);
}

std::vector<double> symplectic_eigenvalues(const QuadratureCM& cm) {
  const int n = cm.modes();
  const Eigen::MatrixXd prod = symplectic_form(n) * cm.sigma();
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(prod, false);
  std::vector<double> mags(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    mags[i] = std::abs(solver.eigenvalues()(i));
  }
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  // The spectrum of Omega*sigma is {+-i nu_j}; fold the magnitudes pairwise.
  const double tol = 1e-8 * std::max(1.0, mags.front());
  std::vector<double> nus(n);
  for (int j = 0; j < n; ++j) {
    const double hi = mags[2 * j];
    const double lo = mags[2 * j + 1];
    if (hi - lo > tol) {
      std::ostringstream msg;
      msg << "symplectic spectrum magnitudes do not pair up: " << hi
          << " vs " << lo;
      throw NumericalDegeneracyError(msg.str());
    }
    nus[j] = 0.5 * (hi + lo);
  }
  std::sort(nus.begin(), nus.end());
  return nus;
}

std::vector<double> symplectic_eigenvalues(const MomentMatrices& state) {
  return symplectic_eigenvalues(to_quadrature(state));
}

bool purity_check(const MomentMatrices& state, double tol) {
  const QuadratureCM cm = to_quadrature(state);
  const PhysicalityVerdict verdict = validate_physical(cm);
  if (!verdict.physical) {
    std::ostringstream msg;
    msg << "state is unphysical: min eigenvalue of sigma + (i/2) Omega is "
        << verdict.min_eig;
    throw UnphysicalStateError(msg.str(), verdict.min_eig);
  }
  for (const double nu : symplectic_eigenvalues(cm)) {
    if (std::abs(nu - 0.5) > tol) {
      return false;
    }
  }
  return true;
}

MomentMatrices reduce(const MomentMatrices& state,
                      const std::vector<int>& keep) {
  const int n = state.modes();
  if (keep.empty()) {
    throw DimensionMismatchError("keep set must not be empty");
  }
  std::vector<bool> seen(n, false);
  for (const int j : keep) {
    if (j < 0 || j >= n) {
      throw DimensionMismatchError("keep index " + std::to_string(j) +
                                   " out of range for " + std::to_string(n) +
                                   " modes");
    }
    if (seen[j]) {
      throw DimensionMismatchError("duplicate keep index " + std::to_string(j));
    }
    seen[j] = true;
  }
  const int m = static_cast<int>(keep.size());
  Eigen::MatrixXcd nn(m, m), mm(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      nn(r, c) = state.normal()(keep[r], keep[c]);
      mm(r, c) = state.anomalous()(keep[r], keep[c]);
    }
  }
  return MomentMatrices(std::move(nn), std::move(mm));
}

Eigen::MatrixXcd normal_covariance_view(const MomentMatrices& state) {
  const int n = state.modes();
  Eigen::MatrixXcd a(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    a(2 * j, 2 * j) = -state.B(j);
    a(2 * j, 2 * j + 1) = state.C(j);
    a(2 * j + 1, 2 * j) = std::conj(state.C(j));
    a(2 * j + 1, 2 * j + 1) = -state.B(j);
    for (int k = j + 1; k < n; ++k) {
      const Complex d = state.D(j, k);
      const Complex db = state.Dbar(j, k);
      a(2 * j, 2 * k) = std::conj(db);
      a(2 * j, 2 * k + 1) = d;
      a(2 * j + 1, 2 * k) = std::conj(d);
      a(2 * j + 1, 2 * k + 1) = db;
      a(2 * k, 2 * j) = db;
      a(2 * k, 2 * j + 1) = d;
      a(2 * k + 1, 2 * j) = std::conj(d);
      a(2 * k + 1, 2 * j + 1) = std::conj(db);
    }
  }
  return a;
}

MomentMatrices vacuum(int n) {
  if (n <= 0) {
    throw std::invalid_argument("mode count must be positive");
  }
  return MomentMatrices(Eigen::MatrixXcd::Zero(n, n),
                        Eigen::MatrixXcd::Zero(n, n));
}

MomentMatrices thermal(double mean_photons) {
  require_nonnegative(mean_photons, "mean photon number");
  Eigen::MatrixXcd nn(1, 1), mm(1, 1);
  nn << mean_photons;
  mm << 0.0;
  return MomentMatrices(std::move(nn), std::move(mm));
}

MomentMatrices squeezed_thermal(double thermal_photons, double r,
                                double phase) {
  require_nonnegative(thermal_photons, "thermal photon number");
  require_nonnegative(r, "squeezing parameter");
  const double ch = std::cosh(2.0 * r);
  const double sh = std::sinh(2.0 * r);
  Eigen::MatrixXcd nn(1, 1), mm(1, 1);
  nn << thermal_photons * ch + 0.5 * (ch - 1.0);
  mm << -std::polar((thermal_photons + 0.5) * sh, phase);
  return MomentMatrices(std::move(nn), std::move(mm));
}

MomentMatrices twin_beam(double pair_photons) {
  require_nonnegative(pair_photons, "pair photon number");
  Eigen::MatrixXcd nn = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Zero(2, 2);
  nn(0, 0) = nn(1, 1) = pair_photons;
  mm(0, 1) = mm(1, 0) = std::sqrt(pair_photons * (pair_photons + 1.0));
  return MomentMatrices(std::move(nn), std::move(mm));
}

MomentMatrices noisy_twin_beam(double pair_photons, double noise1,
                               double noise2) {
  require_nonnegative(pair_photons, "pair photon number");
  require_nonnegative(noise1, "noise photon number");
  require_nonnegative(noise2, "noise photon number");
  Eigen::MatrixXcd nn = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Zero(2, 2);
  nn(0, 0) = pair_photons + noise1;
  nn(1, 1) = pair_photons + noise2;
  mm(0, 1) = mm(1, 0) = std::sqrt(pair_photons * (pair_photons + 1.0));
  return MomentMatrices(std::move(nn), std::move(mm));
}

MomentMatrices tensor_product(const MomentMatrices& a,
                              const MomentMatrices& b) {
  const int na = a.modes();
  const int nb = b.modes();
  Eigen::MatrixXcd nn = Eigen::MatrixXcd::Zero(na + nb, na + nb);
  Eigen::MatrixXcd mm = Eigen::MatrixXcd::Zero(na + nb, na + nb);
  nn.topLeftCorner(na, na) = a.normal();
  nn.bottomRightCorner(nb, nb) = b.normal();
  mm.topLeftCorner(na, na) = a.anomalous();
  mm.bottomRightCorner(nb, nb) = b.anomalous();
  return MomentMatrices(std::move(nn), std::move(mm));
}

MomentMatrices tensor_product(const std::vector<MomentMatrices>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor product needs at least one factor");
  }
  MomentMatrices out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = tensor_product(out, factors[i]);
  }
  return out;
}

}  // namespace nclinv
