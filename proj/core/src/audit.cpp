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

#include "nclinv/audit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nclinv/invariants.hpp"
#include "nclinv/passive.hpp"

namespace nclinv {

namespace {

double total_nonclassicality(const MomentMatrices& state) {
  return state.modes() == 2 ? gni_two_mode(state).GNI
                            : gni_three_mode(state).GNI3;
}

}  // namespace

AuditSummary run_audit(const MomentMatrices& state, const AuditConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("audit needs at least one trial");
  }
  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("audit tolerance must be positive");
  }
  const int n = state.modes();
  if (n != 2 && n != 3) {
    throw DimensionMismatchError(
        "conservation audit is defined for 2- or 3-mode states, got " +
        std::to_string(n));
  }

  AuditSummary summary;
  summary.trials = config.trials;
  summary.seed = config.seed;
  summary.tol = config.tol;
  summary.modes = n;
  summary.pure = purity_check(state);
  summary.gni_initial = total_nonclassicality(state);
  summary.conservation_expected = (n == 2) || summary.pure;

  const double scale = std::max(1.0, std::abs(summary.gni_initial));
  std::mt19937_64 rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    const PassiveUnitary u = haar_random(n, rng);
    const double gni = total_nonclassicality(apply(u, state));
    const double dev = std::abs(gni - summary.gni_initial);
    summary.max_abs_deviation = std::max(summary.max_abs_deviation, dev);
  }
  summary.max_rel_deviation = summary.max_abs_deviation / scale;
  summary.pass = !summary.conservation_expected ||
                 summary.max_rel_deviation <= config.tol;
  return summary;
}

}  // namespace nclinv
