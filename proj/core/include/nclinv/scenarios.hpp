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
#include <string>
#include <string_view>
#include <vector>

#include "nclinv/invariants.hpp"
#include "nclinv/passive.hpp"

namespace nclinv {

// Two reference experiments. Each exists in a closed-form and a simulated
// (constructor -> passive network -> invariants) variant; the pair agree to
// floating error and cross-validate each other.

/// Twin beam of B_p photons per mode on a beam splitter of transmissivity T.
struct TwinBeamBSResult {
  double B_p;
  double T;
  double LNI1;
  double LNI2;
  double EI;
  double GNI;
  /// Halfwidth in T around 1/2 of the window where the output modes stay
  /// locally nonclassical: 1 / (2 sqrt(B_p + 1)).
  double ncl_window_halfwidth;
};

/// Closed forms: LNI_j = -B_p^2 + 4T(1-T)(B_p^2 + B_p),
/// EI = (2T-1)^2 (B_p^2 + B_p), GNI = 2 B_p.
TwinBeamBSResult twin_beam_at_bs(double pair_photons, double transmissivity);

/// Same quantities from the explicit pipeline:
/// twin_beam -> beam_splitter(T) -> gni_two_mode.
TwinBeamBSResult twin_beam_at_bs_simulated(double pair_photons,
                                           double transmissivity);

/// Twin beam plus a vacuum ancilla: BS(T) couples modes 1 and 2, then a
/// balanced beam splitter couples modes 2 and 3.
struct ThreeModeSchemeResult {
  double B_p;
  double T;
  std::array<double, 3> LNI;      ///< per mode
  std::array<double, 3> EI_pair;  ///< pairs (1,2), (1,3), (2,3)
  double GNI3;
  /// Two-mode estimate read off modes 2 and 3 alone:
  /// LNI2 + LNI3 + 2*EI_pair(23) = 4*EI_pair(23).
  double asboth_estimate;
};

/// Runs the scheme as an explicit pipeline and reports gni_three_mode of
/// the output state.
ThreeModeSchemeResult three_mode_scheme(double pair_photons,
                                        double transmissivity);

/// Closed forms the pipeline is validated against:
/// EI_pair(12) = EI_pair(13) = [1/2 - 2T(1-T)](B_p^2 + B_p),
/// LNI1 = -B_p^2 + 4T(1-T)(B_p^2 + B_p),
/// LNI2 = LNI3 = EI_pair(23) = LNI1 / 4, GNI3 = 2 B_p.
ThreeModeSchemeResult three_mode_scheme_closed_form(double pair_photons,
                                                    double transmissivity);

/// Output state of the scheme, for audits or custom analysis.
MomentMatrices three_mode_scheme_state(double pair_photons,
                                       double transmissivity);

/// The modes-2,3 estimate alone; equals LNI1 of the scheme for every T.
double asboth_estimate(double pair_photons, double transmissivity);

enum class Scenario { kTwinBeamBS, kThreeMode };

/// Accepts "twinbeam-bs" or "three-mode"; anything else raises ParseError.
Scenario scenario_from_string(std::string_view name);
std::string to_string(Scenario scenario);

/// Sweep results as a column-labelled table, rows ordered by B_p (outer)
/// then T (inner).
struct SweepTable {
  std::string scenario;
  std::vector<std::string> columns;  ///< "B_p", "T", then scenario fields
  std::vector<std::vector<double>> rows;
};

/// Evaluates the scenario on the grid product. Grids must be nonempty and
/// within parameter ranges.
SweepTable sweep(Scenario scenario, const std::vector<double>& bp_grid,
                 const std::vector<double>& t_grid);

/// B_p in {0, 0.25, ..., 5}.
std::vector<double> default_bp_grid();
/// T in {0, 0.05, ..., 1}.
std::vector<double> default_t_grid();

}  // namespace nclinv
