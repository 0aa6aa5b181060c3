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

#include "nclinv/scenarios.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nclinv {

namespace {

void require_scenario_params(double pair_photons, double transmissivity) {
  if (!(pair_photons >= 0.0)) {
    throw std::invalid_argument("pair photon number must be nonnegative");
  }
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
}

void require_grid(const std::vector<double>& grid, double lo, double hi,
                  const char* name) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + " grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= lo && grid[i] <= hi)) {
      throw std::invalid_argument(std::string(name) + " grid value " +
                                  std::to_string(grid[i]) + " out of range");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(name) +
                                  " grid must be strictly increasing");
    }
  }
}

}  // namespace

TwinBeamBSResult twin_beam_at_bs(double pair_photons, double transmissivity) {
  require_scenario_params(pair_photons, transmissivity);
  const double bp = pair_photons;
  const double t = transmissivity;
  const double x = bp * bp + bp;
  TwinBeamBSResult r{};
  r.B_p = bp;
  r.T = t;
  r.LNI1 = -bp * bp + 4.0 * t * (1.0 - t) * x;
  r.LNI2 = r.LNI1;
  r.EI = (2.0 * t - 1.0) * (2.0 * t - 1.0) * x;
  r.GNI = r.LNI1 + r.LNI2 + 2.0 * r.EI;
  r.ncl_window_halfwidth = 0.5 / std::sqrt(bp + 1.0);
  return r;
}

TwinBeamBSResult twin_beam_at_bs_simulated(double pair_photons,
                                           double transmissivity) {
  require_scenario_params(pair_photons, transmissivity);
  const MomentMatrices out =
      apply(beam_splitter(2, 0, 1, transmissivity), twin_beam(pair_photons));
  const InvariantReport2 inv = gni_two_mode(out);
  TwinBeamBSResult r{};
  r.B_p = pair_photons;
  r.T = transmissivity;
  r.LNI1 = inv.LNI1;
  r.LNI2 = inv.LNI2;
  r.EI = inv.EI;
  r.GNI = inv.GNI;
  r.ncl_window_halfwidth = 0.5 / std::sqrt(pair_photons + 1.0);
  return r;
}

MomentMatrices three_mode_scheme_state(double pair_photons,
                                       double transmissivity) {
  require_scenario_params(pair_photons, transmissivity);
  const MomentMatrices input = tensor_product(twin_beam(pair_photons), vacuum(1));
  const PassiveUnitary network =
      compose(beam_splitter(3, 1, 2, 0.5),
              beam_splitter(3, 0, 1, transmissivity));
  return apply(network, input);
}

ThreeModeSchemeResult three_mode_scheme(double pair_photons,
                                        double transmissivity) {
  const MomentMatrices out =
      three_mode_scheme_state(pair_photons, transmissivity);
  const InvariantReport3 inv = gni_three_mode(out);
  ThreeModeSchemeResult r{};
  r.B_p = pair_photons;
  r.T = transmissivity;
  r.LNI = inv.LNI;
  r.EI_pair = inv.EI_pair;
  r.GNI3 = inv.GNI3;
  r.asboth_estimate = inv.LNI[1] + inv.LNI[2] + 2.0 * inv.EI_pair[2];
  return r;
}

ThreeModeSchemeResult three_mode_scheme_closed_form(double pair_photons,
                                                    double transmissivity) {
  require_scenario_params(pair_photons, transmissivity);
  const double bp = pair_photons;
  const double t = transmissivity;
  const double x = bp * bp + bp;
  const double lni1 = -bp * bp + 4.0 * t * (1.0 - t) * x;
  const double ei_1j = (0.5 - 2.0 * t * (1.0 - t)) * x;
  ThreeModeSchemeResult r{};
  r.B_p = bp;
  r.T = t;
  r.LNI = {lni1, 0.25 * lni1, 0.25 * lni1};
  r.EI_pair = {ei_1j, ei_1j, 0.25 * lni1};
  r.GNI3 = r.LNI[0] + r.LNI[1] + r.LNI[2] +
           2.0 * (r.EI_pair[0] + r.EI_pair[1] + r.EI_pair[2]);
  r.asboth_estimate = r.LNI[1] + r.LNI[2] + 2.0 * r.EI_pair[2];
  return r;
}

double asboth_estimate(double pair_photons, double transmissivity) {
  const ThreeModeSchemeResult r =
      three_mode_scheme(pair_photons, transmissivity);
  return r.asboth_estimate;
}

Scenario scenario_from_string(std::string_view name) {
  if (name == "twinbeam-bs") {
    return Scenario::kTwinBeamBS;
  }
  if (name == "three-mode") {
    return Scenario::kThreeMode;
  }
  throw ParseError("unknown scenario '" + std::string(name) +
                   "' (expected twinbeam-bs or three-mode)");
}

std::string to_string(Scenario scenario) {
  return scenario == Scenario::kTwinBeamBS ? "twinbeam-bs" : "three-mode";
}

SweepTable sweep(Scenario scenario, const std::vector<double>& bp_grid,
                 const std::vector<double>& t_grid) {
  require_grid(bp_grid, 0.0, std::numeric_limits<double>::infinity(), "B_p");
  require_grid(t_grid, 0.0, 1.0, "T");
  SweepTable table;
  table.scenario = to_string(scenario);
  if (scenario == Scenario::kTwinBeamBS) {
    table.columns = {"B_p", "T",   "LNI1", "LNI2",
                     "EI",  "GNI", "ncl_window_halfwidth"};
    for (const double bp : bp_grid) {
      for (const double t : t_grid) {
        const TwinBeamBSResult r = twin_beam_at_bs(bp, t);
        table.rows.push_back({r.B_p, r.T, r.LNI1, r.LNI2, r.EI, r.GNI,
                              r.ncl_window_halfwidth});
      }
    }
  } else {
    table.columns = {"B_p",  "T",    "LNI1", "LNI2", "LNI3", "EI12",
                     "EI13", "EI23", "GNI3", "asboth_estimate"};
    for (const double bp : bp_grid) {
      for (const double t : t_grid) {
        const ThreeModeSchemeResult r = three_mode_scheme(bp, t);
        table.rows.push_back({r.B_p, r.T, r.LNI[0], r.LNI[1], r.LNI[2],
                              r.EI_pair[0], r.EI_pair[1], r.EI_pair[2],
                              r.GNI3, r.asboth_estimate});
      }
    }
  }
  return table;
}

namespace {

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> grid;
  const int count = static_cast<int>(std::lround((hi - lo) / step));
  grid.reserve(count + 1);
  for (int i = 0; i <= count; ++i) {
    grid.push_back(lo + step * i);
  }
  return grid;
}

}  // namespace

std::vector<double> default_bp_grid() { return linear_grid(0.0, 5.0, 0.25); }

std::vector<double> default_t_grid() { return linear_grid(0.0, 1.0, 0.05); }

}  // namespace nclinv
