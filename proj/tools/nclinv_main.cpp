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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nclinv/audit.hpp"
#include "nclinv/errors.hpp"
#include "nclinv/io.hpp"
#include "nclinv/passive.hpp"
#include "nclinv/scenarios.hpp"

namespace {

using namespace nclinv;

// Exit codes: 0 ok, 1 unexpected failure, 2 parse failure, 3 unphysical
// state, 4 dimension mismatch, 5 unwritable output.

MomentMatrices load_state(const std::string& arg) {
  // A '(' marks a constructor expression; anything else is a file path.
  if (arg.find('(') != std::string::npos) {
    return state_from_spec(arg);
  }
  return state_from_json(read_file(arg));
}

MomentMatrices load_and_prepare(const std::string& state_arg,
                                const std::string& network_path) {
  MomentMatrices state = load_state(state_arg);
  if (!network_path.empty()) {
    const std::vector<NetworkElement> elements =
        network_from_json(read_file(network_path));
    state = apply(build_network(elements, state.modes()), state);
  }
  const PhysicalityVerdict verdict = validate_physical(state);
  if (!verdict.physical) {
    throw UnphysicalStateError(
        "state is unphysical: min_eig = " + format_double(verdict.min_eig) +
            " (below -" + format_double(kTolPhys) + ")",
        verdict.min_eig);
  }
  return state;
}

int run_invariants(const std::string& state_arg,
                   const std::string& network_path, bool pretty) {
  const MomentMatrices state = load_and_prepare(state_arg, network_path);
  std::string text;
  if (state.modes() == 2) {
    const InvariantReport2 report = gni_two_mode(state);
    text = pretty ? report_to_table(report) : report_to_json(report) + "\n";
  } else if (state.modes() == 3) {
    const InvariantReport3 report = gni_three_mode(state);
    text = pretty ? report_to_table(report) : report_to_json(report) + "\n";
  } else {
    throw DimensionMismatchError(
        "invariant reports cover 2- or 3-mode states, got " +
        std::to_string(state.modes()) +
        " (analyze a single mode as its product with vacuum(1))");
  }
  std::cout << text;
  return 0;
}

int run_audit(const std::string& state_arg, const std::string& network_path,
              int trials, std::uint64_t seed, double tol, bool pretty) {
  if (trials < 1) {
    throw ParseError("--trials must be at least 1");
  }
  if (!(tol > 0.0)) {
    throw ParseError("--tol must be positive");
  }
  const MomentMatrices state = load_and_prepare(state_arg, network_path);
  const AuditSummary summary = run_audit(state, AuditConfig{trials, seed, tol});
  std::cout << (pretty ? summary_to_table(summary)
                       : summary_to_json(summary) + "\n");
  return 0;
}

int run_sweep(const std::string& scenario_name, const std::string& bp_grid,
              const std::string& t_grid, bool positive_only,
              const std::string& out_path) {
  const Scenario scenario = scenario_from_string(scenario_name);
  SweepTable table;
  try {
    table = sweep(scenario, parse_grid(bp_grid), parse_grid(t_grid));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  write_file_atomic(out_path, sweep_to_csv(table, positive_only));
  std::cout << table.rows.size() << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonclassicality invariants of Gaussian optical states"};
  app.set_version_flag("--version", "nclinv 0.1.0");
  app.require_subcommand(1);

  std::string inv_state, inv_network;
  bool inv_pretty = false;
  CLI::App* inv = app.add_subcommand(
      "invariants", "Print the invariant report of a two- or three-mode state");
  inv->add_option("--state", inv_state,
                  "State JSON file or constructor expression, e.g. "
                  "'twin_beam(1)' or 'squeezed_thermal(0.2,0.8,1.1)*thermal(0.5)'")
      ->required();
  inv->add_option("--network", inv_network,
                  "Network JSON file applied to the state first");
  inv->add_flag("--pretty", inv_pretty, "Aligned table instead of JSON");

  std::string audit_state, audit_network;
  int audit_trials = 1000;
  std::uint64_t audit_seed = 0;
  double audit_tol = 1e-9;
  bool audit_pretty = false;
  CLI::App* audit = app.add_subcommand(
      "audit",
      "Randomized conservation audit: apply Haar-random passive unitaries "
      "and track the total nonclassicality");
  audit->add_option("--state", audit_state,
                    "State JSON file or constructor expression")
      ->required();
  audit->add_option("--network", audit_network,
                    "Network JSON file applied to the state first");
  audit->add_option("--trials", audit_trials, "Number of random unitaries");
  audit->add_option("--seed", audit_seed, "PRNG seed");
  audit->add_option("--tol", audit_tol, "Relative deviation bound");
  audit->add_flag("--pretty", audit_pretty, "Aligned table instead of JSON");

  std::string sweep_scenario, sweep_out;
  std::string sweep_bp_grid = "0:5:0.25";
  std::string sweep_t_grid = "0:1:0.05";
  bool sweep_positive_only = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a scenario over a (B_p, T) grid and write CSV");
  sweep->add_option("--scenario", sweep_scenario,
                    "twinbeam-bs or three-mode")
      ->required();
  sweep->add_option("--bp-grid", sweep_bp_grid, "B_p grid as a:b:step");
  sweep->add_option("--t-grid", sweep_t_grid, "T grid as a:b:step");
  sweep->add_flag("--positive-only", sweep_positive_only,
                  "Blank negative cells, as in the positive-value surfaces");
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message; the code is ours
    return 2;
  }

  try {
    if (inv->parsed()) {
      return run_invariants(inv_state, inv_network, inv_pretty);
    }
    if (audit->parsed()) {
      return run_audit(audit_state, audit_network, audit_trials, audit_seed,
                       audit_tol, audit_pretty);
    }
    return run_sweep(sweep_scenario, sweep_bp_grid, sweep_t_grid,
                     sweep_positive_only, sweep_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnphysicalStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const FileWriteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
