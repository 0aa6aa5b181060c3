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

#include <string>
#include <string_view>
#include <vector>

#include "nclinv/audit.hpp"
#include "nclinv/invariants.hpp"
#include "nclinv/passive.hpp"
#include "nclinv/scenarios.hpp"

namespace nclinv {

// JSON / CSV / text boundary. All parse failures raise ParseError; all
// numeric output renders IEEE doubles with 12 significant digits, except
// state files, which keep full round-trip precision. Non-finite values in
// any output raise NumericalDomainError.

/// Parses a state from JSON. Two accepted forms:
///   { "modes": n, "N": [[{"re": _, "im": _}, ...], ...], "M": [[...]] }
/// with complex entries given either as {re, im} objects or bare (real)
/// numbers, or the two-mode convenience form
///   { "B1": _, "B2": _, "C1": {re, im}, "C2": _, "D12": _, "Dbar12": _ }
/// where C1, C2, D12, Dbar12 are optional and default to zero.
MomentMatrices state_from_json(std::string_view text);

/// Canonical N/M serialization of a state (the first form above).
std::string state_to_json(const MomentMatrices& state);

/// Parses a constructor expression such as "twin_beam(1)",
/// "vacuum(3)" or "squeezed_thermal(0.2,0.8,1.1)*thermal(0.5)".
/// '*' composes factors into a tensor product.
MomentMatrices state_from_spec(std::string_view spec);

/// Parses a network description: an ordered JSON list like
///   [{"bs": {"modes": [1,2], "T": 0.7, "phase": 0}},
///    {"ps": {"mode": 2, "theta": 1.57}}]
/// Mode indices in the file are 1-based; the returned elements are 0-based.
/// "phase" is optional and defaults to 0.
std::vector<NetworkElement> network_from_json(std::string_view text);

/// Flat JSON object with the fields in declared order.
std::string report_to_json(const InvariantReport2& report);
std::string report_to_json(const InvariantReport3& report);
std::string summary_to_json(const AuditSummary& summary);

/// Aligned name/value text for --pretty output.
std::string report_to_table(const InvariantReport2& report);
std::string report_to_table(const InvariantReport3& report);
std::string summary_to_table(const AuditSummary& summary);

/// Header "scenario,B_p,T,..." then one line per row. With positive_only,
/// negative scenario fields render as empty cells (grid coordinates are
/// never blanked).
std::string sweep_to_csv(const SweepTable& table, bool positive_only = false);

/// Inclusive grid "a:b:step", e.g. "0:5:0.25"; a == b yields one point.
std::vector<double> parse_grid(std::string_view text);

/// Whole-file read; unreadable files raise ParseError.
std::string read_file(const std::string& path);

/// Writes via a temporary file and atomic rename so failures never leave a
/// partial file at `path`. Raises FileWriteError.
void write_file_atomic(const std::string& path, std::string_view content);

/// 12-significant-digit rendering used for all analysis output.
std::string format_double(double value);

}  // namespace nclinv
