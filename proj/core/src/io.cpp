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

#include "nclinv/io.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace nclinv {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view text, const char* what) {
  const std::string t{trim(text)};
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " '" + t + "'");
  }
  if (pos != t.size() || !std::isfinite(value)) {
    throw ParseError(std::string("invalid ") + what + " '" + t + "'");
  }
  return value;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

int as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

Complex as_complex(const json& j, const char* what) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  if (j.is_object()) {
    if (!j.contains("re")) {
      throw ParseError(std::string(what) + " entry needs a \"re\" field");
    }
    const double re = as_number(j.at("re"), what);
    const double im = j.contains("im") ? as_number(j.at("im"), what) : 0.0;
    return {re, im};
  }
  throw ParseError(std::string(what) +
                   " entries must be numbers or {re, im} objects");
}

Eigen::MatrixXcd as_matrix(const json& j, int n, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError(std::string("\"") + name + "\" must be an array of " +
                     std::to_string(n) + " rows");
  }
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(std::string("\"") + name + "\" row " +
                       std::to_string(r + 1) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      m(r, c) = as_complex(row.at(c), name);
    }
  }
  return m;
}

// Flat single-line JSON assembly with contract-pinned number rendering.
class JsonFields {
 public:
  void add(const char* name, double value) { raw(name, format_double(value)); }
  void add(const char* name, bool value) { raw(name, value ? "true" : "false"); }
  void add(const char* name, int value) { raw(name, std::to_string(value)); }
  void add(const char* name, std::uint64_t value) {
    raw(name, std::to_string(value));
  }
  void add(const char* name, const std::array<double, 3>& values) {
    raw(name, "[" + format_double(values[0]) + "," + format_double(values[1]) +
                  "," + format_double(values[2]) + "]");
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  void raw(const char* name, const std::string& value) {
    if (!body_.empty()) {
      body_ += ",";
    }
    body_ += std::string("\"") + name + "\":" + value;
  }
  std::string body_;
};

class TableFields {
 public:
  void add(const char* name, double value) { raw(name, format_double(value)); }
  void add(const char* name, bool value) { raw(name, value ? "true" : "false"); }
  void add(const char* name, int value) { raw(name, std::to_string(value)); }
  void add(const char* name, std::uint64_t value) {
    raw(name, std::to_string(value));
  }
  void add(const char* name, const std::array<double, 3>& values) {
    raw(name, format_double(values[0]) + "  " + format_double(values[1]) +
                  "  " + format_double(values[2]));
  }
  std::string str() const { return out_.str(); }

 private:
  void raw(const char* name, const std::string& value) {
    out_ << std::left << std::setw(22) << name << value << "\n";
  }
  std::ostringstream out_;
};

MomentMatrices parse_constructor_term(std::string_view term) {
  const std::string t{trim(term)};
  const std::size_t open = t.find('(');
  if (open == std::string::npos || t.empty() || t.back() != ')') {
    throw ParseError("constructor term '" + t + "' must look like name(args)");
  }
  const std::string name{trim(std::string_view(t).substr(0, open))};
  const std::string_view args_text =
      std::string_view(t).substr(open + 1, t.size() - open - 2);
  std::vector<double> args;
  if (!trim(args_text).empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = args_text.find(',', pos);
      const std::string_view piece = args_text.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      args.push_back(parse_number(piece, "constructor argument"));
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
  }
  const auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError(name + " takes " + std::to_string(count) +
                       " argument(s), got " + std::to_string(args.size()));
    }
  };
  try {
    if (name == "vacuum") {
      if (args.empty()) {
        return vacuum(1);
      }
      expect(1);
      const int n = static_cast<int>(std::lround(args[0]));
      if (n < 1 || std::abs(args[0] - n) > 1e-9) {
        throw ParseError("vacuum needs a positive integer mode count");
      }
      return vacuum(n);
    }
    if (name == "thermal") {
      expect(1);
      return thermal(args[0]);
    }
    if (name == "squeezed_thermal") {
      expect(3);
      return squeezed_thermal(args[0], args[1], args[2]);
    }
    if (name == "twin_beam") {
      expect(1);
      return twin_beam(args[0]);
    }
    if (name == "noisy_twin_beam") {
      expect(3);
      return noisy_twin_beam(args[0], args[1], args[2]);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("in '" + t + "': " + e.what());
  }
  throw ParseError("unknown constructor '" + name + "'");
}

}  // namespace

MomentMatrices state_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) {
    throw ParseError("state file must contain a JSON object");
  }
  if (j.contains("modes") || j.contains("N") || j.contains("M")) {
    if (!j.contains("modes")) {
      throw ParseError("state needs a \"modes\" field");
    }
    const int n = as_integer(j.at("modes"), "\"modes\"");
    if (n < 1) {
      throw ParseError("\"modes\" must be at least 1");
    }
    if (!j.contains("N") || !j.contains("M")) {
      throw ParseError("state needs \"N\" and \"M\" matrices");
    }
    return MomentMatrices(as_matrix(j.at("N"), n, "N"),
                          as_matrix(j.at("M"), n, "M"));
  }
  if (j.contains("B1") || j.contains("B2")) {
    if (!j.contains("B1") || !j.contains("B2")) {
      throw ParseError("two-mode form needs both \"B1\" and \"B2\"");
    }
    const double b1 = as_number(j.at("B1"), "B1");
    const double b2 = as_number(j.at("B2"), "B2");
    const auto opt = [&](const char* key) {
      return j.contains(key) ? as_complex(j.at(key), key) : Complex{};
    };
    const Complex c1 = opt("C1");
    const Complex c2 = opt("C2");
    const Complex d12 = opt("D12");
    const Complex dbar12 = opt("Dbar12");
    Eigen::MatrixXcd nn(2, 2), mm(2, 2);
    nn << b1, -dbar12, -std::conj(dbar12), b2;
    mm << c1, d12, d12, c2;
    return MomentMatrices(std::move(nn), std::move(mm));
  }
  throw ParseError(
      "unrecognized state schema: expected modes/N/M or B1/B2/C1/C2/D12/Dbar12");
}

std::string state_to_json(const MomentMatrices& state) {
  const auto matrix_json = [](const Eigen::MatrixXcd& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        nlohmann::ordered_json entry;
        entry["re"] = m(r, c).real();
        entry["im"] = m(r, c).imag();
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  nlohmann::ordered_json j;
  j["modes"] = state.modes();
  j["N"] = matrix_json(state.normal());
  j["M"] = matrix_json(state.anomalous());
  return j.dump();
}

MomentMatrices state_from_spec(std::string_view spec) {
  std::vector<MomentMatrices> factors;
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = spec.find('*', pos);
    factors.push_back(parse_constructor_term(spec.substr(
        pos, star == std::string_view::npos ? std::string_view::npos
                                            : star - pos)));
    if (star == std::string_view::npos) {
      break;
    }
    pos = star + 1;
  }
  return tensor_product(factors);
}

std::vector<NetworkElement> network_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) {
    throw ParseError("network file must contain a JSON array of elements");
  }
  std::vector<NetworkElement> out;
  out.reserve(j.size());
  for (const json& element : j) {
    if (!element.is_object() || element.size() != 1) {
      throw ParseError(
          "each network element must be a single-key object (\"bs\" or \"ps\")");
    }
    const auto it = element.begin();
    const std::string kind = it.key();
    const json& body = it.value();
    if (!body.is_object()) {
      throw ParseError("\"" + kind + "\" element body must be an object");
    }
    if (kind == "bs") {
      if (!body.contains("modes") || !body.contains("T")) {
        throw ParseError("\"bs\" needs \"modes\" and \"T\"");
      }
      const json& modes = body.at("modes");
      if (!modes.is_array() || modes.size() != 2) {
        throw ParseError("\"modes\" must be a pair of mode indices");
      }
      const int a = as_integer(modes.at(0), "mode index");
      const int b = as_integer(modes.at(1), "mode index");
      if (a < 1 || b < 1) {
        throw ParseError("mode indices in network files are 1-based");
      }
      if (a == b) {
        throw ParseError("beam splitter needs two distinct modes");
      }
      const double t = as_number(body.at("T"), "T");
      if (!(t >= 0.0 && t <= 1.0)) {
        throw ParseError("T must lie in [0, 1]");
      }
      const double phase =
          body.contains("phase") ? as_number(body.at("phase"), "phase") : 0.0;
      out.push_back(BeamSplitterElement{a - 1, b - 1, t, phase});
    } else if (kind == "ps") {
      if (!body.contains("mode") || !body.contains("theta")) {
        throw ParseError("\"ps\" needs \"mode\" and \"theta\"");
      }
      const int m = as_integer(body.at("mode"), "mode index");
      if (m < 1) {
        throw ParseError("mode indices in network files are 1-based");
      }
      const double theta = as_number(body.at("theta"), "theta");
      out.push_back(PhaseShifterElement{m - 1, theta});
    } else {
      throw ParseError("unknown network element '" + kind + "'");
    }
  }
  return out;
}

namespace {

template <typename Fields>
Fields fill(const InvariantReport2& r) {
  Fields f;
  f.add("I1", r.I1);
  f.add("I2", r.I2);
  f.add("tau1", r.tau1);
  f.add("tau2", r.tau2);
  f.add("LNI1", r.LNI1);
  f.add("LNI2", r.LNI2);
  f.add("IS1", r.IS1);
  f.add("IS2", r.IS2);
  f.add("IS3", r.IS3);
  f.add("IS4", r.IS4);
  f.add("DeltaTildeS", r.DeltaTildeS);
  f.add("EI", r.EI);
  f.add("d_minus", r.d_minus);
  f.add("E_N", r.E_N);
  f.add("Delta", r.Delta);
  f.add("DeltaS", r.DeltaS);
  f.add("GNI", r.GNI);
  f.add("ppt_witness", r.ppt_witness);
  f.add("entangled", r.entangled);
  f.add("E_N_raw", r.E_N_raw);
  return f;
}

template <typename Fields>
Fields fill(const InvariantReport3& r) {
  Fields f;
  f.add("LNI", r.LNI);
  f.add("EI_pair", r.EI_pair);
  f.add("GNI3", r.GNI3);
  f.add("Delta3", r.Delta3);
  f.add("DeltaS3", r.DeltaS3);
  f.add("K", r.K);
  return f;
}

template <typename Fields>
Fields fill(const AuditSummary& s) {
  Fields f;
  f.add("trials", s.trials);
  f.add("seed", s.seed);
  f.add("tol", s.tol);
  f.add("modes", s.modes);
  f.add("pure", s.pure);
  f.add("gni_initial", s.gni_initial);
  f.add("max_abs_deviation", s.max_abs_deviation);
  f.add("max_rel_deviation", s.max_rel_deviation);
  f.add("conservation_expected", s.conservation_expected);
  f.add("pass", s.pass);
  return f;
}

}  // namespace

std::string report_to_json(const InvariantReport2& report) {
  return fill<JsonFields>(report).str();
}

std::string report_to_json(const InvariantReport3& report) {
  return fill<JsonFields>(report).str();
}

std::string summary_to_json(const AuditSummary& summary) {
  return fill<JsonFields>(summary).str();
}

std::string report_to_table(const InvariantReport2& report) {
  return fill<TableFields>(report).str();
}

std::string report_to_table(const InvariantReport3& report) {
  return fill<TableFields>(report).str();
}

std::string summary_to_table(const AuditSummary& summary) {
  return fill<TableFields>(summary).str();
}

std::string sweep_to_csv(const SweepTable& table, bool positive_only) {
  std::string out = "scenario";
  for (const std::string& column : table.columns) {
    out += "," + column;
  }
  out += "\n";
  for (const std::vector<double>& row : table.rows) {
    out += table.scenario;
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += ",";
      if (positive_only && i >= 2 && row[i] < 0.0) {
        continue;  // blank cell mirrors the positive-only surface rendering
      }
      out += format_double(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw ParseError("grid must have the form a:b:step, got '" +
                     std::string(text) + "'");
  }
  const double lo = parse_number(text.substr(0, first), "grid start");
  const double hi =
      parse_number(text.substr(first + 1, second - first - 1), "grid end");
  const double step = parse_number(text.substr(second + 1), "grid step");
  if (!(step > 0.0)) {
    throw ParseError("grid step must be positive");
  }
  if (hi < lo) {
    throw ParseError("grid end must not be below its start");
  }
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-6));
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (int i = 0; i <= count; ++i) {
    grid.push_back(lo + step * i);
  }
  return grid;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ParseError("failed reading '" + path + "'");
  }
  return buffer.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target{path};
  fs::path tmp{target};
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw FileWriteError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw FileWriteError("failed while writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw FileWriteError("cannot replace '" + path + "': " + ec.message());
  }
}

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    throw NumericalDomainError("non-finite value in numeric output");
  }
  if (value == 0.0) {
    return "0";  // fold negative zero
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace nclinv
