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

#include <stdexcept>
#include <string>

namespace nclinv {

/** Input matrices violate a structural requirement (shape, Hermiticity,
 *  symmetry, negative diagonal). */
class MalformedStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** State fails the uncertainty-principle check. Carries the offending
 *  minimum eigenvalue of sigma + (i/2) Omega. */
class UnphysicalStateError : public std::domain_error {
 public:
  UnphysicalStateError(const std::string& what, double min_eig)
      : std::domain_error(what), min_eig_(min_eig) {}
  double min_eig() const { return min_eig_; }

 private:
  double min_eig_;
};

/** Operation applied to a state or operator of the wrong mode count, or
 *  with mode indices out of range. */
class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** A quantity that must be nonnegative came out below the clamping window,
 *  or a non-finite value reached an output formatter. */
class NumericalDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Symplectic spectrum magnitudes could not be collapsed into +/- pairs
 *  within tolerance. */
class NumericalDegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed JSON, constructor expression, or grid specification. */
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** An output file could not be written (or atomically replaced). */
class FileWriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nclinv
