// Copyright 2026 The lagssm Authors.
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

#ifndef LAGSSM_ERRORS_HPP
#define LAGSSM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagssm {

/// Bad argument: out-of-range index, invalid configuration, shape mismatch.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a map (s > t, z outside (0,1]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integrand or generator returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what + " (at x = " + std::to_string(abscissa) + ")"),
        abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Singular or ill-conditioned linear algebra, or a diverging integration.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lagssm

#endif  // LAGSSM_ERRORS_HPP
