// SPDX-License-Identifier: Apache-2.0
//
// maopt: movable-antenna array position optimization for multiuser uplink
// Copyright (C) 2026 maopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace maopt {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed scenario or sweep-spec input (bad file, bad field, bad angle string).
class ParseError : public Error {
  public:
    using Error::Error;
};

// Span too small for the requested antenna count / spacing.
class GeometryError : public Error {
  public:
    using Error::Error;
};

// Aggregated validation report (scenario invariants, optimizer options).
// Carries every violated invariant.
class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> issues)
        : Error(join(issues)), issues_(std::move(issues))
    {
    }
    const std::vector<std::string> &issues() const { return issues_; }

  private:
    static std::string join(const std::vector<std::string> &v)
    {
        std::string s = "validation failed:";
        for (const auto &i : v)
            s += "\n  - " + i;
        return s;
    }
    std::vector<std::string> issues_;
};

// Channel matrix lost full column rank (duplicate or near-duplicate user sines).
class RankDeficiencyError : public Error {
  public:
    RankDeficiencyError(const std::string &msg, double condition_number)
        : Error(msg), condition_number_(condition_number)
    {
    }
    double condition_number() const { return condition_number_; }

  private:
    double condition_number_;
};

// Gain matrix spectrum collapsed below the relative floor; objective undefined.
class SingularGainError : public Error {
  public:
    explicit SingularGainError(const std::string &msg, int iteration = -1)
        : Error(msg), iteration_(iteration)
    {
    }
    // Outer-loop iteration where the failure occurred; -1 outside the optimizer.
    int iteration() const { return iteration_; }

  private:
    int iteration_;
};

// Similarity-transformed eigenproblem failed its Hermitian check.
class DecompositionError : public Error {
  public:
    using Error::Error;
};

// Repeated eigenvalues encountered with the abort policy selected.
class DegenerateSpectrumError : public Error {
  public:
    using Error::Error;
};

} // namespace maopt
