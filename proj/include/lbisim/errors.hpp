// Copyright 2026 The lbisim Authors
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
#include <vector>

namespace lbisim {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed device file or value. `where` holds "line:col" or a field path.
class ParseError : public Error {
   public:
    ParseError(const std::string &where, const std::string &what)
        : Error(where + ": " + what), where_(where) {}
    const std::string &where() const { return where_; }

   private:
    std::string where_;
};

/// A structurally valid device that breaks one or more invariants.
class ValidationError : public Error {
   public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string> &violations() const { return violations_; }

   private:
    std::vector<std::string> violations_;
};

/// A label lookup that does not resolve.
class LabelError : public Error {
   public:
    using Error::Error;
};

/// A perturbative denominator within tolerance of zero.
class SingularityError : public Error {
   public:
    using Error::Error;
};

/// Coupling too strong for the dispersive expansion.
class ValidityError : public Error {
   public:
    using Error::Error;
};

/// A measurement that admits no real parameter solution.
class InconsistentMeasurement : public Error {
   public:
    using Error::Error;
};

/// Dressed state without a bare label above the overlap threshold.
class LabelingError : public Error {
   public:
    using Error::Error;
};

/// Avoided-crossing search hit the edge of its window.
class WindowError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

class IntegrationError : public Error {
   public:
    using Error::Error;
};

class CalibrationError : public Error {
   public:
    using Error::Error;
};

inline ValidationError::ValidationError(std::vector<std::string> violations)
    : Error([&] {
          std::string msg = "device validation failed:";
          for (const auto &v : violations) msg += "\n  " + v;
          return msg;
      }()),
      violations_(std::move(violations)) {}

}  // namespace lbisim
