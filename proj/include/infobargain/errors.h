// Copyright 2026 The infobargain Authors. All rights reserved.
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

#ifndef INFOBARGAIN_ERRORS_H_
#define INFOBARGAIN_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infobargain {

// Root of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between a task and a scheme, rule, or index.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (for example, no agreement
// improves on the disagreement point for both players).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. Carries the offending index when there is one.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what,
                           std::optional<std::size_t> index = std::nullopt)
      : Error(what), index_(index) {}
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

// Numerical breakdown inside the simplex solver. The trace holds the last
// pivots so the failure can be diagnosed.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<std::string> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

// The constraint system has no solution. `certificate()` holds a Farkas
// multiplier y (one entry per constraint, in input order) with
// y^T A <= 0 columnwise, y_i <= 0 on <= rows, y_i >= 0 on >= rows, and
// y^T b > 0.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::vector<double> certificate)
      : Error(what), certificate_(std::move(certificate)) {}
  const std::vector<double>& certificate() const { return certificate_; }

 private:
  std::vector<double> certificate_;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

// A closed form is singular at the requested parameters.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// An agent broke the procedure contract (bad dimensions, unparseable reply).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure talking to a chat backend.
class TransportError : public Error {
 public:
  using Error::Error;
};

// An agent could not produce a decision at all (retries exhausted).
class AgentFailure : public Error {
 public:
  using Error::Error;
};

// Correlation of a constant vector.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace infobargain

#endif  // INFOBARGAIN_ERRORS_H_
