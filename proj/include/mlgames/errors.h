// Copyright 2026 The mlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MLGAMES_ERRORS_H_
#define MLGAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mlgames {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto distinct diagnostics.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Problem size above a configured enumeration/exact-test cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Pivot or redraw budget exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class DegeneratePivotError : public Error {
 public:
  using Error::Error;
};

// Eigensolver failure or non-finite intermediate.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

// A theorem-backed invariant failed at runtime.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mlgames

#endif  // MLGAMES_ERRORS_H_
