// Copyright 2026 The Portfolio Abstraction Authors.
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

#ifndef PORTFOLIO_ERRORS_H_
#define PORTFOLIO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace portfolio {

// Root of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed optimization model (dimension mismatch, inverted bounds, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

// The simplex engine could not finish (iteration cap, numerical trouble).
class SolverFailure : public Error {
 public:
  using Error::Error;
};

// A configured budget (branch-and-bound nodes, enumeration size) ran out.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Vectors or matrices whose shapes do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid parameter value passed to a generator or algorithm.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Malformed game, portfolio or configuration file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A result table lacks a column an operation needs.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace portfolio

#endif  // PORTFOLIO_ERRORS_H_
