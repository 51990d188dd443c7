// Copyright 2026 The Authors.
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

#ifndef CMPL_ERRORS_HPP_
#define CMPL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmpl {

// Bad arguments or malformed input files. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested construction would exceed a dimension or enumeration guard.
// CLI exit code 3.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, double requested)
      : std::runtime_error(what), requested_(requested) {}
  double requested() const { return requested_; }

 private:
  double requested_;
};

// An internal invariant failed. CLI exit code 4.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmpl

#endif  // CMPL_ERRORS_HPP_
