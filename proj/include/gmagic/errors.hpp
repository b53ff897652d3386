// Copyright 2026 The gmagic Authors
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

#ifndef GMAGIC_ERRORS_HPP_
#define GMAGIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gmagic {

/// Bad arguments or violated call preconditions.
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// A value failed one of its stated invariants (e.g. purity, orthogonality).
class ContractError : public std::runtime_error {
  public:
    explicit ContractError(const std::string &what) : std::runtime_error(what) {}
};

/// Request exceeds a configured resource cap (e.g. exact SRE system size).
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {}
};

/// A numerical routine failed to converge to its requested accuracy.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

/// Ground-state construction hit an (approximate) zero mode.
class DegeneracyError : public std::runtime_error {
  public:
    DegeneracyError(const std::string &what, double eps_min)
        : std::runtime_error(what), eps_min_(eps_min) {}

    double eps_min() const { return eps_min_; }

  private:
    double eps_min_;
};

}  // namespace gmagic

#endif  // GMAGIC_ERRORS_HPP_
