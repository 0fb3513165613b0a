// Copyright 2026 The seqmps Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace seqmps {

/// Thrown when a caller passes arguments that violate an operation's
/// preconditions (bad shapes, out-of-range indices, non-unitary gates, ...).
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// Thrown when a computation cannot meet its numerical tolerance
/// (eigensolver non-convergence, unexpected imaginary residue, ...).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace seqmps
