// Copyright 2026 The graphrank Authors
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

#ifndef GRAPHRANK_ERRORS_H
#define GRAPHRANK_ERRORS_H

#include <stdexcept>
#include <string>

namespace graphrank {

/// Malformed or out-of-contract input (bad vertex, self-loop, even ring, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a documented size ceiling (qubit count, dense matrix size).
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace graphrank

#endif
