// Copyright 2026 The fockfringe Authors
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

#ifndef FOCKFRINGE_ERRORS_H
#define FOCKFRINGE_ERRORS_H

#include <stdexcept>

namespace fockfringe {

/// A position or parameter outside the domain of a function.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent arguments.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Refusal to run an enumeration whose cost grows factorially.
struct ComplexityError : ArgumentError {
    using ArgumentError::ArgumentError;
};

/// Operation invalid for the current state of a collapse vector.
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rejection sampler proposal exceeded its envelope.
struct EnvelopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fockfringe

#endif  // FOCKFRINGE_ERRORS_H
