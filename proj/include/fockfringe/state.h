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

#ifndef FOCKFRINGE_STATE_H
#define FOCKFRINGE_STATE_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fockfringe {

/// |n1, n2>: n1 particles in mode u, n2 in mode w.
struct FockState {
    int n1 = 0;
    int n2 = 0;

    int total() const { return n1 + n2; }
    bool operator==(const FockState &) const = default;
};

/// d particles in the single mode (u + e^{i phi} w)/sqrt(2).
/// An empty phi means the phase is drawn uniformly per realization.
struct PhaseState {
    int d = 0;
    std::optional<double> phi;

    bool operator==(const PhaseState &) const = default;
};

using StateDescriptor = std::variant<FockState, PhaseState>;

/// Throws ArgumentError if counts are out of range.
void validate(const StateDescriptor &state);

/// "fock:n1,n2", "phase:d" (random phase), "phase:d,random" or "phase:d,<phi>".
StateDescriptor parse_state(std::string_view text);

/// Inverse of parse_state; fixed phases print with 17 significant digits.
std::string format_state(const StateDescriptor &state);

/// Number of particles a single shot may detect at most (for phase states, d).
int max_detections(const StateDescriptor &state);

}  // namespace fockfringe

#endif  // FOCKFRINGE_STATE_H
