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

#ifndef FOCKFRINGE_SAMPLER_H
#define FOCKFRINGE_SAMPLER_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fockfringe/modes.h"
#include "fockfringe/rng.h"
#include "fockfringe/state.h"

namespace fockfringe {

/// Applies the field operator Psi(x) = u a + w b to the amplitude vector of
/// sum_r c_r |n1 - r, n2 - (k - r)> after k detections.
///
/// `out` receives the k + 2 unnormalized amplitudes of the k + 1 detection state:
///     out[r + 1] += u sqrt(n1 - r) c_r,   out[r] += w sqrt(n2 - (k - r)) c_r.
void ladder_apply(std::span<const complex> in, int n1, int n2, complex u, complex w, std::vector<complex> &out);

/// <a^dag a>, <b^dag b> and the coherence term of a normalized collapse state.
///
/// The next detection lands at x with density proportional to
///     a |u(x)|^2 + b |w(x)|^2 + 2 Re(conj(u(x)) w(x) c),
/// where c = sum_r conj(c_r) c_{r+1} sqrt((n1 - r)(n2 - k + r + 1)).
struct OneBodyCoefficients {
    double a = 0;
    double b = 0;
    complex c;

    /// Number of undetected particles, a + b.
    double total() const { return a + b; }

    /// Unnormalized next-detection density at mode values (u, w).
    double density(complex u, complex w) const {
        return a * std::norm(u) + b * std::norm(w) + 2 * (std::conj(u) * w * c).real();
    }
};

/// Post-measurement state of a two-mode Fock state after k detections,
/// stored over the number-difference basis |n1 - r, n2 - (k - r)>, r = 0..k.
class CollapseState {
   public:
    CollapseState(int n1, int n2);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int detections() const { return k_; }
    int remaining() const { return n1_ + n2_ - k_; }
    std::span<const complex> amplitudes() const { return amps_; }

    /// Sum of log squared norms discarded by renormalization. Diagnostic.
    double log_norm() const { return log_norm_; }

    /// Throws StateError when every particle has been detected.
    OneBodyCoefficients one_body_coeffs() const;

    /// Collapses onto a detection at x, then renormalizes.
    /// Throws StateError if exhausted or if the detection has zero amplitude.
    void apply(double x, const ModePair &pair);

   private:
    int n1_;
    int n2_;
    int k_ = 0;
    std::vector<complex> amps_;
    std::vector<complex> scratch_;
    double log_norm_ = 0;
};

/// Fresh collapse state. Throws ArgumentError for phase states.
CollapseState init_collapse(const StateDescriptor &state);

OneBodyCoefficients one_body_coeffs(const CollapseState &state);

/// Value-returning form of CollapseState::apply.
CollapseState apply_collapse(CollapseState state, double x, const ModePair &pair);

/// Envelope safety factor over the grid maximum of the target density.
constexpr double kEnvelopeFactor = 1.05;

/// Draws the next detection position by rejection sampling against a flat
/// proposal. Throws EnvelopeError if a proposal exceeds the envelope.
double draw_next(const CollapseState &state, const ModePair &pair, Stream &rng);

/// One single-shot measurement.
struct DetectionRecord {
    StateDescriptor state;
    std::string pair;
    int d = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::optional<double> phi;  // realized phase; phase shots only
    std::vector<double> positions;
};

/// Detects d particles of a Fock state one at a time, sampling each from its
/// exact conditional density given the earlier detections.
DetectionRecord run_single_shot(
    const StateDescriptor &state, const ModePair &pair, int d, std::uint64_t seed, std::uint64_t stream);

/// Same, drawing from an already positioned stream.
std::vector<double> sample_fock_positions(const FockState &state, const ModePair &pair, int d, Stream &rng);

/// d independent draws from (1/2)|u + e^{i phi} w|^2. When `phi` is empty a
/// phase is first drawn uniformly on [-pi, pi) from the same stream.
DetectionRecord run_phase_shot(
    int d, std::optional<double> phi, const ModePair &pair, std::uint64_t seed, std::uint64_t stream);

/// Dispatches to run_single_shot or run_phase_shot by state kind.
DetectionRecord run_shot(
    const StateDescriptor &state, const ModePair &pair, int d, std::uint64_t seed, std::uint64_t stream);

}  // namespace fockfringe

#endif  // FOCKFRINGE_SAMPLER_H
