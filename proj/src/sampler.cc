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

#include "fockfringe/sampler.h"

#include <cassert>
#include <cmath>
#include <numbers>

#include "fockfringe/errors.h"

namespace fockfringe {

void ladder_apply(std::span<const complex> in, int n1, int n2, complex u, complex w, std::vector<complex> &out) {
    int k = static_cast<int>(in.size()) - 1;
    out.assign(in.size() + 1, complex{});
    for (int r = 0; r <= k; r++) {
        complex c = in[r];
        int left_a = n1 - r;
        int left_b = n2 - (k - r);
        if (left_a > 0) {
            out[r + 1] += u * std::sqrt(static_cast<double>(left_a)) * c;
        }
        if (left_b > 0) {
            out[r] += w * std::sqrt(static_cast<double>(left_b)) * c;
        }
    }
}

CollapseState::CollapseState(int n1, int n2) : n1_(n1), n2_(n2), amps_{complex{1.0, 0.0}} {
    if (n1 < 0 || n2 < 0 || n1 + n2 < 1) {
        throw ArgumentError("collapse state needs n1, n2 >= 0 and n1 + n2 >= 1");
    }
}

OneBodyCoefficients CollapseState::one_body_coeffs() const {
    if (remaining() <= 0) {
        throw StateError("collapse state is exhausted: all particles detected");
    }
    OneBodyCoefficients out;
    for (int r = 0; r <= k_; r++) {
        double p = std::norm(amps_[r]);
        out.a += (n1_ - r) * p;
        out.b += (n2_ - (k_ - r)) * p;
        if (r < k_) {
            double left_a = n1_ - r;
            double left_b = n2_ - k_ + r + 1;
            if (left_a > 0 && left_b > 0) {
                out.c += std::conj(amps_[r]) * amps_[r + 1] * std::sqrt(left_a * left_b);
            }
        }
    }
    assert(std::norm(out.c) <= out.a * out.b + 1e-12 * (1 + out.a * out.b));
    return out;
}

void CollapseState::apply(double x, const ModePair &pair) {
    if (remaining() <= 0) {
        throw StateError("collapse state is exhausted: all particles detected");
    }
    auto [u, w] = pair.evaluate(x);
    ladder_apply(amps_, n1_, n2_, u, w, scratch_);
    double norm2 = 0;
    for (const auto &c : scratch_) {
        norm2 += std::norm(c);
    }
    if (!(norm2 > 0)) {
        throw StateError("detection at x=" + std::to_string(x) + " has zero amplitude");
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &c : scratch_) {
        c *= scale;
    }
    std::swap(amps_, scratch_);
    log_norm_ += std::log(norm2);
    k_++;
}

CollapseState init_collapse(const StateDescriptor &state) {
    const auto *f = std::get_if<FockState>(&state);
    if (f == nullptr) {
        throw ArgumentError("init_collapse needs a fock state; use run_phase_shot for phase states");
    }
    return CollapseState(f->n1, f->n2);
}

OneBodyCoefficients one_body_coeffs(const CollapseState &state) {
    return state.one_body_coeffs();
}

CollapseState apply_collapse(CollapseState state, double x, const ModePair &pair) {
    state.apply(x, pair);
    return state;
}

namespace {

/// Rejection sampling of a density on [0, 1] given as a quadratic form in (u, w).
double draw_quadratic_form(const OneBodyCoefficients &q, const ModePair &pair, Stream &rng) {
    double envelope = kEnvelopeFactor * pair.grid().max_quadratic_form(q.a, q.b, q.c);
    if (!(envelope > 0)) {
        throw EnvelopeError("target density vanishes on the whole envelope grid");
    }
    while (true) {
        double x = rng.uniform();
        double y = rng.uniform() * envelope;
        auto [u, w] = pair.evaluate_unchecked(x);
        double p = q.density(u, w);
        if (p > envelope) {
            throw EnvelopeError(
                "density " + std::to_string(p) + " at x=" + std::to_string(x) + " exceeds envelope " +
                std::to_string(envelope) + "; the envelope grid is too coarse for this mode pair");
        }
        if (y < p) {
            return x;
        }
    }
}

}  // namespace

double draw_next(const CollapseState &state, const ModePair &pair, Stream &rng) {
    auto q = state.one_body_coeffs();
    // Normalizing by the remaining particle count turns the quadratic form into a density.
    double inv = 1 / q.total();
    q.a *= inv;
    q.b *= inv;
    q.c *= inv;
    return draw_quadratic_form(q, pair, rng);
}

std::vector<double> sample_fock_positions(const FockState &state, const ModePair &pair, int d, Stream &rng) {
    if (d < 0 || d > state.total()) {
        throw ArgumentError(
            "cannot detect " + std::to_string(d) + " particles from a state of " +
            std::to_string(state.total()));
    }
    CollapseState collapse(state.n1, state.n2);
    std::vector<double> positions;
    positions.reserve(d);
    for (int i = 0; i < d; i++) {
        double x = draw_next(collapse, pair, rng);
        collapse.apply(x, pair);
        positions.push_back(x);
    }
    return positions;
}

DetectionRecord run_single_shot(
    const StateDescriptor &state, const ModePair &pair, int d, std::uint64_t seed, std::uint64_t stream) {
    const auto *f = std::get_if<FockState>(&state);
    if (f == nullptr) {
        throw ArgumentError("run_single_shot needs a fock state; use run_phase_shot for phase states");
    }
    validate(state);
    Stream rng(seed, stream);
    DetectionRecord rec{state, pair.tag(), d, seed, stream, std::nullopt, {}};
    rec.positions = sample_fock_positions(*f, pair, d, rng);
    return rec;
}

DetectionRecord run_phase_shot(
    int d, std::optional<double> phi, const ModePair &pair, std::uint64_t seed, std::uint64_t stream) {
    if (d < 1) {
        throw ArgumentError("phase shot needs d >= 1");
    }
    Stream rng(seed, stream);
    double realized = phi ? *phi : -std::numbers::pi + 2 * std::numbers::pi * rng.uniform();
    OneBodyCoefficients q{0.5, 0.5, 0.5 * std::polar(1.0, realized)};
    DetectionRecord rec{PhaseState{d, phi}, pair.tag(), d, seed, stream, realized, {}};
    rec.positions.reserve(d);
    for (int i = 0; i < d; i++) {
        rec.positions.push_back(draw_quadratic_form(q, pair, rng));
    }
    return rec;
}

DetectionRecord run_shot(
    const StateDescriptor &state, const ModePair &pair, int d, std::uint64_t seed, std::uint64_t stream) {
    if (const auto *p = std::get_if<PhaseState>(&state)) {
        if (d != p->d) {
            throw ArgumentError(
                "phase state holds " + std::to_string(p->d) + " particles but d=" + std::to_string(d));
        }
        return run_phase_shot(p->d, p->phi, pair, seed, stream);
    }
    return run_single_shot(state, pair, d, seed, stream);
}

}  // namespace fockfringe
