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

#include "fockfringe/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "fockfringe/errors.h"
#include "fockfringe/sampler.h"

namespace fockfringe {

namespace {

/// log(a!/b!) for a >= b >= 0. Short gaps are summed directly, which avoids
/// the cancellation between two large lgamma values.
double log_factorial_ratio(int a, int b) {
    constexpr int kDirectSumLimit = 256;
    if (a - b <= kDirectSumLimit) {
        double s = 0;
        for (int i = b + 1; i <= a; i++) {
            s += std::log(static_cast<double>(i));
        }
        return s;
    }
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0);
}

void require_positions(std::span<const double> xs, std::size_t expected, const char *what) {
    if (xs.size() != expected) {
        throw ArgumentError(
            std::string(what) + ": expected " + std::to_string(expected) + " positions, got " +
            std::to_string(xs.size()));
    }
}

void require_enumerable(std::size_t count, const char *what) {
    if (count > static_cast<std::size_t>(kMaxEnumeratedParticles)) {
        throw ComplexityError(
            std::string(what) + ": " + std::to_string(count) + " positions exceeds the enumeration limit of " +
            std::to_string(kMaxEnumeratedParticles));
    }
}

struct ModeValues {
    std::vector<complex> u;
    std::vector<complex> w;
};

ModeValues evaluate_all(std::span<const double> xs, const ModePair &pair) {
    ModeValues out;
    out.u.reserve(xs.size());
    out.w.reserve(xs.size());
    for (double x : xs) {
        auto [u, w] = pair.evaluate(x);
        out.u.push_back(u);
        out.w.push_back(w);
    }
    return out;
}

double asym_density_from_values(int j, const ModeValues &v) {
    int total = static_cast<int>(v.u.size());
    complex amplitude = 0;
    for (unsigned mask = 0; mask < (1u << total); mask++) {
        if (std::popcount(mask) != j) {
            continue;
        }
        complex term = 1;
        for (int i = 0; i < total; i++) {
            term *= (mask >> i & 1u) ? v.u[i] : v.w[i];
        }
        amplitude += term;
    }
    return std::norm(amplitude) * std::exp(-log_binomial(total, j));
}

}  // namespace

double log_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return -INFINITY;
    }
    int small = std::min(k, n - k);
    return log_factorial_ratio(n, n - small) - log_factorial_ratio(small, 0);
}

double asym_density(int j, int k, std::span<const double> xs, const ModePair &pair) {
    if (j < 0 || k < 0) {
        throw ArgumentError("asym_density: occupations must be non-negative");
    }
    require_positions(xs, static_cast<std::size_t>(j + k), "asym_density");
    require_enumerable(xs.size(), "asym_density");
    return asym_density_from_values(j, evaluate_all(xs, pair));
}

MixtureWeights mixture_weights(int n, int d) {
    if (n < 1 || d < 1 || d > 2 * n) {
        throw ArgumentError(
            "mixture_weights: need 1 <= d <= 2n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    MixtureWeights out{n, d, std::vector<double>(d + 1, 0.0)};
    // C(2n-d, n-d+j) C(d, j) / C(2n, n) = C(d, j) (2n-d)!/(2n)! n!/(n-j)! n!/(n-d+j)!
    double log_common = -log_factorial_ratio(2 * n, 2 * n - d);
    for (int j = std::max(0, d - n); j <= std::min(d, n); j++) {
        double lw = log_common + log_binomial(d, j) + log_factorial_ratio(n, n - j) +
                    log_factorial_ratio(n, n - d + j);
        out.weights[j] = std::exp(lw);
    }
    return out;
}

double fock_marginal_density(int n, int d, std::span<const double> xs, const ModePair &pair) {
    require_positions(xs, static_cast<std::size_t>(std::max(d, 0)), "fock_marginal_density");
    require_enumerable(xs.size(), "fock_marginal_density");
    if (d == 0) {
        return 1.0;
    }
    auto mix = mixture_weights(n, d);
    auto values = evaluate_all(xs, pair);
    double total = 0;
    for (int j = 0; j <= d; j++) {
        if (mix.weights[j] > 0) {
            total += mix.weights[j] * asym_density_from_values(j, values);
        }
    }
    return total;
}

double fock_state_density_bruteforce(const FockState &state, std::span<const double> xs, const ModePair &pair) {
    validate(StateDescriptor{state});
    if (state.n1 > kMaxBruteforceOccupation || state.n2 > kMaxBruteforceOccupation) {
        throw ComplexityError(
            "fock_marginal_bruteforce: occupations above " + std::to_string(kMaxBruteforceOccupation));
    }
    int d = static_cast<int>(xs.size());
    if (d > state.total()) {
        throw ArgumentError("fock_marginal_bruteforce: more positions than particles");
    }
    std::vector<complex> amps{complex{1.0, 0.0}};
    std::vector<complex> next;
    double log_scale = 0;
    for (double x : xs) {
        auto [u, w] = pair.evaluate(x);
        ladder_apply(amps, state.n1, state.n2, u, w, next);
        double biggest = 0;
        for (const auto &c : next) {
            biggest = std::max(biggest, std::abs(c));
        }
        if (biggest == 0) {
            return 0.0;
        }
        for (auto &c : next) {
            c /= biggest;
        }
        log_scale += std::log(biggest);
        std::swap(amps, next);
    }
    double norm2 = 0;
    for (const auto &c : amps) {
        norm2 += std::norm(c);
    }
    int total = state.total();
    return std::exp(2 * log_scale + std::log(norm2) - log_factorial_ratio(total, total - d));
}

double fock_marginal_bruteforce(int n, int d, std::span<const double> xs, const ModePair &pair) {
    require_positions(xs, static_cast<std::size_t>(std::max(d, 0)), "fock_marginal_bruteforce");
    if (d > 2 * n) {
        throw ArgumentError("fock_marginal_bruteforce: need d <= 2n");
    }
    return fock_state_density_bruteforce(FockState{n, n}, xs, pair);
}

double approx_density(int d, std::span<const double> xs, const ModePair &pair) {
    require_positions(xs, static_cast<std::size_t>(std::max(d, 0)), "approx_density");
    auto v = evaluate_all(xs, pair);
    int nodes = 2 * d + 2;
    double total = 0;
    for (int m = 0; m < nodes; m++) {
        double phi = -std::numbers::pi + 2 * std::numbers::pi * m / nodes;
        complex phase = std::polar(1.0, phi);
        double prod = 1;
        for (int i = 0; i < d; i++) {
            prod *= 0.5 * std::norm(v.u[i] + phase * v.w[i]);
        }
        total += prod;
    }
    return total / nodes;
}

}  // namespace fockfringe
