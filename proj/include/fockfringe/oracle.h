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

// Exact joint detection densities of two-mode states. Everything here is a pure
// function and serves as ground truth for the sampler and analysis code.

#ifndef FOCKFRINGE_ORACLE_H
#define FOCKFRINGE_ORACLE_H

#include <span>
#include <vector>

#include "fockfringe/modes.h"
#include "fockfringe/state.h"

namespace fockfringe {

/// Largest position tuple the subset-enumeration densities accept.
constexpr int kMaxEnumeratedParticles = 10;

/// Largest per-mode occupation accepted by fock_marginal_bruteforce.
constexpr int kMaxBruteforceOccupation = 200;

/// log C(n, k); -inf outside 0 <= k <= n.
double log_binomial(int n, int k);

/// Joint density of detecting all j + k particles of |j, k> at xs:
///
///     C(j + k, j)^{-1} | sum_{S, |S| = j} prod_{i in S} u(x_i) prod_{i not in S} w(x_i) |^2
///
/// with S running over the subsets of positions assigned to mode u.
double asym_density(int j, int k, std::span<const double> xs, const ModePair &pair);

/// Mixing weights expressing the d-particle marginal of |n, n> as a mixture of
/// the |j, d - j> densities:
///
///     weight[j] = C(2n - d, n - d + j) C(d, j) / C(2n, n),   j = 0..d.
struct MixtureWeights {
    int n = 0;
    int d = 0;
    std::vector<double> weights;
};

MixtureWeights mixture_weights(int n, int d);

/// d-particle marginal of |n, n> as the weighted sum of asym_density.
double fock_marginal_density(int n, int d, std::span<const double> xs, const ModePair &pair);

/// Independent route to the same marginal, for any |n1, n2>:
///
///     (N - d)!/N! * || Psi(x_d) ... Psi(x_1) |n1, n2> ||^2
///
/// evaluated by repeated ladder application without renormalization. The
/// amplitude vector is rescaled every step and the scales kept in log space.
double fock_state_density_bruteforce(const FockState &state, std::span<const double> xs, const ModePair &pair);

/// The symmetric case |n, n>, with d = xs.size() checked against `d`.
double fock_marginal_bruteforce(int n, int d, std::span<const double> xs, const ModePair &pair);

/// Phase-averaged product of phase-state densities,
///
///     (1/2pi) int dphi prod_i (1/2)|u(x_i) + e^{i phi} w(x_i)|^2,
///
/// by the trapezoid rule with 2d + 2 nodes, exact for this trigonometric
/// polynomial of degree d in phi.
double approx_density(int d, std::span<const double> xs, const ModePair &pair);

}  // namespace fockfringe

#endif  // FOCKFRINGE_ORACLE_H
