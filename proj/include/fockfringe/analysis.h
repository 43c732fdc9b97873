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

#ifndef FOCKFRINGE_ANALYSIS_H
#define FOCKFRINGE_ANALYSIS_H

#include <cstdint>
#include <span>
#include <vector>

#include "fockfringe/modes.h"
#include "fockfringe/sampler.h"
#include "fockfringe/state.h"
#include "fockfringe/stats.h"

namespace fockfringe {

/// Counts in D equal bins over [0, 1]. Bins are [i/D, (i+1)/D) except the
/// last, which also takes x = 1.
struct Histogram {
    int bins = 0;
    std::vector<long long> counts;
    long long total = 0;

    double edge(int i) const { return static_cast<double>(i) / bins; }
    double center(int i) const { return (i + 0.5) / bins; }
};

Histogram build_histogram(std::span<const double> positions, int bins);
Histogram build_histogram(const DetectionRecord &record, int bins);

/// Result of fitting the ideal fringe profile to a histogram.
struct FringeFit {
    double chi2 = 0;
    double phi = 0;  // minimizing phase in [-pi, pi); 0 when the minimizer is degenerate
};

/// chi2 = inf_phi sum_i (n_i - (d / 2D) |u(x_i) + e^{i phi} w(x_i)|^2)^2 with x_i
/// the bin centers and d the histogram total.
///
/// Plane-wave histograms with D >= 3 use chi2_noise_closed_form; everything
/// else goes through chi2_noise_scan.
FringeFit chi2_noise(const Histogram &h, const ModePair &pair);

/// Plane-wave pair only, D >= 3. Over uniform bin centers the objective is a
/// constant minus 2(d/D) |S|cos(phi - arg S), where S = sum_i n_i e^{2 pi i x_i},
/// so phi* = arg S.
FringeFit chi2_noise_closed_form(const Histogram &h);

/// 64-point phase grid followed by golden-section refinement to 1e-10.
FringeFit chi2_noise_scan(const Histogram &h, const ModePair &pair);

/// Fringe visibility 2|S|/d for the plane-wave pair.
/// Throws ArgumentError for other pairs or an empty histogram.
double visibility(const Histogram &h, const ModePair &pair);

/// Ensemble runs distribute realizations over `workers` threads. Realization r
/// always draws from stream first_stream + r, so results do not depend on the
/// worker count.
struct EnsembleOptions {
    int workers = 1;
    std::uint64_t first_stream = 0;
};

struct Realization {
    std::uint64_t stream = 0;
    FringeFit fit;
};

struct NoiseReport {
    StateDescriptor state;
    std::string pair;
    int d = 0;
    int bins = 0;
    int realizations = 0;
    std::uint64_t seed = 0;
    std::vector<Realization> per_shot;
    Summary chi2;  // chi2.mean is the noise level
};

/// Mean fringe noise over R independent single shots of `state`.
NoiseReport mean_noise(
    const StateDescriptor &state,
    const ModePair &pair,
    int d,
    int bins,
    int realizations,
    std::uint64_t seed,
    const EnsembleOptions &options = {});

/// Noise of |d/2, d/2> against the random-phase state |d>_phi, on disjoint
/// stream ranges [0, R) and [R, 2R).
struct NoiseComparison {
    NoiseReport fock;
    NoiseReport phase;
    double z = 0;  // (fock - phase) / combined standard error
};
NoiseComparison noise_comparison(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers = 1);

/// Monte Carlo check of
///     sum_j 2^{-d} C(d, j) noise(|j, d - j>) = noise(|d>_phi).
/// Left side: j ~ Binomial(d, 1/2) per realization, then all d particles of
/// |j, d - j> detected. Right side: random-phase shots on streams [R, 2R).
struct IdentityReport {
    int d = 0;
    int bins = 0;
    int realizations = 0;
    std::uint64_t seed = 0;
    Summary lhs;
    Summary rhs;
    double z = 0;
};
IdentityReport noise_identity_check(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers = 1);

/// Noise of every asymmetric state |j, d - j>, j = 0..d, measured exhaustively.
/// Row j uses streams [j R, (j + 1) R).
struct ProfileRow {
    int j = 0;
    Summary chi2;
};
struct AsymProfile {
    int d = 0;
    int bins = 0;
    int realizations = 0;
    std::uint64_t seed = 0;
    std::vector<ProfileRow> rows;
};
AsymProfile asym_noise_profile(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers = 1);

/// Bin-wise mean over R single-shot histograms.
struct AverageDensity {
    int bins = 0;
    int realizations = 0;
    std::vector<Summary> per_bin;
};
AverageDensity average_density(
    const StateDescriptor &state,
    const ModePair &pair,
    int d,
    int bins,
    int realizations,
    std::uint64_t seed,
    int workers = 1);

}  // namespace fockfringe

#endif  // FOCKFRINGE_ANALYSIS_H
