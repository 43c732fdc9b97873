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

#include "fockfringe/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fockfringe/errors.h"
#include "fockfringe/parallel.h"

namespace fockfringe {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kScanPoints = 64;
constexpr double kGoldenTolerance = 1e-10;

double wrap_phase(double phi) {
    double w = std::remainder(phi, kTwoPi);
    return w >= std::numbers::pi ? w - kTwoPi : w;
}

void require_bins(int bins) {
    if (bins < 2) {
        throw ArgumentError("histograms need at least 2 bins, got " + std::to_string(bins));
    }
}

void require_realizations(int realizations, int minimum) {
    if (realizations < minimum) {
        throw ArgumentError(
            "need at least " + std::to_string(minimum) + " realizations, got " + std::to_string(realizations));
    }
}

/// S = sum_i n_i e^{2 pi i x_i} over bin centers.
complex fourier_sum(const Histogram &h) {
    complex s = 0;
    for (int i = 0; i < h.bins; i++) {
        s += static_cast<double>(h.counts[i]) * std::polar(1.0, kTwoPi * h.center(i));
    }
    return s;
}

struct ScanObjective {
    const Histogram &h;
    std::vector<complex> u;
    std::vector<complex> w;
    double amplitude;

    ScanObjective(const Histogram &hist, const ModePair &pair)
        : h(hist), amplitude(static_cast<double>(hist.total) / (2.0 * hist.bins)) {
        for (int i = 0; i < h.bins; i++) {
            auto [ui, wi] = pair.evaluate(h.center(i));
            u.push_back(ui);
            w.push_back(wi);
        }
    }

    double operator()(double phi) const {
        complex phase = std::polar(1.0, phi);
        double total = 0;
        for (int i = 0; i < h.bins; i++) {
            double r = static_cast<double>(h.counts[i]) - amplitude * std::norm(u[i] + phase * w[i]);
            total += r * r;
        }
        return total;
    }
};

double fit_chi2(const Histogram &h, const ModePair &pair) {
    return chi2_noise(h, pair).chi2;
}

}  // namespace

Histogram build_histogram(std::span<const double> positions, int bins) {
    require_bins(bins);
    Histogram h{bins, std::vector<long long>(bins, 0), 0};
    for (double x : positions) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw DomainError("detection position outside [0, 1]: " + std::to_string(x));
        }
        int i = std::min(static_cast<int>(x * bins), bins - 1);
        h.counts[i]++;
        h.total++;
    }
    return h;
}

Histogram build_histogram(const DetectionRecord &record, int bins) {
    return build_histogram(record.positions, bins);
}

FringeFit chi2_noise_closed_form(const Histogram &h) {
    if (h.bins < 3) {
        throw ArgumentError("closed-form fringe fit needs D >= 3");
    }
    complex s = fourier_sum(h);
    double d = static_cast<double>(h.total);
    FringeFit fit;
    // Flat data: every phase is a minimizer.
    fit.phi = std::abs(s) <= 1e-12 * std::max(d, 1.0) ? 0.0 : wrap_phase(std::arg(s));
    double level = d / h.bins;
    for (int i = 0; i < h.bins; i++) {
        double r = static_cast<double>(h.counts[i]) - level * (1 + std::cos(kTwoPi * h.center(i) - fit.phi));
        fit.chi2 += r * r;
    }
    return fit;
}

FringeFit chi2_noise_scan(const Histogram &h, const ModePair &pair) {
    ScanObjective f(h, pair);
    double step = kTwoPi / kScanPoints;
    double best_phi = -std::numbers::pi;
    double best = INFINITY;
    double worst = -INFINITY;
    for (int m = 0; m < kScanPoints; m++) {
        double phi = -std::numbers::pi + step * m;
        double v = f(phi);
        if (v < best) {
            best = v;
            best_phi = phi;
        }
        worst = std::max(worst, v);
    }
    if (worst - best <= 1e-12 * (1 + best)) {
        return {f(0.0), 0.0};
    }
    // Golden-section search on the bracket around the best grid point.
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = best_phi - step;
    double b = best_phi + step;
    double c = b - inv_phi * (b - a);
    double e = a + inv_phi * (b - a);
    double fc = f(c);
    double fe = f(e);
    while (b - a > kGoldenTolerance) {
        if (fc < fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = f(e);
        }
    }
    double phi = 0.5 * (a + b);
    double v = f(phi);
    if (best < v) {
        return {best, wrap_phase(best_phi)};
    }
    return {v, wrap_phase(phi)};
}

FringeFit chi2_noise(const Histogram &h, const ModePair &pair) {
    if (pair.kind() == ModePair::Kind::kPlaneWave && h.bins >= 3) {
        return chi2_noise_closed_form(h);
    }
    return chi2_noise_scan(h, pair);
}

double visibility(const Histogram &h, const ModePair &pair) {
    if (pair.kind() != ModePair::Kind::kPlaneWave) {
        throw ArgumentError("visibility is defined for the plane-wave pair only");
    }
    if (h.total == 0) {
        throw ArgumentError("visibility of an empty histogram");
    }
    return 2 * std::abs(fourier_sum(h)) / static_cast<double>(h.total);
}

NoiseReport mean_noise(
    const StateDescriptor &state,
    const ModePair &pair,
    int d,
    int bins,
    int realizations,
    std::uint64_t seed,
    const EnsembleOptions &options) {
    validate(state);
    require_bins(bins);
    require_realizations(realizations, 2);
    if (std::holds_alternative<PhaseState>(state) && std::get<PhaseState>(state).d != d) {
        throw ArgumentError("phase state particle count must equal d");
    }
    if (d < 1 || d > max_detections(state)) {
        throw ArgumentError(
            "d=" + std::to_string(d) + " is outside 1.." + std::to_string(max_detections(state)) + " for " +
            format_state(state));
    }
    NoiseReport report{state, pair.tag(), d, bins, realizations, seed, {}, {}};
    report.per_shot = parallel_map<Realization>(
        static_cast<std::size_t>(realizations), options.workers, [&](std::size_t r) {
            std::uint64_t stream = options.first_stream + r;
            auto rec = run_shot(state, pair, d, seed, stream);
            return Realization{stream, chi2_noise(build_histogram(rec, bins), pair)};
        });
    std::vector<double> values;
    values.reserve(report.per_shot.size());
    for (const auto &r : report.per_shot) {
        values.push_back(r.fit.chi2);
    }
    report.chi2 = summarize(values);
    return report;
}

NoiseComparison noise_comparison(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers) {
    if (d < 2 || d % 2 != 0) {
        throw ArgumentError("noise comparison needs an even d >= 2");
    }
    NoiseComparison out;
    out.fock = mean_noise(FockState{d / 2, d / 2}, pair, d, bins, realizations, seed, {workers, 0});
    out.phase = mean_noise(
        PhaseState{d, std::nullopt}, pair, d, bins, realizations, seed,
        {workers, static_cast<std::uint64_t>(realizations)});
    out.z = z_score(out.fock.chi2, out.phase.chi2);
    return out;
}

IdentityReport noise_identity_check(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers) {
    if (d < 4 || d % 2 != 0) {
        throw ArgumentError("identity check needs an even d >= 4");
    }
    require_bins(bins);
    require_realizations(realizations, 2);
    auto count = static_cast<std::size_t>(realizations);
    auto lhs = parallel_map<double>(count, workers, [&](std::size_t r) {
        Stream rng(seed, r);
        int j = sample_binomial_half(d, rng);
        auto positions = sample_fock_positions(FockState{j, d - j}, pair, d, rng);
        return fit_chi2(build_histogram(positions, bins), pair);
    });
    auto rhs = parallel_map<double>(count, workers, [&](std::size_t r) {
        auto rec = run_phase_shot(d, std::nullopt, pair, seed, count + r);
        return fit_chi2(build_histogram(rec, bins), pair);
    });
    IdentityReport out{d, bins, realizations, seed, summarize(lhs), summarize(rhs), 0};
    out.z = z_score(out.lhs, out.rhs);
    return out;
}

AsymProfile asym_noise_profile(
    int d, int bins, int realizations, const ModePair &pair, std::uint64_t seed, int workers) {
    if (d < 2 || d % 2 != 0) {
        throw ArgumentError("asymmetric profile needs an even d >= 2");
    }
    require_bins(bins);
    require_realizations(realizations, 2);
    auto per_row = static_cast<std::size_t>(realizations);
    auto values = parallel_map<double>(per_row * (d + 1), workers, [&](std::size_t i) {
        int j = static_cast<int>(i / per_row);
        auto rec = run_single_shot(FockState{j, d - j}, pair, d, seed, i);
        return fit_chi2(build_histogram(rec, bins), pair);
    });
    AsymProfile out{d, bins, realizations, seed, {}};
    for (int j = 0; j <= d; j++) {
        std::span<const double> row(values.data() + j * per_row, per_row);
        out.rows.push_back({j, summarize(row)});
    }
    return out;
}

AverageDensity average_density(
    const StateDescriptor &state,
    const ModePair &pair,
    int d,
    int bins,
    int realizations,
    std::uint64_t seed,
    int workers) {
    validate(state);
    require_bins(bins);
    require_realizations(realizations, 10);
    auto hists = parallel_map<Histogram>(static_cast<std::size_t>(realizations), workers, [&](std::size_t r) {
        return build_histogram(run_shot(state, pair, d, seed, r), bins);
    });
    AverageDensity out{bins, realizations, {}};
    std::vector<double> column(hists.size());
    for (int i = 0; i < bins; i++) {
        for (std::size_t r = 0; r < hists.size(); r++) {
            column[r] = static_cast<double>(hists[r].counts[i]);
        }
        out.per_bin.push_back(summarize(column));
    }
    return out;
}

}  // namespace fockfringe
