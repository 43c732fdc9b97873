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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "fockfringe/errors.h"
#include "test_util.h"

using namespace fockfringe;

namespace {

constexpr double kPi = std::numbers::pi;

Histogram from_counts(std::vector<long long> counts) {
    Histogram h;
    h.bins = static_cast<int>(counts.size());
    for (auto c : counts) {
        h.total += c;
    }
    h.counts = std::move(counts);
    return h;
}

// Direct evaluation of the fit objective at a given phase.
double objective(const Histogram &h, const ModePair &pair, double phi) {
    double scale = static_cast<double>(h.total) / (2.0 * h.bins);
    double total = 0;
    for (int i = 0; i < h.bins; i++) {
        auto [u, w] = pair.evaluate(h.center(i));
        double r = h.counts[i] - scale * std::norm(u + std::polar(1.0, phi) * w);
        total += r * r;
    }
    return total;
}

double wrapped_distance(double a, double b) {
    double d = std::remainder(a - b, 2 * kPi);
    return std::abs(d);
}

}  // namespace

TEST(analysis, histogram_examples) {
    std::vector<double> xs{0.05, 0.15, 0.95};
    auto h = build_histogram(xs, 10);
    EXPECT_EQ(h.counts, (std::vector<long long>{1, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(h.total, 3);

    std::vector<double> one{1.0};
    EXPECT_EQ(build_histogram(one, 10).counts[9], 1);

    std::vector<double> none;
    auto empty = build_histogram(none, 4);
    EXPECT_EQ(empty.counts, (std::vector<long long>(4, 0)));
    EXPECT_EQ(empty.total, 0);

    // Bins are half open: x = 0.1 opens bin 1.
    std::vector<double> edge{0.1, 0.0};
    auto he = build_histogram(edge, 10);
    EXPECT_EQ(he.counts[0], 1);
    EXPECT_EQ(he.counts[1], 1);

    EXPECT_THROW(build_histogram(none, 1), ArgumentError);
    std::vector<double> bad{1.5};
    EXPECT_THROW(build_histogram(bad, 4), DomainError);
}

TEST(analysis, histogram_edges_uniform) {
    Histogram h = from_counts(std::vector<long long>(7, 0));
    for (int i = 0; i <= 7; i++) {
        EXPECT_NEAR(h.edge(i), i / 7.0, 1e-15);
    }
}

TEST(analysis, histogram_of_record_sums_to_d) {
    auto pair = ModePair::plane_wave();
    auto rec = run_single_shot(FockState{20, 20}, pair, 33, 5, 0);
    auto h = build_histogram(rec, 6);
    long long sum = 0;
    for (auto c : h.counts) {
        sum += c;
    }
    EXPECT_EQ(sum, 33);
    EXPECT_EQ(h.total, 33);
}

TEST(analysis, perfect_fringe_has_zero_noise) {
    // D = 4, d = 8, phi0 = pi/4: (d/D)(1 + cos(2 pi x_i - pi/4)) = (4, 2, 0, 2).
    auto pair = ModePair::plane_wave();
    auto h = from_counts({4, 2, 0, 2});
    auto fit = chi2_noise(h, pair);
    EXPECT_NEAR(fit.chi2, 0, 1e-12);
    EXPECT_NEAR(fit.phi, kPi / 4, 1e-12);
    auto scan = chi2_noise_scan(h, pair);
    EXPECT_NEAR(scan.chi2, 0, 1e-12);
    EXPECT_NEAR(scan.phi, kPi / 4, 1e-8);
}

TEST(analysis, uniform_counts) {
    auto pair = ModePair::plane_wave();
    auto h = from_counts(std::vector<long long>(10, 10));
    auto fit = chi2_noise(h, pair);
    EXPECT_NEAR(fit.chi2, 500, 1e-9);
    EXPECT_EQ(fit.phi, 0.0);
    auto scan = chi2_noise_scan(h, pair);
    EXPECT_NEAR(scan.chi2, 500, 1e-9);
    EXPECT_EQ(scan.phi, 0.0);
    EXPECT_NEAR(visibility(h, pair), 0, 1e-12);
}

TEST(analysis, closed_form_matches_scan_on_random_histograms) {
    auto pair = ModePair::plane_wave();
    std::mt19937_64 gen(11);
    for (int t = 0; t < 100; t++) {
        int bins = 3 + static_cast<int>(gen() % 30);
        std::vector<long long> counts(bins);
        for (auto &c : counts) {
            c = static_cast<long long>(gen() % 40);
        }
        auto h = from_counts(counts);
        if (h.total == 0) {
            continue;
        }
        auto a = chi2_noise_closed_form(h);
        auto b = chi2_noise_scan(h, pair);
        EXPECT_NEAR(a.chi2, b.chi2, 1e-8 * std::max(1.0, a.chi2)) << t;
        EXPECT_GE(a.chi2, 0);
        EXPECT_NEAR(a.chi2, objective(h, pair, a.phi), 1e-8 * std::max(1.0, a.chi2));
        EXPECT_LT(wrapped_distance(a.phi, b.phi), 1e-4) << t;
    }
}

TEST(analysis, fit_is_the_infimum) {
    std::mt19937_64 gen(3);
    for (const auto &pair : fockfringe::testing::all_test_pairs()) {
        for (int t = 0; t < 20; t++) {
            std::vector<long long> counts(8);
            for (auto &c : counts) {
                c = static_cast<long long>(gen() % 25);
            }
            auto h = from_counts(counts);
            auto fit = chi2_noise(h, pair);
            EXPECT_GE(fit.phi, -kPi);
            EXPECT_LT(fit.phi, kPi);
            for (int k = 0; k < 360; k++) {
                double phi = -kPi + 2 * kPi * k / 360;
                EXPECT_LE(fit.chi2, objective(h, pair, phi) + 1e-9) << pair.tag();
            }
        }
    }
}

TEST(analysis, parity_symmetry) {
    auto pair = ModePair::plane_wave();
    std::mt19937_64 gen(5);
    for (int t = 0; t < 50; t++) {
        int bins = 2 + static_cast<int>(gen() % 12);
        std::vector<long long> counts(bins);
        for (auto &c : counts) {
            c = static_cast<long long>(gen() % 30);
        }
        std::vector<long long> mirrored(counts.rbegin(), counts.rend());
        auto a = chi2_noise(from_counts(counts), pair);
        auto b = chi2_noise(from_counts(mirrored), pair);
        EXPECT_NEAR(a.chi2, b.chi2, 1e-8 * std::max(1.0, a.chi2));
        // With two bins phi and pi - phi tie, so only the value is compared.
        if (bins >= 3 && a.chi2 > 0 && std::abs(a.phi) > 1e-6 && std::abs(std::abs(a.phi) - kPi) > 1e-6) {
            EXPECT_LT(wrapped_distance(a.phi, -b.phi), 1e-4);
        }
    }
}

TEST(analysis, two_bins_use_scan) {
    auto pair = ModePair::plane_wave();
    auto h = from_counts({7, 1});
    EXPECT_THROW(chi2_noise_closed_form(h), ArgumentError);
    auto fit = chi2_noise(h, pair);
    auto scan = chi2_noise_scan(h, pair);
    EXPECT_EQ(fit.chi2, scan.chi2);
    EXPECT_EQ(fit.phi, scan.phi);
}

TEST(analysis, visibility_cases) {
    auto pair = ModePair::plane_wave();
    // Large perfect fringe: counts proportional to 1 + cos(2 pi x_i - 1).
    std::vector<long long> counts;
    for (int i = 0; i < 20; i++) {
        double x = (i + 0.5) / 20;
        counts.push_back(std::llround(1e6 * (1 + std::cos(2 * kPi * x - 1.0))));
    }
    auto h = from_counts(counts);
    EXPECT_NEAR(visibility(h, pair), 1.0, 1e-5);
    EXPECT_NEAR(chi2_noise(h, pair).phi, 1.0, 1e-5);

    auto single = from_counts({0, 1, 0, 0, 0});
    double v = visibility(single, pair);
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 2);

    EXPECT_THROW(visibility(from_counts({0, 0, 0}), pair), ArgumentError);
    EXPECT_THROW(visibility(h, ModePair::split_box()), ArgumentError);
}

TEST(analysis, mean_noise_tiny_run_is_well_formed) {
    auto pair = ModePair::plane_wave();
    auto report = mean_noise(FockState{3, 3}, pair, 6, 4, 2, 9);
    ASSERT_EQ(report.per_shot.size(), 2u);
    EXPECT_EQ(report.per_shot[0].stream, 0u);
    EXPECT_EQ(report.per_shot[1].stream, 1u);
    EXPECT_EQ(report.chi2.count, 2);
    EXPECT_TRUE(std::isfinite(report.chi2.std_error));
    for (const auto &r : report.per_shot) {
        EXPECT_GE(r.fit.chi2, 0);
    }
    EXPECT_THROW(mean_noise(FockState{3, 3}, pair, 6, 4, 1, 9), ArgumentError);
}

TEST(analysis, mean_noise_independent_of_workers) {
    auto pair = ModePair::split_box();
    auto a = mean_noise(FockState{10, 10}, pair, 20, 5, 64, 17, {1, 0});
    auto b = mean_noise(FockState{10, 10}, pair, 20, 5, 64, 17, {4, 0});
    ASSERT_EQ(a.per_shot.size(), b.per_shot.size());
    for (std::size_t i = 0; i < a.per_shot.size(); i++) {
        EXPECT_EQ(a.per_shot[i].fit.chi2, b.per_shot[i].fit.chi2);
        EXPECT_EQ(a.per_shot[i].fit.phi, b.per_shot[i].fit.phi);
    }
    EXPECT_EQ(a.chi2.mean, b.chi2.mean);
}

TEST(analysis, phase_noise_does_not_depend_on_phi) {
    auto pair = ModePair::plane_wave();
    auto fixed = mean_noise(PhaseState{40, 0.0}, pair, 40, 8, 3000, 21);
    auto random = mean_noise(PhaseState{40, std::nullopt}, pair, 40, 8, 3000, 21, {1, 3000});
    EXPECT_LT(std::abs(z_score(fixed.chi2, random.chi2)), 3);
}

TEST(analysis, identity_check_small_cases) {
    auto pair = ModePair::plane_wave();
    auto small = noise_identity_check(4, 2, 10000, pair, 1);
    EXPECT_LT(std::abs(small.z), 4);
    auto mid = noise_identity_check(20, 5, 3000, pair, 2, 2);
    EXPECT_LT(std::abs(mid.z), 4);
    auto again = noise_identity_check(20, 5, 3000, pair, 2, 1);
    EXPECT_EQ(again.lhs.mean, mid.lhs.mean);
    EXPECT_EQ(again.rhs.mean, mid.rhs.mean);
    EXPECT_EQ(again.z, mid.z);
    EXPECT_THROW(noise_identity_check(5, 2, 100, pair, 1), ArgumentError);
    EXPECT_THROW(noise_identity_check(2, 2, 100, pair, 1), ArgumentError);
}

TEST(analysis, asym_profile_shape_and_ordering) {
    auto pair = ModePair::plane_wave();
    auto profile = asym_noise_profile(12, 4, 1500, pair, 4, 2);
    ASSERT_EQ(profile.rows.size(), 13u);
    for (int j = 0; j <= 12; j++) {
        EXPECT_EQ(profile.rows[j].j, j);
    }
    const auto &edge = profile.rows.front().chi2;
    const auto &mid = profile.rows[6].chi2;
    EXPECT_GT(z_score(edge, mid), 3);
    for (int j = 0; j <= 12; j++) {
        EXPECT_LT(std::abs(z_score(profile.rows[j].chi2, profile.rows[12 - j].chi2)), 4) << j;
    }
    EXPECT_THROW(asym_noise_profile(5, 4, 10, pair, 1), ArgumentError);
}

TEST(analysis, average_density_of_phase_state_follows_fringe) {
    auto pair = ModePair::plane_wave();
    int d = 200;
    int bins = 10;
    auto avg = average_density(PhaseState{d, 0.0}, pair, d, bins, 400, 8);
    ASSERT_EQ(avg.per_bin.size(), static_cast<std::size_t>(bins));
    for (int i = 0; i < bins; i++) {
        double x = (i + 0.5) / bins;
        // Exact bin probability of 1 + cos(2 pi x) over [i/D, (i+1)/D).
        double a = static_cast<double>(i) / bins;
        double b = static_cast<double>(i + 1) / bins;
        double p = (b - a) + (std::sin(2 * kPi * b) - std::sin(2 * kPi * a)) / (2 * kPi);
        EXPECT_LT(std::abs(avg.per_bin[i].mean - d * p), 4 * avg.per_bin[i].std_error + 1e-9) << x;
    }
}

TEST(analysis, average_density_of_fock_state_is_flat) {
    auto pair = ModePair::plane_wave();
    auto avg = average_density(FockState{10, 10}, pair, 20, 5, 2000, 12, 2);
    for (const auto &bin : avg.per_bin) {
        EXPECT_LT(std::abs(bin.mean - 4.0), 4 * bin.std_error);
    }
    auto smoke = average_density(FockState{1, 1}, ModePair::split_box(), 2, 3, 10, 1);
    EXPECT_EQ(smoke.realizations, 10);
    EXPECT_EQ(smoke.per_bin.size(), 3u);
    EXPECT_THROW(average_density(FockState{1, 1}, pair, 2, 3, 9, 1), ArgumentError);
}

TEST(analysis, fock_and_phase_noise_agree) {
    auto pair = ModePair::plane_wave();
    auto cmp = noise_comparison(40, 8, 3000, pair, 6, 2);
    EXPECT_EQ(cmp.fock.per_shot.front().stream, 0u);
    EXPECT_EQ(cmp.phase.per_shot.front().stream, 3000u);
    EXPECT_LT(std::abs(cmp.z), 3);
}

TEST(analysis, larger_shots_give_cleaner_fringes) {
    // V itself is biased upward by shot noise at small d, so quality is the
    // median distance of V from full contrast.
    auto pair = ModePair::plane_wave();
    auto defect = [&](int n) {
        std::vector<double> ds;
        for (std::uint64_t s = 0; s < 100; s++) {
            auto h = build_histogram(run_single_shot(FockState{n, n}, pair, 2 * n, 31, s), 20);
            ds.push_back(std::abs(visibility(h, pair) - 1));
        }
        return median(ds);
    };
    double big = defect(500);
    double small = defect(20);
    EXPECT_LT(big, small);
    EXPECT_LT(big, 0.05);
}
