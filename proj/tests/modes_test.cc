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

#include "fockfringe/modes.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "fockfringe/errors.h"
#include "test_util.h"

using namespace fockfringe;
using fockfringe::testing::all_test_pairs;
using fockfringe::testing::data_path;

TEST(modes, plane_wave_values) {
    auto pair = ModePair::plane_wave();
    auto [u0, w0] = pair.evaluate(0.0);
    EXPECT_NEAR(std::abs(u0 - complex(1, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(w0 - complex(1, 0)), 0, 1e-15);
    auto [uh, wh] = pair.evaluate(0.5);
    EXPECT_NEAR(std::abs(uh - complex(0, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(wh - complex(0, -1)), 0, 1e-15);
    for (double x : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        auto [u, w] = pair.evaluate(x);
        EXPECT_EQ(u, std::conj(w)) << x;
    }
}

TEST(modes, split_box_values) {
    auto pair = ModePair::split_box();
    auto [u, w] = pair.evaluate(0.25);
    EXPECT_DOUBLE_EQ(u.real(), std::numbers::sqrt2);
    EXPECT_EQ(w, complex(0, 0));
    // The boundary point belongs to w.
    auto [ub, wb] = pair.evaluate(0.5);
    EXPECT_EQ(ub, complex(0, 0));
    EXPECT_DOUBLE_EQ(wb.real(), std::numbers::sqrt2);
    auto [u1, w1] = pair.evaluate(1.0);
    EXPECT_EQ(u1, complex(0, 0));
    EXPECT_DOUBLE_EQ(w1.real(), std::numbers::sqrt2);
}

TEST(modes, evaluate_rejects_out_of_domain) {
    auto pair = ModePair::plane_wave();
    EXPECT_THROW(pair.evaluate(-1e-12), DomainError);
    EXPECT_THROW(pair.evaluate(1.0000001), DomainError);
    EXPECT_THROW(pair.evaluate(NAN), DomainError);
}

TEST(modes, registered_pairs_are_orthonormal) {
    for (const auto &pair : all_test_pairs()) {
        auto r = check_orthonormality(pair);
        EXPECT_TRUE(r.pass) << pair.tag();
        EXPECT_NEAR(r.norm_u, 1, 1e-8) << pair.tag();
        EXPECT_NEAR(r.norm_w, 1, 1e-8) << pair.tag();
        EXPECT_NEAR(std::abs(r.overlap), 0, 1e-8) << pair.tag();
    }
}

TEST(modes, identical_modes_fail_orthonormality) {
    auto pair = ModePair::fourier_series({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}}, false);
    auto r = check_orthonormality(pair);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.overlap.real(), 1, 1e-12);
    EXPECT_THROW(ModePair::fourier_series({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}}), ArgumentError);
}

TEST(modes, fourier_rejects_bad_coefficients) {
    EXPECT_THROW(ModePair::fourier_series({}, {{1, 0}}), ArgumentError);
    EXPECT_THROW(ModePair::fourier_series({{NAN, 0}}, {{0, 0}, {1, 0}}), ArgumentError);
}

TEST(modes, phase_state_density_closed_forms) {
    auto pw = ModePair::plane_wave();
    for (double x : {0.0, 0.1, 0.37, 0.5, 0.92}) {
        EXPECT_NEAR(phase_state_density(pw, 0.0, x), 1 + std::cos(2 * std::numbers::pi * x), 1e-14);
    }
    // The fringe maximum sits at x = phi / 2pi.
    for (double phi : {0.3, 1.7, 4.0, 6.0}) {
        double x = std::fmod(phi / (2 * std::numbers::pi), 1.0);
        EXPECT_NEAR(phase_state_density(pw, phi, x), 2.0, 1e-14);
    }
    auto sb = ModePair::split_box();
    for (double phi : {0.0, 1.0, -2.5}) {
        EXPECT_NEAR(phase_state_density(sb, phi, 0.25), 1.0, 1e-15);
    }
}

TEST(modes, phase_state_density_normalized) {
    for (const auto &pair : all_test_pairs()) {
        for (double phi : {0.0, std::numbers::pi / 3, std::numbers::pi, 1.5 * std::numbers::pi}) {
            double total = integrate(pair, [&](double x) { return phase_state_density(pair, phi, x); });
            EXPECT_NEAR(total, 1.0, 1e-8) << pair.tag() << " phi=" << phi;
        }
    }
}

TEST(modes, density_bound_covers_grid) {
    for (const auto &pair : all_test_pairs()) {
        double worst = 0;
        for (int j = 0; j < 4096; j++) {
            double x = j / 4095.0;
            for (double phi : {0.0, 0.9, 2.1, 3.3, 5.0}) {
                worst = std::max(worst, phase_state_density(pair, phi, x));
            }
            auto [u, w] = pair.evaluate(x);
            worst = std::max(worst, std::norm(u) + std::norm(w));
        }
        EXPECT_GE(pair.density_bound() + 1e-12, worst) << pair.tag();
        EXPECT_TRUE(std::isfinite(pair.density_bound()));
    }
}

TEST(modes, grid_quadratic_form_max) {
    auto pair = ModePair::plane_wave();
    // (1/2)|u + w|^2 = 1 + cos(2 pi x), max 2 at the grid endpoints.
    EXPECT_NEAR(pair.grid().max_quadratic_form(0.5, 0.5, 0.5), 2.0, 1e-14);
    EXPECT_EQ(pair.grid().x.front(), 0.0);
    EXPECT_EQ(pair.grid().x.back(), 1.0);
    EXPECT_EQ(pair.grid().x.size(), ModeGrid::kPoints);
}

TEST(modes, tags_resolve) {
    EXPECT_EQ(mode_pair_from_tag("plane-wave").kind(), ModePair::Kind::kPlaneWave);
    EXPECT_EQ(mode_pair_from_tag("split-box").kind(), ModePair::Kind::kSplitBox);
    auto f = mode_pair_from_tag("fourier:" + data_path("fourier_pair.txt"));
    EXPECT_EQ(f.kind(), ModePair::Kind::kFourierSeries);
    EXPECT_EQ(f.tag(), "fourier:" + data_path("fourier_pair.txt"));
    ASSERT_EQ(f.u_coeffs().size(), 2u);
    EXPECT_EQ(f.u_coeffs()[1], complex(0, 0.8));
    EXPECT_EQ(f.w_coeffs()[1], complex(0, -0.6));
    EXPECT_THROW(mode_pair_from_tag("gaussian"), ArgumentError);
    EXPECT_THROW(mode_pair_from_tag("fourier:"), ArgumentError);
    EXPECT_THROW(mode_pair_from_tag("fourier:/nonexistent/file.txt"), ArgumentError);
    EXPECT_THROW(mode_pair_from_tag("fourier:" + data_path("not_orthogonal.txt")), ArgumentError);
    EXPECT_THROW(mode_pair_from_tag("fourier:" + data_path("missing_w.txt")), ArgumentError);
}

TEST(modes, copies_share_immutable_grid) {
    auto a = ModePair::split_box();
    ModePair b = a;
    EXPECT_EQ(&a.grid(), &b.grid());
}
