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

#ifndef FOCKFRINGE_STATS_H
#define FOCKFRINGE_STATS_H

#include <span>
#include <vector>

#include "fockfringe/rng.h"

namespace fockfringe {

struct Summary {
    double mean = 0;
    double stddev = 0;  // sample standard deviation, n - 1 denominator
    double std_error = 0;  // stddev / sqrt(n)
    std::size_t count = 0;
};

/// Mean and spread of a sample, accumulated in index order.
Summary summarize(std::span<const double> values);

/// (a - b) / sqrt(se_a^2 + se_b^2).
double z_score(const Summary &a, const Summary &b);

double median(std::vector<double> values);

/// One-sample Kolmogorov-Smirnov test against U(0, 1): the statistic D_n and
/// its asymptotic p-value with the Stephens small-sample correction.
struct KsResult {
    double statistic = 0;
    double p_value = 0;
};
KsResult ks_uniform(std::vector<double> samples);

/// Upper tail P(X >= stat) of a chi-squared distribution with `dof` degrees of freedom.
double chi_squared_upper_tail(double stat, double dof);

/// Pearson goodness of fit of observed counts against cell probabilities.
/// Cells whose expected count falls below `min_expected` are pooled into one cell.
struct GoodnessOfFit {
    double statistic = 0;
    int dof = 0;
    double p_value = 0;
    int cells_used = 0;
};
GoodnessOfFit pearson_goodness_of_fit(
    std::span<const long long> observed, std::span<const double> probabilities, double min_expected = 5.0);

/// Exact draw from Binomial(n, 1/2) by inverting the cumulative pmf.
int sample_binomial_half(int n, Stream &rng);

}  // namespace fockfringe

#endif  // FOCKFRINGE_STATS_H
