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

#include "fockfringe/stats.h"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "fockfringe/errors.h"
#include "fockfringe/oracle.h"

namespace fockfringe {

Summary summarize(std::span<const double> values) {
    Summary s;
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
        s.std_error = s.stddev / std::sqrt(static_cast<double>(values.size()));
    }
    return s;
}

double z_score(const Summary &a, const Summary &b) {
    double se = std::hypot(a.std_error, b.std_error);
    if (se == 0) {
        return a.mean == b.mean ? 0.0 : INFINITY;
    }
    return (a.mean - b.mean) / se;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ArgumentError("median of an empty sample");
    }
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

KsResult ks_uniform(std::vector<double> samples) {
    if (samples.empty()) {
        throw ArgumentError("KS test of an empty sample");
    }
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double dmax = 0;
    for (std::size_t i = 0; i < samples.size(); i++) {
        double f = std::clamp(samples[i], 0.0, 1.0);
        dmax = std::max({dmax, (i + 1) / n - f, f - i / n});
    }
    // Kolmogorov distribution tail Q(lambda) = 2 sum_k (-1)^{k-1} exp(-2 k^2 lambda^2).
    double sqrt_n = std::sqrt(n);
    double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * dmax;
    double q = 0;
    if (lambda < 0.2) {
        q = 1;
    } else {
        double sign = 1;
        for (int k = 1; k <= 100; k++) {
            double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
            q += term;
            if (std::abs(term) < 1e-16) {
                break;
            }
            sign = -sign;
        }
        q = std::clamp(2 * q, 0.0, 1.0);
    }
    return {dmax, q};
}

double chi_squared_upper_tail(double stat, double dof) {
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, std::max(stat, 0.0)));
}

GoodnessOfFit pearson_goodness_of_fit(
    std::span<const long long> observed, std::span<const double> probabilities, double min_expected) {
    if (observed.size() != probabilities.size() || observed.empty()) {
        throw ArgumentError("goodness of fit needs matching non-empty observed and probability lists");
    }
    double total = 0;
    for (long long c : observed) {
        total += static_cast<double>(c);
    }
    GoodnessOfFit out;
    double pooled_obs = 0;
    double pooled_exp = 0;
    for (std::size_t i = 0; i < observed.size(); i++) {
        double expected = probabilities[i] * total;
        auto obs = static_cast<double>(observed[i]);
        if (expected < min_expected) {
            pooled_obs += obs;
            pooled_exp += expected;
            continue;
        }
        out.statistic += (obs - expected) * (obs - expected) / expected;
        out.cells_used++;
    }
    if (pooled_exp > 0) {
        out.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        out.cells_used++;
    } else if (pooled_obs > 0) {
        // Counts where the model puts no mass at all.
        out.statistic = INFINITY;
        out.cells_used++;
    }
    out.dof = out.cells_used - 1;
    out.p_value = (out.dof > 0 && std::isfinite(out.statistic)) ? chi_squared_upper_tail(out.statistic, out.dof)
                                                                 : (std::isfinite(out.statistic) ? 1.0 : 0.0);
    return out;
}

int sample_binomial_half(int n, Stream &rng) {
    if (n < 0) {
        throw ArgumentError("binomial trial count must be non-negative");
    }
    double u = rng.uniform();
    double log_half_n = -n * std::log(2.0);
    double cumulative = 0;
    for (int j = 0; j < n; j++) {
        cumulative += std::exp(log_binomial(n, j) + log_half_n);
        if (u < cumulative) {
            return j;
        }
    }
    return n;
}

}  // namespace fockfringe
