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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fockfringe/errors.h"

namespace fockfringe {

namespace {

constexpr std::size_t kSimpsonIntervals = 4096;

complex fourier_eval(const std::vector<complex> &coeffs, double x) {
    // Horner in z = exp(2 pi i x).
    complex z = std::polar(1.0, 2 * std::numbers::pi * x);
    complex acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

double abs_sum(const std::vector<complex> &coeffs) {
    double s = 0;
    for (const auto &c : coeffs) {
        s += std::abs(c);
    }
    return s;
}

template <typename T, typename F>
T simpson_pieces(const std::vector<double> &breaks, F &&f) {
    std::vector<double> knots{0.0};
    knots.insert(knots.end(), breaks.begin(), breaks.end());
    knots.push_back(1.0);
    std::size_t pieces = knots.size() - 1;
    std::size_t per_piece = kSimpsonIntervals / pieces;
    per_piece -= per_piece % 2;
    T total{};
    for (std::size_t p = 0; p < pieces; p++) {
        double a = knots[p];
        double b = knots[p + 1];
        double h = (b - a) / static_cast<double>(per_piece);
        // Endpoints nudged inward by one ulp so that one-sided limits are used at jumps.
        T sum = f(std::nextafter(a, b)) + f(std::nextafter(b, a));
        for (std::size_t i = 1; i < per_piece; i++) {
            double weight = (i % 2 == 1) ? 4.0 : 2.0;
            sum += weight * f(a + h * static_cast<double>(i));
        }
        total += sum * (h / 3.0);
    }
    return total;
}

}  // namespace

double ModeGrid::max_quadratic_form(double a, double b, complex c) const {
    double cr = 2 * c.real();
    double ci = 2 * c.imag();
    double best = -INFINITY;
    for (std::size_t j = 0; j < kPoints; j++) {
        double v = a * uu[j] + b * ww[j] + cr * cross_re[j] - ci * cross_im[j];
        best = std::max(best, v);
    }
    return best;
}

ModePair ModePair::plane_wave() {
    ModePair p;
    p.kind_ = Kind::kPlaneWave;
    p.tag_ = "plane-wave";
    p.density_bound_ = 2.0;
    p.finish_construction();
    return p;
}

ModePair ModePair::split_box() {
    ModePair p;
    p.kind_ = Kind::kSplitBox;
    p.tag_ = "split-box";
    p.breakpoints_ = {0.5};
    p.density_bound_ = 2.0;
    p.finish_construction();
    return p;
}

ModePair ModePair::fourier_series(
    std::vector<complex> u_coeffs, std::vector<complex> w_coeffs, bool validate, std::string tag) {
    if (u_coeffs.empty() || w_coeffs.empty()) {
        throw ArgumentError("fourier mode pair needs at least one coefficient per mode");
    }
    for (const auto *list : {&u_coeffs, &w_coeffs}) {
        for (const auto &c : *list) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw ArgumentError("fourier coefficients must be finite");
            }
        }
    }
    ModePair p;
    p.kind_ = Kind::kFourierSeries;
    p.tag_ = std::move(tag);
    double su = abs_sum(u_coeffs);
    double sw = abs_sum(w_coeffs);
    p.density_bound_ = su * su + sw * sw;
    p.u_coeffs_ = std::move(u_coeffs);
    p.w_coeffs_ = std::move(w_coeffs);
    p.finish_construction();
    if (validate) {
        auto report = check_orthonormality(p);
        if (!report.pass) {
            std::ostringstream msg;
            msg.precision(12);
            msg << "fourier mode pair is not orthonormal: |u|^2=" << report.norm_u
                << " |w|^2=" << report.norm_w << " <u,w>=" << report.overlap;
            throw ArgumentError(msg.str());
        }
    }
    return p;
}

void ModePair::finish_construction() {
    auto g = std::make_shared<ModeGrid>();
    g->x.resize(ModeGrid::kPoints);
    g->uu.resize(ModeGrid::kPoints);
    g->ww.resize(ModeGrid::kPoints);
    g->cross_re.resize(ModeGrid::kPoints);
    g->cross_im.resize(ModeGrid::kPoints);
    for (std::size_t j = 0; j < ModeGrid::kPoints; j++) {
        double x = static_cast<double>(j) / static_cast<double>(ModeGrid::kPoints - 1);
        auto [u, w] = evaluate_unchecked(x);
        complex cross = std::conj(u) * w;
        g->x[j] = x;
        g->uu[j] = std::norm(u);
        g->ww[j] = std::norm(w);
        g->cross_re[j] = cross.real();
        g->cross_im[j] = cross.imag();
    }
    grid_ = std::move(g);
}

std::pair<complex, complex> ModePair::evaluate(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("mode position must lie in [0, 1], got " + std::to_string(x));
    }
    return evaluate_unchecked(x);
}

std::pair<complex, complex> ModePair::evaluate_unchecked(double x) const {
    switch (kind_) {
        case Kind::kPlaneWave: {
            complex u = std::polar(1.0, std::numbers::pi * x);
            return {u, std::conj(u)};
        }
        case Kind::kSplitBox: {
            // x = 1/2 belongs to w.
            if (x < 0.5) {
                return {std::numbers::sqrt2, 0.0};
            }
            return {0.0, std::numbers::sqrt2};
        }
        case Kind::kFourierSeries:
            return {fourier_eval(u_coeffs_, x), fourier_eval(w_coeffs_, x)};
    }
    return {0.0, 0.0};
}

double integrate(const ModePair &pair, const std::function<double(double)> &f) {
    return simpson_pieces<double>(pair.breakpoints(), f);
}

complex integrate_complex(const ModePair &pair, const std::function<complex(double)> &f) {
    return simpson_pieces<complex>(pair.breakpoints(), f);
}

OrthonormalityReport check_orthonormality(const ModePair &pair) {
    OrthonormalityReport r;
    r.norm_u = integrate(pair, [&](double x) { return std::norm(pair.evaluate_unchecked(x).first); });
    r.norm_w = integrate(pair, [&](double x) { return std::norm(pair.evaluate_unchecked(x).second); });
    r.overlap = integrate_complex(pair, [&](double x) {
        auto [u, w] = pair.evaluate_unchecked(x);
        return std::conj(u) * w;
    });
    r.pass = std::abs(r.norm_u - 1) <= kOrthonormalityTolerance &&
             std::abs(r.norm_w - 1) <= kOrthonormalityTolerance &&
             std::abs(r.overlap) <= kOrthonormalityTolerance;
    return r;
}

double phase_state_density(const ModePair &pair, double phi, double x) {
    auto [u, w] = pair.evaluate(x);
    return 0.5 * std::norm(u + std::polar(1.0, phi) * w);
}

ModePair load_fourier_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open fourier coefficient file '" + path + "'");
    }
    std::vector<complex> blocks[2];
    int block = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            if (!blocks[0].empty()) {
                block = 1;
            }
            continue;
        }
        if (line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double re = 0;
        double im = 0;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra)) {
            throw ArgumentError(
                path + ":" + std::to_string(line_no) + ": expected 're im', got '" + line + "'");
        }
        blocks[block].emplace_back(re, im);
    }
    if (blocks[0].empty() || blocks[1].empty()) {
        throw ArgumentError(path + ": expected u coefficients, a blank line, then w coefficients");
    }
    return ModePair::fourier_series(std::move(blocks[0]), std::move(blocks[1]), true, "fourier:" + path);
}

ModePair mode_pair_from_tag(std::string_view tag) {
    if (tag == "plane-wave") {
        return ModePair::plane_wave();
    }
    if (tag == "split-box") {
        return ModePair::split_box();
    }
    constexpr std::string_view kFourier = "fourier:";
    if (tag.substr(0, kFourier.size()) == kFourier && tag.size() > kFourier.size()) {
        return load_fourier_file(std::string(tag.substr(kFourier.size())));
    }
    throw ArgumentError(
        "unknown mode pair '" + std::string(tag) + "' (expected plane-wave, split-box or fourier:<file>)");
}

}  // namespace fockfringe
