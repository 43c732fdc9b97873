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

#ifndef FOCKFRINGE_MODES_H
#define FOCKFRINGE_MODES_H

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockfringe {

using complex = std::complex<double>;

/// Mode values sampled on a fixed uniform grid over [0, 1], including both endpoints.
///
/// Stored as the real quantities needed to evaluate quadratic forms
/// a|u|^2 + b|w|^2 + 2 Re(conj(u) w c) with one fused loop per grid point.
struct ModeGrid {
    static constexpr std::size_t kPoints = 1024;

    std::vector<double> x;
    std::vector<double> uu;       // |u|^2
    std::vector<double> ww;       // |w|^2
    std::vector<double> cross_re; // Re(conj(u) w)
    std::vector<double> cross_im; // Im(conj(u) w)

    /// Max over the grid of a|u|^2 + b|w|^2 + 2 Re(conj(u) w c).
    double max_quadratic_form(double a, double b, complex c) const;
};

/// An orthonormal pair of mode functions u(x), w(x) on the unit interval.
///
/// Immutable after construction; copies share the precomputed grid.
class ModePair {
   public:
    enum class Kind { kPlaneWave, kSplitBox, kFourierSeries };

    /// u(x) = exp(i pi x), w(x) = exp(-i pi x).
    static ModePair plane_wave();

    /// u = sqrt(2) on [0, 1/2), w = sqrt(2) on [1/2, 1].
    static ModePair split_box();

    /// u(x) = sum_k u_coeffs[k] exp(2 pi i k x), likewise for w.
    ///
    /// When `validate` is set the pair must pass check_orthonormality, otherwise
    /// ArgumentError is thrown. Unvalidated pairs exist so that the checker
    /// itself can be exercised on bad input.
    static ModePair fourier_series(
        std::vector<complex> u_coeffs,
        std::vector<complex> w_coeffs,
        bool validate = true,
        std::string tag = "fourier");

    Kind kind() const { return kind_; }
    const std::string &tag() const { return tag_; }
    const std::vector<complex> &u_coeffs() const { return u_coeffs_; }
    const std::vector<complex> &w_coeffs() const { return w_coeffs_; }

    /// (u(x), w(x)). Throws DomainError unless 0 <= x <= 1.
    std::pair<complex, complex> evaluate(double x) const;

    /// Same as evaluate without the domain check; for inner loops.
    std::pair<complex, complex> evaluate_unchecked(double x) const;

    /// An upper bound on sup_x (|u(x)|^2 + |w(x)|^2).
    double density_bound() const { return density_bound_; }

    /// Interior discontinuities of u or w, sorted. Empty for smooth pairs.
    const std::vector<double> &breakpoints() const { return breakpoints_; }

    const ModeGrid &grid() const { return *grid_; }

   private:
    ModePair() = default;
    void finish_construction();

    Kind kind_ = Kind::kPlaneWave;
    std::string tag_;
    std::vector<complex> u_coeffs_;
    std::vector<complex> w_coeffs_;
    std::vector<double> breakpoints_;
    double density_bound_ = 0;
    std::shared_ptr<const ModeGrid> grid_;
};

struct OrthonormalityReport {
    double norm_u = 0;
    complex overlap;
    double norm_w = 0;
    bool pass = false;
};

constexpr double kOrthonormalityTolerance = 1e-8;

/// Integrals of |u|^2, |w|^2 and conj(u) w over [0, 1].
OrthonormalityReport check_orthonormality(const ModePair &pair);

/// (1/2)|u(x) + e^{i phi} w(x)|^2, the single-particle density of a phase state.
double phase_state_density(const ModePair &pair, double phi, double x);

/// Composite Simpson rule over [0, 1] with 4096 intervals in total.
///
/// The interval is split at the pair's breakpoints and each piece is sampled
/// at its endpoints from the inside, so one-sided limits are used at jumps.
double integrate(const ModePair &pair, const std::function<double(double)> &f);
complex integrate_complex(const ModePair &pair, const std::function<complex(double)> &f);

/// Resolves "plane-wave", "split-box" or "fourier:<file>".
ModePair mode_pair_from_tag(std::string_view tag);

/// Fourier coefficient file: u coefficients, a blank line, then w coefficients.
/// One "re im" pair per line; lines starting with '#' are ignored.
ModePair load_fourier_file(const std::string &path);

}  // namespace fockfringe

#endif  // FOCKFRINGE_MODES_H
