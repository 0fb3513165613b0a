// Copyright 2026 The seqmps Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file squeezing.hpp
 * Spin squeezing of the chain swept by exp(-i chi_t/2 (XX - YY)) from
 * |0...0>, and the separable / pairwise-entangled variance bounds.
 *
 * Collective operators are unscaled sums A = sum_m sigma_m. Coefficients
 * are per site: m = <A_z>/N and v = (Delta A_theta)^2 / N.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "seqmps/densemat.hpp"

namespace seqmps {

enum class SqueezeMode {
    exact,      ///< finite-N transfer-matrix sums
    asymptotic, ///< leading large-N term from the closed forms
};

/// Large-N <A_z>/N = (1 - 3 sin^2 chi_t) / (1 + sin^2 chi_t).
double mean_z_coeff(double chi_t);

/// Large-N (Delta A_theta)^2 / N for A_theta = sum cos(theta) sigma_x +
/// sin(theta) sigma_y: 1 + 4 s (s - sin 2theta) / (1 + s^2), s = sin chi_t.
double transverse_variance_coeff(double chi_t, double theta);

/// <A_z>. Exact mode needs N >= 2.
double mean_z(double chi_t, std::size_t n_sites, SqueezeMode mode);

/// (Delta A_theta)^2.
double transverse_variance(double chi_t, double theta, std::size_t n_sites, SqueezeMode mode);

struct ThetaOptimum {
    /// Minimizer in [0, pi).
    double theta = 0.0;
    double coeff = 1.0;
    /// Set when the coefficient varies by less than 1e-9 over theta.
    bool degenerate = false;
};

/// Minimizes transverse_variance_coeff over theta: a 64-point grid on
/// [0, pi) followed by golden-section refinement.
ThetaOptimum optimal_theta(double chi_t);

struct TransverseMinimum {
    double theta = 0.0;
    double variance = 0.0;
};

/// Smallest transverse variance over theta. Exact mode diagonalizes the
/// 2x2 covariance matrix of (A_x, A_y); asymptotic mode uses optimal_theta.
TransverseMinimum minimal_transverse_variance(double chi_t, std::size_t n_sites,
                                              SqueezeMode mode);

/// N (Delta A_theta*)^2 / <A_z>^2, invariant under A -> A/2. Throws
/// InputError when |<A_z>| < 1e-9 N.
double xi_squared(double chi_t, std::size_t n_sites, SqueezeMode mode);

/// Same ratio from raw moments, for either spin normalization.
double xi_squared_from_moments(std::size_t n_sites, double mean_z, double transverse_variance);

struct BoundCurve {
    double j = 0.5;
    /// (m, F_j(m)) in the per-site axes of mean_z_coeff and
    /// transverse_variance_coeff.
    std::vector<std::pair<double, double>> samples;
};

/// Minimum transverse variance per site at fixed m for ensembles of spin-j
/// blocks, j in {1/2, 1}. j = 1/2 gives m^2. j = 1 scans ground states of
/// J_x^2 - mu J_z, bisects mu for each m, and takes the lower convex hull.
BoundCurve sm_bound(double j, const std::vector<double> &m_grid);

/// Linear interpolation of a bound curve sampled on ascending m.
double interpolate_bound(const BoundCurve &curve, double m);

struct Fig4Point {
    double chi_t = 0.0;
    double m = 0.0;
    double v = 0.0;
    double f_half = 0.0;
    double f_one = 0.0;
    bool below_separable = false;
    bool below_pairwise = false;
};

/// Large-N (m, v) at theta = pi/4 for each chi_t in (0, pi/2), compared
/// against both bounds at |m| on a 1001-point grid.
std::vector<Fig4Point> fig4_curve(const std::vector<double> &chi_t_grid);

struct SqueezeReport {
    double chi_t = 0.0;
    double mean_z_coeff = 0.0;
    double var_coeff = 0.0;
    double theta_star = 0.0;
    double xi2 = 0.0;
    bool below_separable = false;
    bool below_pairwise = false;
};

SqueezeReport squeeze_report(double chi_t, std::size_t n_sites, SqueezeMode mode);

} // namespace seqmps
