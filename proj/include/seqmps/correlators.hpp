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
 * @file correlators.hpp
 * Expectation values, two-point functions and variances of additive
 * observables A = sum_m A_m, exactly at finite N and asymptotically in N.
 *
 * Collective operators are unscaled sums of single-site operators (no 1/2);
 * use to_half_spin for the J = sigma/2 convention.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "seqmps/densemat.hpp"
#include "seqmps/transfer.hpp"

namespace seqmps {

/// Relative bound on imaginary parts of physical expectations.
inline constexpr double kImagResidueTolerance = 1e-10;

/// <A_m>, sites 1..N: tr(E^{m-1} E_A X) for m < N, tr(E^{N-1} X_A) for m = N.
double one_point(const TransferSet &ts, const LocalObservable &a, std::size_t m,
                 std::size_t n_sites);

/// <A_m A_n>, 1 <= m < n <= N.
double two_point(const TransferSet &ts, const LocalObservable &a, std::size_t m, std::size_t n,
                 std::size_t n_sites);

/// <sum_m A_m> in O(N).
double additive_mean(const TransferSet &ts, const LocalObservable &a, std::size_t n_sites);

enum class VarianceMethod {
    sweep,    ///< row-vector sweep, O(N)
    naive,    ///< literal trace formulas for every (m, n), O(N^2)
    spectral, ///< eigen-expansion with closed-form site sums, O(1) in N
};

struct VarianceBreakdown {
    double total = 0.0;
    double mean = 0.0;
    /// Coefficients of N^2 and N in the large-N expansion, when available.
    double quadratic_coeff = 0.0;
    double linear_coeff = 0.0;
    /// total - quadratic_coeff N^2 - linear_coeff N.
    double boundary_remainder = 0.0;
    bool quadratic_available = false;
    bool linear_available = false;
};

/// Exact variance of sum_m A_m over an N-site chain. A must be Hermitian.
/// The spectral method needs a diagonalizable E and throws NumericalError
/// otherwise.
VarianceBreakdown additive_variance_exact(const TransferSet &ts, const LocalObservable &a,
                                          std::size_t n_sites,
                                          VarianceMethod method = VarianceMethod::sweep);

/// sum_{n=2}^{N-1} sum_{m=1}^{n-1} li^{m-1} lj^{n-m-1}.
///
/// When li, lj and 1 are pairwise at least 1e-3 apart, or N > 10^6, this is
/// the closed form, switching to its analytic limits (li = lj, li = 1,
/// lj = 1) within kGeometricBranchThreshold of a branch point. Closer
/// eigenvalues at moderate N are summed term by term, which avoids the
/// cancellation in the closed form.
cplx geometric_sum_f(cplx li, cplx lj, std::uint64_t n_sites);

inline constexpr double kGeometricBranchThreshold = 1e-7;

/// sum_{a+b=k} x^a y^b.
cplx homogeneous_sum(cplx x, cplx y, std::uint64_t k);

/// sum_{k=0}^{count-1} x^k.
cplx geometric_sum(cplx x, std::uint64_t count);

enum class AsymptoticStatus {
    ok,
    /// Some eigenvalue lacks a full eigenvector set; only exact sums apply.
    defective,
    /// A non-unit eigenvalue lies on the unit circle; the N^2 coefficient is
    /// a Cesaro average and no linear coefficient exists.
    peripheral,
};

struct AsymptoticVariance {
    double quadratic_coeff = 0.0;
    double linear_coeff = 0.0;
    /// Large-N mean is mean_coeff N + mean_offset.
    double mean_coeff = 0.0;
    double mean_offset = 0.0;
    AsymptoticStatus status = AsymptoticStatus::ok;
    std::string diagnostic;

    [[nodiscard]] bool quadratic_available() const { return status != AsymptoticStatus::defective; }
    [[nodiscard]] bool linear_available() const { return status == AsymptoticStatus::ok; }
};

/// Large-N expansion variance = q N^2 + l N + O(1) from the spectral
/// projectors of E.
AsymptoticVariance asymptotic_variance(const TransferSet &ts, const LocalObservable &a,
                                       double tol = kDefaultEigenTolerance);

struct CollectiveMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Converts moments of sum sigma to moments of J = (1/2) sum sigma.
CollectiveMoments to_half_spin(CollectiveMoments unscaled);

std::string_view to_string(VarianceMethod m) noexcept;
std::string_view to_string(AsymptoticStatus s) noexcept;

} // namespace seqmps
