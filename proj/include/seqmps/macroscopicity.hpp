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
 * @file macroscopicity.hpp
 * Effective size of the swept chain state, the structural test for a
 * degenerate unit eigenvalue, and finite-N variance sweeps.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqmps/correlators.hpp"
#include "seqmps/densemat.hpp"
#include "seqmps/gates.hpp"
#include "seqmps/transfer.hpp"

namespace seqmps {

using Direction = std::array<double, 3>;

/// A common eigenvector |n> of the Kraus pair, V_i |n> = mu_i |n>.
struct CommonEigenvector {
    /// 2x1 column, unit norm, first nonzero entry real and positive.
    CMatrix vector;
    cplx mu0;
    cplx mu1;
    /// <n|sigma|n>.
    Direction bloch{};
};

struct MacroReport {
    /// Dimension of the unit eigenspace of E; values above 2 are reported
    /// as found.
    std::size_t unit_dimension = 1;
    /// Coefficient of N in N_eff, i.e. of N^2 in the variance of n.sigma.
    double neff_coeff = 0.0;
    /// Maximizing unit Bloch vector, sign fixed so that its largest
    /// component is positive.
    Direction best_direction{0.0, 0.0, 1.0};
    std::optional<CommonEigenvector> witness;
};

/// Coefficient of N^2 in the variance of sum_m n.sigma_m, from the unit
/// eigenspace of E alone. Zero when the unit eigenvalue is simple. Throws
/// NumericalError when the unit eigenspace is defective.
double neff(const TransferSet &ts, const Direction &n, double tol = kDefaultEigenTolerance);
double neff(const Gate &g, const InitialState &s, const Direction &n,
            double tol = kDefaultEigenTolerance);

/// Maximizes neff over unit vectors: a 512-point Fibonacci lattice followed
/// by coordinate descent with golden-section line searches.
MacroReport neff_optimize(const Gate &g, const InitialState &s,
                          double tol = kDefaultEigenTolerance);

struct MacroClassification {
    bool is_macroscopic = false;
    std::optional<CommonEigenvector> witness;
    std::size_t unit_dimension = 1;
    /// ||V0 V1 - V1 V0||_max, for diagnostics.
    double commutator_norm = 0.0;
};

/// Searches for a common eigenvector of V0 and V1 with |mu0|^2 + |mu1|^2 = 1
/// and checks the verdict against the unit eigenspace dimension of E.
/// Throws NumericalError when the two tests disagree at tol.
MacroClassification classify_macroscopic(const Gate &g, double tol = 1e-8);

struct SweepRow {
    std::size_t n_sites = 0;
    double variance = 0.0;
    /// d log(variance) / d log(N) against the previous row.
    std::optional<double> slope;
};

/// Exact variances of sum_m A_m for an ascending list of chain lengths.
std::vector<SweepRow> variance_sweep(const Gate &g, const InitialState &s,
                                     const LocalObservable &a,
                                     const std::vector<std::size_t> &n_list,
                                     VarianceMethod method = VarianceMethod::sweep);

/// count points spread evenly over the unit sphere.
std::vector<Direction> fibonacci_sphere(std::size_t count);

} // namespace seqmps
