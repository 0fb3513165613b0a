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
 * @file oracle.hpp
 * Brute-force state-vector simulation of the gate sweep. Used as ground
 * truth for the transfer-matrix results at small N.
 *
 * Site 1 is the most significant bit of the amplitude index.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "seqmps/densemat.hpp"
#include "seqmps/gates.hpp"
#include "seqmps/transfer.hpp"

namespace seqmps::oracle {

inline constexpr std::size_t kDefaultMaxSites = 16;

class StateVector {
  public:
    /// |phi> (x) |0>^(N-1).
    static StateVector initial(const ChainSpec &chain, std::size_t max_sites = kDefaultMaxSites);

    [[nodiscard]] std::size_t sites() const noexcept { return sites_; }
    [[nodiscard]] const std::vector<cplx> &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] double norm() const;

    /// Applies a 4x4 gate to sites (m, m+1), 1-based, first factor on m.
    void apply_pair(const CMatrix &u, std::size_t m);

  private:
    StateVector(std::size_t n, std::vector<cplx> a) : sites_(n), amps_(std::move(a)) {}

    std::size_t sites_ = 0;
    std::vector<cplx> amps_;
};

/// Bytes needed for an N-site state vector.
std::size_t memory_estimate(std::size_t sites);

/// Applies the gate to (1,2), (2,3), ..., (N-1,N) in that order.
StateVector sweep(const Gate &g, const ChainSpec &chain,
                  std::size_t max_sites = kDefaultMaxSites);

/// Applies only the first `pairs` gates of the sweep.
StateVector sweep_prefix(const Gate &g, const ChainSpec &chain, std::size_t pairs,
                         std::size_t max_sites = kDefaultMaxSites);

/// Re <A_m>, 1-based site. Throws NumericalError if the imaginary part of a
/// Hermitian expectation exceeds 1e-10.
double expect_local(const StateVector &s, const CMatrix &a, std::size_t m);
/// Re <A_m A_n> for m != n.
double expect_pair(const StateVector &s, const CMatrix &a, std::size_t m, std::size_t n);
/// <sum_m A_m>.
double collective_mean(const StateVector &s, const CMatrix &a);
/// <(sum_m A_m)^2> - <sum_m A_m>^2 computed from the full state.
double collective_variance(const StateVector &s, const CMatrix &a);
/// Reduced 2x2 density matrix of site m.
CMatrix reduced_density(const StateVector &s, std::size_t m);

} // namespace seqmps::oracle
