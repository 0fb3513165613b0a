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
 * @file gates.hpp
 * Two-qubit gates applied along the chain.
 *
 * Basis order is |00>, |01>, |10>, |11> with the first tensor factor being
 * the left (earlier, control) qubit of the pair.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqmps/densemat.hpp"

namespace seqmps {

enum class GateFamily {
    weyl,
    controlled_rotation,
    squeezing,
    macroscopic_family,
    conjugated,
    random,
    custom,
};

std::string_view to_string(GateFamily f) noexcept;
/// Parses a family tag; throws InputError on unknown tags.
GateFamily parse_gate_family(std::string_view tag);

/// A validated two-qubit unitary.
class Gate {
  public:
    /// Wraps a 4x4 matrix after checking U^dagger U = I within tol.
    static Gate from_matrix(CMatrix matrix, GateFamily family = GateFamily::custom,
                            std::vector<double> params = {},
                            double tol = kDefaultUnitarityTolerance);

    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] GateFamily family() const noexcept { return family_; }
    [[nodiscard]] const std::vector<double> &params() const noexcept { return params_; }

  private:
    Gate(CMatrix m, GateFamily f, std::vector<double> p)
        : matrix_(std::move(m)), family_(f), params_(std::move(p)) {}

    CMatrix matrix_;
    GateFamily family_ = GateFamily::custom;
    std::vector<double> params_;
};

/// The four nonzero entries of exp(-i/2 (a XX + b YY + c ZZ)).
struct WeylEntries {
    cplx x, y, z, w;
};

WeylEntries weyl_entries(double alpha, double beta, double gamma);

/// exp(-i/2 (alpha XX + beta YY + gamma ZZ)) with matrix
/// [[x,0,0,w],[0,z,y,0],[0,y,z,0],[w,0,0,x]].
Gate weyl_gate(double alpha, double beta, double gamma);

/// |0><0| (x) I + |1><1| (x) R(a), R(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]].
Gate controlled_rotation(double angle);

/// exp(-i chi_t/2 (XX - YY)), i.e. weyl_gate(chi_t, -chi_t, 0).
Gate squeezing_gate(double chi_t);

/// Gate whose Kraus pair is (sqrt(1-p) w, sqrt(p) w') with w, w' rotations
/// [[cos t, i sin t], [i sin t, cos t]] about x by theta and theta_prime.
/// Columns 0 and 2 are fixed by the Kraus pair; columns 1 and 3 are a seeded
/// orthonormal completion.
Gate macroscopic_family(double p, double theta, double theta_prime, std::uint64_t seed);

/// (r1 (x) r2) g (r1^dagger (x) r2^dagger). r1, r2 must be 2x2 unitaries.
Gate conjugated_gate(const Gate &g, const CMatrix &r1, const CMatrix &r2);

/// Seeded Haar-like unitary: modified Gram-Schmidt of a complex Gaussian 4x4.
Gate random_gate(std::uint64_t seed);

/// Rotation exp(-i angle/2 n.sigma) about a unit axis.
CMatrix rotation(double nx, double ny, double nz, double angle);

/// Builds a gate from a family tag and parameter list, as used by the gate
/// file format and the command line. Parameter counts: weyl 3,
/// controlled_rotation 1, squeezing 1, macroscopic_family 4 (p, theta,
/// theta', seed), random 1 (seed). Throws InputError otherwise.
Gate make_family_gate(GateFamily family, const std::vector<double> &params);

/// Pauli matrices and the 2x2 identity.
const CMatrix &pauli_x();
const CMatrix &pauli_y();
const CMatrix &pauli_z();
const CMatrix &identity2();

} // namespace seqmps
