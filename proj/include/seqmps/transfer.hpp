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
 * @file transfer.hpp
 * Kraus extraction and the 4x4 transfer, boundary and dressed operators of
 * the bond-dimension-2 matrix product state generated by one gate sweep.
 *
 * Vectorization: vec(|i><j|) = |i,j> with composite index 2i+j, so
 * vec(identity) = |00> + |11>.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "seqmps/densemat.hpp"
#include "seqmps/gates.hpp"

namespace seqmps {

/// (V_i)_{jk} = U_{(i k),(j 0)}.
struct KrausPair {
    CMatrix v0;
    CMatrix v1;

    [[nodiscard]] const CMatrix &operator[](std::size_t i) const { return i == 0 ? v0 : v1; }
};

/// Amplitudes of the first-site state c0|0> + c1|1>.
struct InitialState {
    cplx c0{1.0, 0.0};
    cplx c1{0.0, 0.0};

    /// Validates |c0|^2 + |c1|^2 = 1 within tol.
    static InitialState make(cplx c0, cplx c1, double tol = 1e-12);
    /// Scales (c0, c1) to unit norm; rejects the zero vector.
    static InitialState normalized(cplx c0, cplx c1);
};

struct ChainSpec {
    std::size_t length = 2;
    InitialState first;

    /// Validates length >= 2.
    static ChainSpec make(std::size_t length, InitialState first);
};

/// A 2x2 single-site observable, optionally of the form n.sigma.
class LocalObservable {
  public:
    /// n.sigma for a unit vector n (|n| = 1 within 1e-12).
    static LocalObservable from_bloch(double nx, double ny, double nz);
    /// Like from_bloch but rescales n to unit length first.
    static LocalObservable from_direction(double nx, double ny, double nz);
    /// Arbitrary 2x2 matrix. Hermiticity is checked where it matters.
    static LocalObservable from_matrix(CMatrix m);
    static LocalObservable sigma_x() { return from_bloch(1, 0, 0); }
    static LocalObservable sigma_y() { return from_bloch(0, 1, 0); }
    static LocalObservable sigma_z() { return from_bloch(0, 0, 1); }
    static LocalObservable identity() { return from_matrix(CMatrix::identity(2)); }

    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const std::optional<std::array<double, 3>> &bloch() const noexcept {
        return bloch_;
    }
    /// A*A, exactly the identity for bloch-form observables.
    [[nodiscard]] CMatrix squared() const;
    /// Throws InputError unless the matrix is Hermitian within tol.
    void require_hermitian(double tol = 1e-12) const;

  private:
    explicit LocalObservable(CMatrix m, std::optional<std::array<double, 3>> n = std::nullopt)
        : matrix_(std::move(m)), bloch_(n) {}

    CMatrix matrix_;
    std::optional<std::array<double, 3>> bloch_;
};

KrausPair extract_kraus(const Gate &g);

/// max |V0* V0^T + V1* V1^T - I|.
double check_isometry(const KrausPair &k);

/// E = V0* (x) V0 + V1* (x) V1.
CMatrix transfer_E(const KrausPair &k);

/// X = sum_i W_i* (x) W_i with W_i = |i><phi*| and <phi*| = c0<0| + c1<1|
/// taken literally (no conjugation). Equals |I><r| with r_{ab} = c_a* c_b.
CMatrix boundary_X(const InitialState &s);

/// E_A = sum_ij <i|A|j> V_i* (x) V_j.
CMatrix dressed_E(const KrausPair &k, const CMatrix &a);
CMatrix dressed_E(const KrausPair &k, const LocalObservable &a);

/// X_A = sum_ij <i|A|j> W_i* (x) W_j.
CMatrix dressed_X(const InitialState &s, const CMatrix &a);
CMatrix dressed_X(const InitialState &s, const LocalObservable &a);

/// vec(m) for a 2x2 matrix as a 4x1 column, index 2i+j.
CMatrix vec(const CMatrix &m);
/// vec(identity) = |00> + |11>.
CMatrix vec_identity();

struct TransferSet {
    KrausPair kraus;
    InitialState initial;
    CMatrix E;
    CMatrix X;

    static TransferSet build(const Gate &g, const InitialState &s);
};

struct SpectralData {
    /// Unit eigenvalues first, then the remaining ones in eig_general order.
    std::vector<cplx> eigenvalues;
    /// Columns. For the unit space, column 0 is |I> and any further unit
    /// vectors are orthogonal to it.
    CMatrix right_vectors;
    /// Rows, biorthonormal to the right vectors (l_i . r_j = delta_ij).
    CMatrix left_vectors;
    /// Number of eigenvalues with |lambda - 1| < tol.
    std::size_t unit_multiplicity = 0;
    /// 4 - rank(E - I, tol): the dimension of the unit eigenspace.
    std::size_t unit_dimension = 0;
    /// Set when the algebraic and geometric unit multiplicities differ.
    bool jordan_warning = false;
    /// False if some eigenvalue lacks a full set of eigenvectors.
    bool diagonalizable = true;
    double residual = 0.0;
    double tolerance = kDefaultEigenTolerance;

    [[nodiscard]] bool is_unit(std::size_t i) const { return i < unit_multiplicity; }
};

SpectralData spectral(const CMatrix &e, double tol = kDefaultEigenTolerance);

/// rho_n = sum_i V_i^T rho V_i*, the reduced state of the next site. Rejects
/// inputs that are not density matrices within 1e-10.
CMatrix site_density_recursion(const KrausPair &k, const CMatrix &rho);

} // namespace seqmps
