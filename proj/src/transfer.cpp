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

#include "seqmps/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqmps/errors.hpp"

namespace seqmps {

InitialState InitialState::make(cplx c0, cplx c1, double tol) {
    if (!std::isfinite(std::abs(c0)) || !std::isfinite(std::abs(c1))) {
        throw InputError("initial amplitudes must be finite");
    }
    const double norm2 = std::norm(c0) + std::norm(c1);
    if (std::abs(norm2 - 1.0) > tol) {
        throw InputError("initial amplitudes are not normalized: |c0|^2 + |c1|^2 = " +
                         std::to_string(norm2));
    }
    return {c0, c1};
}

InitialState InitialState::normalized(cplx c0, cplx c1) {
    const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InputError("initial amplitudes must be finite and not both zero");
    }
    return {c0 / norm, c1 / norm};
}

ChainSpec ChainSpec::make(std::size_t length, InitialState first) {
    if (length < 2) {
        throw InputError("chain length must be at least 2");
    }
    return {length, first};
}

LocalObservable LocalObservable::from_bloch(double nx, double ny, double nz) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
        throw InputError("Bloch vector must have unit length");
    }
    CMatrix m = nx * pauli_x() + ny * pauli_y() + nz * pauli_z();
    return LocalObservable(std::move(m), std::array<double, 3>{nx, ny, nz});
}

LocalObservable LocalObservable::from_direction(double nx, double ny, double nz) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InputError("observable direction must be finite and nonzero");
    }
    nx /= norm;
    ny /= norm;
    nz /= norm;
    CMatrix m = nx * pauli_x() + ny * pauli_y() + nz * pauli_z();
    return LocalObservable(std::move(m), std::array<double, 3>{nx, ny, nz});
}

LocalObservable LocalObservable::from_matrix(CMatrix m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw InputError("local observable must be 2x2");
    }
    return LocalObservable(std::move(m));
}

CMatrix LocalObservable::squared() const {
    if (bloch_) {
        return CMatrix::identity(2);
    }
    return matrix_ * matrix_;
}

void LocalObservable::require_hermitian(double tol) const {
    const double dev = hermiticity_deviation(matrix_);
    if (dev > tol) {
        throw InputError("observable is not Hermitian: max |A - A^dagger| = " +
                         std::to_string(dev));
    }
}

KrausPair extract_kraus(const Gate &g) {
    const CMatrix &u = g.matrix();
    KrausPair k{CMatrix(2, 2), CMatrix(2, 2)};
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t kk = 0; kk < 2; ++kk) {
            k.v0(j, kk) = u(kk, 2 * j);
            k.v1(j, kk) = u(2 + kk, 2 * j);
        }
    }
    return k;
}

double check_isometry(const KrausPair &k) {
    const CMatrix s = conj(k.v0) * transpose(k.v0) + conj(k.v1) * transpose(k.v1);
    return max_abs_diff(s, CMatrix::identity(2));
}

CMatrix transfer_E(const KrausPair &k) {
    return kron(conj(k.v0), k.v0) + kron(conj(k.v1), k.v1);
}

CMatrix vec(const CMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw InputError("vec expects a 2x2 matrix");
    }
    CMatrix v(4, 1);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            v(2 * i + j, 0) = m(i, j);
        }
    }
    return v;
}

CMatrix vec_identity() { return vec(CMatrix::identity(2)); }

namespace {

// W_i = |i><phi*| as a 2x2 matrix: row i holds (c0, c1).
CMatrix boundary_w(const InitialState &s, std::size_t i) {
    CMatrix w(2, 2);
    w(i, 0) = s.c0;
    w(i, 1) = s.c1;
    return w;
}

} // namespace

CMatrix boundary_X(const InitialState &s) {
    return dressed_X(s, CMatrix::identity(2));
}

CMatrix dressed_E(const KrausPair &k, const CMatrix &a) {
    if (a.rows() != 2 || a.cols() != 2) {
        throw InputError("dressed_E expects a 2x2 observable");
    }
    CMatrix e(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (a(i, j) != cplx{}) {
                e += a(i, j) * kron(conj(k[i]), k[j]);
            }
        }
    }
    return e;
}

CMatrix dressed_E(const KrausPair &k, const LocalObservable &a) {
    return dressed_E(k, a.matrix());
}

CMatrix dressed_X(const InitialState &s, const CMatrix &a) {
    if (a.rows() != 2 || a.cols() != 2) {
        throw InputError("dressed_X expects a 2x2 observable");
    }
    CMatrix x(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (a(i, j) != cplx{}) {
                x += a(i, j) * kron(conj(boundary_w(s, i)), boundary_w(s, j));
            }
        }
    }
    return x;
}

CMatrix dressed_X(const InitialState &s, const LocalObservable &a) {
    return dressed_X(s, a.matrix());
}

TransferSet TransferSet::build(const Gate &g, const InitialState &s) {
    KrausPair k = extract_kraus(g);
    CMatrix e = transfer_E(k);
    CMatrix x = boundary_X(s);
    return {std::move(k), s, std::move(e), std::move(x)};
}

SpectralData spectral(const CMatrix &e, double tol) {
    if (e.rows() != 4 || e.cols() != 4) {
        throw InputError("spectral expects a 4x4 transfer matrix");
    }
    const EigenResult eig = eig_general(e, tol);
    const std::size_t n = eig.eigenvalues.size();

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(eig.eigenvalues[i] - 1.0) < tol) {
            order.push_back(i);
        }
    }
    const std::size_t unit_count = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(eig.eigenvalues[i] - 1.0) >= tol) {
            order.push_back(i);
        }
    }

    SpectralData out;
    out.tolerance = tol;
    out.unit_multiplicity = unit_count;
    out.unit_dimension = n - rank(e - CMatrix::identity(n), tol);
    out.jordan_warning = out.unit_dimension != unit_count;
    out.diagonalizable = eig.complete_basis;
    out.residual = eig.residual;
    out.right_vectors = CMatrix(n, n);
    out.left_vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues.push_back(eig.eigenvalues[order[k]]);
        out.right_vectors.set_col(k, eig.right_vectors.col(order[k]));
        out.left_vectors.set_row(k, eig.left_vectors.row(order[k]));
    }
    if (unit_count == 0 || out.jordan_warning) {
        return out;
    }

    // Rebuild the unit block: |I> first, the rest orthogonal to it, and the
    // matching left vectors biorthonormalized within the block.
    const CMatrix id = vec_identity();
    const CMatrix id_hat = id * cplx{1.0 / std::sqrt(2.0), 0.0};
    const CMatrix right_space = null_space(e - CMatrix::identity(n), tol);
    const CMatrix left_space = null_space(adjoint(e) - CMatrix::identity(n), tol);
    if (right_space.cols() != unit_count || left_space.cols() != unit_count) {
        out.jordan_warning = true;
        return out;
    }
    CMatrix rblock(n, unit_count);
    rblock.set_col(0, id);
    if (unit_count > 1) {
        const CMatrix projected = right_space - id_hat * (adjoint(id_hat) * right_space);
        const SvdResult s = svd(projected);
        for (std::size_t k = 1; k < unit_count; ++k) {
            rblock.set_col(k, s.u.col(k - 1));
        }
    }
    const CMatrix lblock = adjoint(left_space);
    const CMatrix lbio = inverse(lblock * rblock) * lblock;
    for (std::size_t k = 0; k < unit_count; ++k) {
        out.right_vectors.set_col(k, rblock.col(k));
        out.left_vectors.set_row(k, lbio.row(k));
    }
    return out;
}

CMatrix site_density_recursion(const KrausPair &k, const CMatrix &rho) {
    constexpr double tol = 1e-10;
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw InputError("density matrix must be 2x2");
    }
    if (!rho.all_finite() || hermiticity_deviation(rho) > tol) {
        throw InputError("density matrix must be Hermitian");
    }
    if (std::abs(trace(rho) - 1.0) > tol) {
        throw InputError("density matrix must have unit trace");
    }
    if (eig_hermitian(rho).eigenvalues.front() < -tol) {
        throw InputError("density matrix must be positive semidefinite");
    }
    return transpose(k.v0) * rho * conj(k.v0) + transpose(k.v1) * rho * conj(k.v1);
}

} // namespace seqmps
