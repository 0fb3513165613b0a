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
 * @file densemat.hpp
 * Small dense complex matrices and the handful of linear-algebra kernels the
 * rest of the library needs: products, Kronecker products, powers, ranks,
 * Hermitian and general eigen-decompositions, SVD.
 *
 * Everything here targets matrices of dimension <= 8. Algorithms are chosen
 * for determinism and accuracy at that size, not for asymptotic speed.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace seqmps {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    /// Zero-filled rows x cols matrix.
    CMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; rejects size mismatch or
    /// non-finite values.
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// n x 1 column from a list of entries.
    static CMatrix column(std::span<const cplx> entries);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    cplx &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    [[nodiscard]] std::span<const cplx> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<cplx> entries() noexcept { return data_; }

    /// Copy of column j as an n x 1 matrix.
    [[nodiscard]] CMatrix col(std::size_t j) const;
    /// Copy of row i as a 1 x n matrix.
    [[nodiscard]] CMatrix row(std::size_t i) const;
    void set_col(std::size_t j, const CMatrix &v);
    void set_row(std::size_t i, const CMatrix &v);

    /// True when every entry is finite.
    [[nodiscard]] bool all_finite() const noexcept;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(cplx s) noexcept;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(CMatrix a, cplx s);
CMatrix operator*(cplx s, CMatrix a);
/// Matrix product; same as matmul.
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix matmul(const CMatrix &a, const CMatrix &b);

/// Kronecker product. Entry ((i,k),(j,l)) = a(i,j) * b(k,l) with composite
/// row index i * b.rows() + k.
CMatrix kron(const CMatrix &a, const CMatrix &b);

CMatrix adjoint(const CMatrix &m);
CMatrix transpose(const CMatrix &m);
CMatrix conj(const CMatrix &m);
cplx trace(const CMatrix &m);

/// m^k by repeated squaring; m^0 is the identity.
CMatrix matpow(const CMatrix &m, std::uint64_t k);

/// Largest |entry|.
double max_abs(const CMatrix &m);
/// Largest |a(i,j) - b(i,j)|; shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
double frobenius_norm(const CMatrix &m);
/// max |U^dagger U - I|.
double unitarity_deviation(const CMatrix &u);
/// max |M - M^dagger|.
double hermiticity_deviation(const CMatrix &m);

/// <a|b> for column (or row) vectors of equal length, conjugating a.
cplx inner(const CMatrix &a, const CMatrix &b);

/// Inverse by Gauss-Jordan with partial pivoting. Throws NumericalError when
/// a pivot falls below 1e-300 in magnitude.
CMatrix inverse(const CMatrix &m);

struct SvdResult {
    std::vector<double> singular_values; ///< descending
    CMatrix u;                           ///< columns: left singular vectors
    CMatrix v;                           ///< columns: right singular vectors
};

/// Thin SVD of a square or tall matrix by one-sided (Hestenes) Jacobi.
/// Accurate for small singular values, which is what rank decisions need.
SvdResult svd(const CMatrix &m);

/// Number of singular values strictly above tol.
std::size_t rank(const CMatrix &m, double tol);

/// Orthonormal basis (as columns) of the numerical null space {x : m x = 0},
/// taking singular values <= tol as zero.
CMatrix null_space(const CMatrix &m, double tol);

/// Completes a matrix with orthonormal columns to a square unitary. New
/// columns come from seeded complex Gaussian vectors orthogonalized by
/// modified Gram-Schmidt (two passes), so the result is deterministic per
/// seed.
CMatrix orthonormal_completion(const CMatrix &partial, std::uint64_t seed);

/// Orthonormalizes the columns of a square matrix (modified Gram-Schmidt,
/// two passes). Throws NumericalError on rank deficiency.
CMatrix orthonormalize_columns(const CMatrix &m);

struct HermitianEigen {
    std::vector<double> eigenvalues; ///< ascending
    CMatrix vectors;                 ///< columns, orthonormal
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
HermitianEigen eig_hermitian(const CMatrix &m);

/// Coefficients c[0..n] of det(lambda I - m) = sum_k c[k] lambda^k via
/// Faddeev-LeVerrier. c[n] == 1.
std::vector<cplx> characteristic_polynomial(const CMatrix &m);

/// Horner evaluation of sum_k c[k] x^k.
cplx polyval(std::span<const cplx> coeffs, cplx x);

struct EigenResult {
    /// Sorted by descending modulus, ties broken by descending real part then
    /// descending imaginary part (keys rounded to 1e-10).
    std::vector<cplx> eigenvalues;
    /// Column i is the right eigenvector for eigenvalues[i], unit 2-norm.
    CMatrix right_vectors;
    /// Row i is the left eigenvector, scaled so that left_i * right_i == 1.
    CMatrix left_vectors;
    /// Geometric multiplicity of the cluster each eigenvalue belongs to.
    std::vector<std::size_t> geometric_multiplicity;
    /// max_i ||M r_i - lambda_i r_i|| over the vectors that were found.
    double residual = 0.0;
    /// False when some eigenvalue cluster has fewer independent eigenvectors
    /// than its algebraic multiplicity; the missing columns/rows are zero.
    bool complete_basis = true;
};

inline constexpr double kDefaultEigenTolerance = 1e-9;
inline constexpr double kDefaultUnitarityTolerance = 1e-12;

/// Eigen-decomposition of a general square complex matrix (dimension <= 8).
///
/// Eigenvalues come from a shifted complex QR iteration on the Hessenberg
/// form. Eigenvalues closer than 1e-8 (relative) are grouped; each group's
/// eigenvectors are the numerical null space of (M - mean I), so semisimple
/// repeated eigenvalues get a full orthonormal basis and defective ones are
/// reported through complete_basis == false.
///
/// Throws NumericalError if the QR iteration does not converge, or if a full
/// basis was found but its residual exceeds tol.
EigenResult eig_general(const CMatrix &m, double tol = kDefaultEigenTolerance);

/// Eigenvalues only (same ordering as eig_general).
std::vector<cplx> eigenvalues(const CMatrix &m);

} // namespace seqmps
