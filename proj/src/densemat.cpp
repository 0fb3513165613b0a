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

#include "seqmps/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "seqmps/errors.hpp"

namespace seqmps {

namespace {

std::string shape(const CMatrix &m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError(std::string(op) + ": shape mismatch " + shape(a) + " vs " +
                         shape(b));
    }
}

void require_square(const CMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw InputError(std::string(op) + ": matrix must be square, got " + shape(m));
    }
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw InputError("CMatrix: expected " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(data_.size()));
    }
    if (!all_finite()) {
        throw InputError("CMatrix: non-finite entry");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw InputError("CMatrix: ragged initializer list");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
    if (!all_finite()) {
        throw InputError("CMatrix: non-finite entry");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::column(std::span<const cplx> entries) {
    return {entries.size(), 1, std::vector<cplx>(entries.begin(), entries.end())};
}

CMatrix CMatrix::col(std::size_t j) const {
    CMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        c(i, 0) = (*this)(i, j);
    }
    return c;
}

CMatrix CMatrix::row(std::size_t i) const {
    CMatrix r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        r(0, j) = (*this)(i, j);
    }
    return r;
}

void CMatrix::set_col(std::size_t j, const CMatrix &v) {
    if (v.size() != rows_) {
        throw InputError("set_col: length mismatch");
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = v.entries()[i];
    }
}

void CMatrix::set_row(std::size_t i, const CMatrix &v) {
    if (v.size() != cols_) {
        throw InputError("set_row: length mismatch");
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(i, j) = v.entries()[j];
    }
}

bool CMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const cplx &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) noexcept {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(const CMatrix &a, const CMatrix &b) { return matmul(a, b); }

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("matmul: inner dimension mismatch " + shape(a) + " * " + shape(b));
    }
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return c;
}

CMatrix adjoint(const CMatrix &m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            t(j, i) = std::conj(m(i, j));
        }
    }
    return t;
}

CMatrix transpose(const CMatrix &m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            t(j, i) = m(i, j);
        }
    }
    return t;
}

CMatrix conj(const CMatrix &m) {
    CMatrix c = m;
    for (auto &z : c.entries()) {
        z = std::conj(z);
    }
    return c;
}

cplx trace(const CMatrix &m) {
    require_square(m, "trace");
    cplx t{};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

CMatrix matpow(const CMatrix &m, std::uint64_t k) {
    require_square(m, "matpow");
    CMatrix result = CMatrix::identity(m.rows());
    CMatrix base = m;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

double max_abs(const CMatrix &m) {
    double best = 0.0;
    for (const auto &z : m.entries()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return best;
}

double frobenius_norm(const CMatrix &m) {
    double s = 0.0;
    for (const auto &z : m.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double unitarity_deviation(const CMatrix &u) {
    require_square(u, "unitarity_deviation");
    return max_abs_diff(adjoint(u) * u, CMatrix::identity(u.rows()));
}

double hermiticity_deviation(const CMatrix &m) {
    require_square(m, "hermiticity_deviation");
    return max_abs_diff(m, adjoint(m));
}

cplx inner(const CMatrix &a, const CMatrix &b) {
    if (a.size() != b.size()) {
        throw InputError("inner: length mismatch");
    }
    cplx s{};
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::conj(a.entries()[k]) * b.entries()[k];
    }
    return s;
}

CMatrix inverse(const CMatrix &m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    CMatrix a = m;
    CMatrix inv = CMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(a(pivot, col)) < 1e-300) {
            throw NumericalError("inverse: matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const cplx p = 1.0 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            const cplx f = a(r, col);
            if (f == cplx{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Projects column j of q against columns [0, j) and normalizes it. Returns the
// norm left after projection.
double mgs_column(CMatrix &q, std::size_t j) {
    const std::size_t n = q.rows();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj{};
            for (std::size_t i = 0; i < n; ++i) {
                proj += std::conj(q(i, k)) * q(i, j);
            }
            for (std::size_t i = 0; i < n; ++i) {
                q(i, j) -= proj * q(i, k);
            }
        }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        nrm += std::norm(q(i, j));
    }
    nrm = std::sqrt(nrm);
    if (nrm > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            q(i, j) /= nrm;
        }
    }
    return nrm;
}

} // namespace

CMatrix orthonormalize_columns(const CMatrix &m) {
    CMatrix q = m;
    for (std::size_t j = 0; j < q.cols(); ++j) {
        if (mgs_column(q, j) < 1e-10) {
            throw NumericalError("orthonormalize_columns: columns are linearly dependent");
        }
    }
    return q;
}

CMatrix orthonormal_completion(const CMatrix &partial, std::uint64_t seed) {
    const std::size_t n = partial.rows();
    const std::size_t k = partial.cols();
    if (k > n) {
        throw InputError("orthonormal_completion: more columns than rows");
    }
    if (max_abs_diff(adjoint(partial) * partial, CMatrix::identity(k)) > 1e-10) {
        throw InputError("orthonormal_completion: input columns are not orthonormal");
    }
    CMatrix q(n, n);
    for (std::size_t j = 0; j < k; ++j) {
        q.set_col(j, partial.col(j));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t j = k; j < n; ++j) {
        // A Gaussian draw is almost surely independent of the existing
        // columns; retry on the measure-zero failure.
        for (int attempt = 0;; ++attempt) {
            for (std::size_t i = 0; i < n; ++i) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                q(i, j) = cplx{re, im};
            }
            if (mgs_column(q, j) > 1e-6) {
                break;
            }
            if (attempt > 16) {
                throw NumericalError("orthonormal_completion: failed to draw independent vector");
            }
        }
    }
    return q;
}

std::vector<cplx> characteristic_polynomial(const CMatrix &m) {
    require_square(m, "characteristic_polynomial");
    const std::size_t n = m.rows();
    std::vector<cplx> c(n + 1);
    c[n] = 1.0;
    CMatrix mk(n, n);
    const CMatrix id = CMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        c[n - k] = -trace(m * mk) / static_cast<double>(k);
    }
    return c;
}

cplx polyval(std::span<const cplx> coeffs, cplx x) {
    cplx acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

} // namespace seqmps
