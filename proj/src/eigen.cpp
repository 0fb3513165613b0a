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

// Spectral kernels for small dense matrices: one-sided Jacobi SVD, cyclic
// Jacobi for Hermitian matrices, and shifted QR for general ones.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "seqmps/densemat.hpp"
#include "seqmps/errors.hpp"

namespace seqmps {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxGeneralDim = 8;

} // namespace

SvdResult svd(const CMatrix &m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows < cols) {
        throw InputError("svd: expects rows >= cols");
    }
    CMatrix w = m;
    CMatrix v = CMatrix::identity(cols);

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                cplx gamma{};
                for (std::size_t i = 0; i < rows; ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                // Absorb the phase of gamma into column q, then do a real
                // Jacobi rotation on the pair.
                const cplx phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const cplx wp = w(i, p);
                    const cplx wq = w(i, q) * phase;
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const cplx vp = v(i, p);
                    const cplx vq = v(i, q) * phase;
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            s += std::norm(w(i, j));
        }
        sigma[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

    SvdResult out;
    out.singular_values.resize(cols);
    out.u = CMatrix(rows, cols);
    out.v = CMatrix(cols, cols);
    for (std::size_t k = 0; k < cols; ++k) {
        const std::size_t j = order[k];
        out.singular_values[k] = sigma[j];
        for (std::size_t i = 0; i < cols; ++i) {
            out.v(i, k) = v(i, j);
        }
        if (sigma[j] > 0.0) {
            for (std::size_t i = 0; i < rows; ++i) {
                out.u(i, k) = w(i, j) / sigma[j];
            }
        }
    }
    return out;
}

std::size_t rank(const CMatrix &m, double tol) {
    const SvdResult s = m.rows() >= m.cols() ? svd(m) : svd(adjoint(m));
    return static_cast<std::size_t>(std::count_if(s.singular_values.begin(),
                                                  s.singular_values.end(),
                                                  [tol](double x) { return x > tol; }));
}

CMatrix null_space(const CMatrix &m, double tol) {
    if (!m.is_square()) {
        throw InputError("null_space: matrix must be square");
    }
    const SvdResult s = svd(m);
    const std::size_t n = m.cols();
    std::size_t dim = 0;
    for (double x : s.singular_values) {
        if (x <= tol) {
            ++dim;
        }
    }
    CMatrix basis(n, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        basis.set_col(k, s.v.col(n - dim + k));
    }
    return basis;
}

HermitianEigen eig_hermitian(const CMatrix &m) {
    if (!m.is_square()) {
        throw InputError("eig_hermitian: matrix must be square");
    }
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    if (hermiticity_deviation(m) > 1e-10 * scale) {
        throw InputError("eig_hermitian: matrix is not Hermitian");
    }
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += std::norm(a(i, j));
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > kEps * scale * 1e-2; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double b = std::abs(a(p, q));
                if (b < 1e-300) {
                    continue;
                }
                // a(p,q) = b e^{i phi}; R = diag(1, e^{-i phi}) * G with a real
                // rotation G diagonalizing [[a_pp, b], [b, a_qq]].
                const cplx phase = a(p, q) / b; // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                // Columns p, q of R: R(p,p) = c, R(q,p) = -s e^{-i phi},
                // R(p,q) = s, R(q,q) = c e^{-i phi}.
                const cplx rpp = c;
                const cplx rqp = -s * std::conj(phase);
                const cplx rpq = s;
                const cplx rqq = c * std::conj(phase);
                // a <- a R
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = aip * rpp + aiq * rqp;
                    a(i, q) = aip * rpq + aiq * rqq;
                }
                // a <- R^dagger a
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j);
                    const cplx aqj = a(q, j);
                    a(p, j) = std::conj(rpp) * apj + std::conj(rqp) * aqj;
                    a(q, j) = std::conj(rpq) * apj + std::conj(rqq) * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = vip * rpp + viq * rqp;
                    v(i, q) = vip * rpq + viq * rqq;
                }
            }
        }
    }
    if (off_norm() > 1e-12 * scale) {
        throw NumericalError("eig_hermitian: Jacobi iteration did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        out.vectors.set_col(k, v.col(order[k]));
    }
    return out;
}

namespace {

void to_hessenberg(CMatrix &a) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            xnorm += std::norm(a(i, k));
        }
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) {
            continue;
        }
        const cplx x0 = a(k + 1, k);
        const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx{1.0};
        const cplx alpha = -phase * xnorm;
        std::vector<cplx> v(n, cplx{});
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k);
        }
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm += std::norm(v[i]);
        }
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) {
            continue;
        }
        for (auto &z : v) {
            z /= vnorm;
        }
        // a <- (I - 2 v v^H) a
        for (std::size_t j = 0; j < n; ++j) {
            cplx s{};
            for (std::size_t i = k + 1; i < n; ++i) {
                s += std::conj(v[i]) * a(i, j);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                a(i, j) -= 2.0 * v[i] * s;
            }
        }
        // a <- a (I - 2 v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            cplx s{};
            for (std::size_t j = k + 1; j < n; ++j) {
                s += a(i, j) * v[j];
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= 2.0 * s * std::conj(v[j]);
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
        }
    }
}

cplx wilkinson_shift(const CMatrix &a, std::size_t hi) {
    const cplx p = a(hi - 1, hi - 1);
    const cplx q = a(hi - 1, hi);
    const cplx r = a(hi, hi - 1);
    const cplx s = a(hi, hi);
    const cplx half_tr = 0.5 * (p + s);
    const cplx disc = std::sqrt(0.25 * (p - s) * (p - s) + q * r);
    const cplx l1 = half_tr + disc;
    const cplx l2 = half_tr - disc;
    return std::abs(l1 - s) < std::abs(l2 - s) ? l1 : l2;
}

// One shifted QR step restricted to the active block [lo, hi].
void qr_step(CMatrix &a, std::size_t lo, std::size_t hi, cplx mu) {
    for (std::size_t k = lo; k <= hi; ++k) {
        a(k, k) -= mu;
    }
    struct Givens {
        double c;
        cplx s;
    };
    std::vector<Givens> rots;
    rots.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
        const cplx x = a(k, k);
        const cplx y = a(k + 1, k);
        const double r = std::hypot(std::abs(x), std::abs(y));
        Givens g{1.0, cplx{}};
        if (r > 0.0) {
            if (std::abs(x) == 0.0) {
                g = {0.0, cplx{1.0}};
            } else {
                g = {std::abs(x) / r, (x / std::abs(x)) * std::conj(y) / r};
            }
        }
        for (std::size_t j = k; j <= hi; ++j) {
            const cplx u = a(k, j);
            const cplx w = a(k + 1, j);
            a(k, j) = g.c * u + g.s * w;
            a(k + 1, j) = -std::conj(g.s) * u + g.c * w;
        }
        a(k + 1, k) = 0.0;
        rots.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) {
        const Givens &g = rots[k - lo];
        const std::size_t last = std::min(k + 2, hi);
        for (std::size_t i = lo; i <= last; ++i) {
            const cplx u = a(i, k);
            const cplx w = a(i, k + 1);
            a(i, k) = g.c * u + std::conj(g.s) * w;
            a(i, k + 1) = -g.s * u + g.c * w;
        }
    }
    for (std::size_t k = lo; k <= hi; ++k) {
        a(k, k) += mu;
    }
}

std::vector<cplx> qr_eigenvalues(const CMatrix &m) {
    const std::size_t n = m.rows();
    std::vector<cplx> eig;
    eig.reserve(n);
    if (n == 0) {
        return eig;
    }
    CMatrix a = m;
    to_hessenberg(a);
    const double norm = std::max(frobenius_norm(a), 1e-300);

    std::size_t hi = n - 1;
    int iter = 0;
    while (true) {
        if (hi == 0) {
            eig.push_back(a(0, 0));
            break;
        }
        std::size_t lo = hi;
        while (lo > 0) {
            double s = std::abs(a(lo - 1, lo - 1)) + std::abs(a(lo, lo));
            if (s == 0.0) {
                s = norm;
            }
            if (std::abs(a(lo, lo - 1)) <= kEps * s) {
                a(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig.push_back(a(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > 100 * static_cast<int>(n)) {
            throw NumericalError("eig_general: QR iteration did not converge");
        }
        cplx mu;
        if (iter % 11 == 0) {
            // Exceptional shift to break cycles.
            mu = a(hi, hi) + 0.75 * std::abs(a(hi, hi - 1));
        } else {
            mu = wilkinson_shift(a, hi);
        }
        qr_step(a, lo, hi, mu);
    }
    return eig;
}

auto sort_key(cplx z) {
    auto q = [](double x) { return std::llround(x * 1e10); };
    return std::make_tuple(q(std::abs(z)), q(z.real()), q(z.imag()));
}

void sort_eigenvalues(std::vector<cplx> &ev) {
    std::stable_sort(ev.begin(), ev.end(),
                     [](cplx a, cplx b) { return sort_key(a) > sort_key(b); });
}

} // namespace

std::vector<cplx> eigenvalues(const CMatrix &m) {
    if (!m.is_square()) {
        throw InputError("eigenvalues: matrix must be square");
    }
    if (m.rows() > kMaxGeneralDim) {
        throw InputError("eigenvalues: dimension above 8 is not supported");
    }
    auto ev = qr_eigenvalues(m);
    sort_eigenvalues(ev);
    return ev;
}

EigenResult eig_general(const CMatrix &m, double tol) {
    auto ev = eigenvalues(m);
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    const double null_tol = tol * scale;

    // Group eigenvalues closer than 1e-8 (relative); clusters are collected in
    // order of first appearance so the output ordering is preserved.
    std::vector<std::size_t> cluster_of(n, n);
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        if (cluster_of[i] != n) {
            continue;
        }
        cluster_of[i] = clusters.size();
        clusters.push_back({i});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cluster_of[j] == n &&
                std::abs(ev[j] - ev[i]) < 1e-8 * std::max(1.0, std::abs(ev[i]))) {
                cluster_of[j] = cluster_of[i];
                clusters.back().push_back(j);
            }
        }
    }
    // Keep members of a cluster adjacent in the output.
    std::vector<cplx> ordered;
    ordered.reserve(n);
    for (const auto &c : clusters) {
        for (std::size_t i : c) {
            ordered.push_back(ev[i]);
        }
    }

    EigenResult out;
    out.eigenvalues = ordered;
    out.right_vectors = CMatrix(n, n);
    out.left_vectors = CMatrix(n, n);
    out.geometric_multiplicity.assign(n, 0);

    std::size_t pos = 0;
    for (const auto &c : clusters) {
        const std::size_t k = c.size();
        cplx mean{};
        for (std::size_t i : c) {
            mean += ev[i];
        }
        mean /= static_cast<double>(k);
        const CMatrix shifted = m - mean * CMatrix::identity(n);

        const SvdResult rs = svd(shifted);
        const SvdResult ls = svd(adjoint(shifted));
        std::size_t g = 0;
        for (double s : rs.singular_values) {
            if (s <= null_tol) {
                ++g;
            }
        }
        g = std::clamp<std::size_t>(g, 1, k);
        if (g < k) {
            out.complete_basis = false;
        }

        CMatrix r(n, g);
        CMatrix l(g, n);
        for (std::size_t t = 0; t < g; ++t) {
            r.set_col(t, rs.v.col(n - g + t));
            l.set_row(t, adjoint(ls.v.col(n - g + t)));
        }
        // Biorthonormalize: replace l by (l r)^{-1} l.
        const CMatrix gram = l * r;
        bool ok = true;
        CMatrix l_bi;
        try {
            l_bi = inverse(gram) * l;
        } catch (const NumericalError &) {
            ok = false;
        }
        if (!ok || !l_bi.all_finite() || max_abs(l_bi) > 1e12) {
            // Left and right spaces nearly orthogonal: a Jordan structure.
            out.complete_basis = false;
            l_bi = l;
        }
        for (std::size_t t = 0; t < g; ++t) {
            out.right_vectors.set_col(pos + t, r.col(t));
            out.left_vectors.set_row(pos + t, l_bi.row(t));
        }
        for (std::size_t t = 0; t < k; ++t) {
            out.geometric_multiplicity[pos + t] = g;
        }
        for (std::size_t t = 0; t < g; ++t) {
            const CMatrix v = out.right_vectors.col(pos + t);
            const double res = frobenius_norm(m * v - out.eigenvalues[pos + t] * v);
            out.residual = std::max(out.residual, res);
        }
        pos += k;
    }

    if (out.complete_basis && out.residual > tol * scale) {
        throw NumericalError("eig_general: eigenvector residual " +
                             std::to_string(out.residual) + " exceeds tolerance");
    }
    return out;
}

} // namespace seqmps
