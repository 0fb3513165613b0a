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

#include "seqmps/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqmps/errors.hpp"

namespace seqmps {

namespace {

double checked_real(cplx z, const char *what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw NumericalError(std::string(what) + ": non-finite result");
    }
    if (std::abs(z.imag()) > kImagResidueTolerance * std::max(1.0, std::abs(z.real()))) {
        throw NumericalError(std::string(what) + ": imaginary residue " +
                             std::to_string(z.imag()) + " exceeds tolerance");
    }
    return z.real();
}

void check_chain(std::size_t n_sites) {
    if (n_sites < 2) {
        throw InputError("chain length must be at least 2");
    }
}

void check_site(std::size_t m, std::size_t n_sites) {
    if (m < 1 || m > n_sites) {
        throw InputError("site index " + std::to_string(m) + " outside 1.." +
                         std::to_string(n_sites));
    }
}

// x^k with 0^0 = 1.
cplx ipow(cplx x, std::uint64_t k) {
    cplx result{1.0, 0.0};
    while (k > 0) {
        if (k & 1U) {
            result *= x;
        }
        x *= x;
        k >>= 1U;
    }
    return result;
}

// <r| as a row: r_ab = c_a* c_b.
CMatrix boundary_row(const InitialState &s) {
    const cplx c[2] = {s.c0, s.c1};
    CMatrix r(1, 4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            r(0, 2 * a + b) = std::conj(c[a]) * c[b];
        }
    }
    return r;
}

cplx scalar(const CMatrix &m) { return m(0, 0); }

struct SweepMoments {
    cplx mean;
    cplx diagonal;
    cplx pairs;
};

SweepMoments sweep_moments(const TransferSet &ts, const LocalObservable &a, std::size_t n_sites,
                           bool want_pairs) {
    const CMatrix ea = dressed_E(ts.kraus, a);
    const CMatrix a2 = a.squared();
    const CMatrix ea2 = dressed_E(ts.kraus, a2);
    const CMatrix id = vec_identity();
    const CMatrix ea_id = ea * id;
    const CMatrix ea2_id = ea2 * id;
    const CMatrix va = vec(a.matrix());
    const CMatrix va2 = vec(a2);

    CMatrix left = boundary_row(ts.initial);
    CMatrix pending(1, 4);
    SweepMoments out{};
    for (std::size_t n = 1; n <= n_sites; ++n) {
        const bool last = n == n_sites;
        const CMatrix &tail = last ? va : ea_id;
        out.mean += scalar(left * tail);
        out.diagonal += scalar(left * (last ? va2 : ea2_id));
        if (want_pairs) {
            out.pairs += scalar(pending * tail);
            if (!last) {
                pending = pending * ts.E + left * ea;
            }
        }
        if (!last) {
            left = left * ts.E;
        }
    }
    return out;
}

SweepMoments naive_moments(const TransferSet &ts, const LocalObservable &a,
                           std::size_t n_sites) {
    SweepMoments out{};
    const LocalObservable a2 = LocalObservable::from_matrix(a.squared());
    for (std::size_t m = 1; m <= n_sites; ++m) {
        out.mean += one_point(ts, a, m, n_sites);
        out.diagonal += one_point(ts, a2, m, n_sites);
        for (std::size_t n = m + 1; n <= n_sites; ++n) {
            out.pairs += two_point(ts, a, m, n, n_sites);
        }
    }
    return out;
}

SweepMoments spectral_moments(const TransferSet &ts, const LocalObservable &a,
                              std::size_t n_sites) {
    const SpectralData sd = spectral(ts.E);
    if (!sd.diagonalizable || sd.jordan_warning) {
        throw NumericalError("spectral variance needs a diagonalizable transfer matrix");
    }
    const CMatrix ea = dressed_E(ts.kraus, a);
    const CMatrix a2 = a.squared();
    const CMatrix ea2 = dressed_E(ts.kraus, a2);
    const CMatrix id = vec_identity();
    const CMatrix ea_id = ea * id;
    const CMatrix ea2_id = ea2 * id;
    const CMatrix va = vec(a.matrix());
    const CMatrix va2 = vec(a2);
    const CMatrix r = boundary_row(ts.initial);
    const std::uint64_t n = n_sites;

    const std::size_t dim = sd.eigenvalues.size();
    std::vector<cplx> rr(dim), l_ea(dim), l_a(dim), l_ea2(dim), l_a2(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const CMatrix lk = sd.left_vectors.row(k);
        rr[k] = scalar(r * sd.right_vectors.col(k));
        l_ea[k] = scalar(lk * ea_id);
        l_a[k] = scalar(lk * va);
        l_ea2[k] = scalar(lk * ea2_id);
        l_a2[k] = scalar(lk * va2);
    }
    const CMatrix m = sd.left_vectors * ea * sd.right_vectors;

    SweepMoments out{};
    for (std::size_t i = 0; i < dim; ++i) {
        const cplx li = sd.eigenvalues[i];
        const cplx g = geometric_sum(li, n - 1);
        const cplx p = ipow(li, n - 1);
        out.mean += rr[i] * (l_ea[i] * g + p * l_a[i]);
        out.diagonal += rr[i] * (l_ea2[i] * g + p * l_a2[i]);
        for (std::size_t j = 0; j < dim; ++j) {
            const cplx lj = sd.eigenvalues[j];
            const cplx w = rr[i] * m(i, j);
            if (w == cplx{}) {
                continue;
            }
            out.pairs += w * (l_ea[j] * geometric_sum_f(li, lj, n) +
                              l_a[j] * homogeneous_sum(li, lj, n - 2));
        }
    }
    return out;
}

} // namespace

std::string_view to_string(VarianceMethod m) noexcept {
    switch (m) {
    case VarianceMethod::sweep:
        return "sweep";
    case VarianceMethod::naive:
        return "naive";
    case VarianceMethod::spectral:
        return "spectral";
    }
    return "sweep";
}

std::string_view to_string(AsymptoticStatus s) noexcept {
    switch (s) {
    case AsymptoticStatus::ok:
        return "ok";
    case AsymptoticStatus::defective:
        return "defective";
    case AsymptoticStatus::peripheral:
        return "peripheral";
    }
    return "ok";
}

double one_point(const TransferSet &ts, const LocalObservable &a, std::size_t m,
                 std::size_t n_sites) {
    check_chain(n_sites);
    check_site(m, n_sites);
    if (m < n_sites) {
        const CMatrix prod = matpow(ts.E, m - 1) * dressed_E(ts.kraus, a) * ts.X;
        return checked_real(trace(prod), "one_point");
    }
    const CMatrix prod = matpow(ts.E, n_sites - 1) * dressed_X(ts.initial, a);
    return checked_real(trace(prod), "one_point");
}

double two_point(const TransferSet &ts, const LocalObservable &a, std::size_t m, std::size_t n,
                 std::size_t n_sites) {
    check_chain(n_sites);
    check_site(m, n_sites);
    check_site(n, n_sites);
    if (m >= n) {
        throw InputError("two_point needs m < n");
    }
    const CMatrix ea = dressed_E(ts.kraus, a);
    const CMatrix head = matpow(ts.E, m - 1) * ea;
    if (n < n_sites) {
        const CMatrix prod = head * matpow(ts.E, n - m - 1) * ea * ts.X;
        return checked_real(trace(prod), "two_point");
    }
    const CMatrix prod = head * matpow(ts.E, n_sites - m - 1) * dressed_X(ts.initial, a);
    return checked_real(trace(prod), "two_point");
}

double additive_mean(const TransferSet &ts, const LocalObservable &a, std::size_t n_sites) {
    check_chain(n_sites);
    return checked_real(sweep_moments(ts, a, n_sites, false).mean, "additive_mean");
}

VarianceBreakdown additive_variance_exact(const TransferSet &ts, const LocalObservable &a,
                                          std::size_t n_sites, VarianceMethod method) {
    check_chain(n_sites);
    a.require_hermitian();
    SweepMoments mom{};
    switch (method) {
    case VarianceMethod::sweep:
        mom = sweep_moments(ts, a, n_sites, true);
        break;
    case VarianceMethod::naive:
        mom = naive_moments(ts, a, n_sites);
        break;
    case VarianceMethod::spectral:
        mom = spectral_moments(ts, a, n_sites);
        break;
    }
    VarianceBreakdown out;
    out.mean = checked_real(mom.mean, "additive_variance mean");
    const double diagonal = checked_real(mom.diagonal, "additive_variance diagonal");
    const double pairs = checked_real(mom.pairs, "additive_variance pairs");
    out.total = diagonal + 2.0 * pairs - out.mean * out.mean;

    AsymptoticVariance asym;
    try {
        asym = asymptotic_variance(ts, a);
    } catch (const NumericalError &) {
        asym.status = AsymptoticStatus::defective;
    }
    const double nn = static_cast<double>(n_sites);
    out.quadratic_available = asym.quadratic_available();
    out.linear_available = asym.linear_available();
    out.quadratic_coeff = out.quadratic_available ? asym.quadratic_coeff : 0.0;
    out.linear_coeff = out.linear_available ? asym.linear_coeff : 0.0;
    out.boundary_remainder = out.total - out.quadratic_coeff * nn * nn - out.linear_coeff * nn;
    return out;
}

namespace {

// Below this separation the closed forms lose digits to cancellation, so
// moderate N sums the series term by term; the closed forms and their
// analytic limits take over for longer chains.
constexpr double kCancellationRadius = 1e-3;
constexpr std::uint64_t kDirectSumLimit = 1000000;

bool use_direct(double separation, std::uint64_t terms) {
    return separation < kCancellationRadius && terms <= kDirectSumLimit;
}

cplx direct_homogeneous(cplx x, cplx y, std::uint64_t k) {
    // h_{s+1} = x h_s + y^{s+1}
    cplx h{1.0, 0.0};
    cplx py{1.0, 0.0};
    for (std::uint64_t s = 0; s < k; ++s) {
        py *= y;
        h = x * h + py;
    }
    return h;
}

cplx direct_f(cplx x, cplx y, std::uint64_t n_sites) {
    cplx h{1.0, 0.0};
    cplx py{1.0, 0.0};
    cplx total = h;
    for (std::uint64_t s = 1; s + 3 <= n_sites; ++s) {
        py *= y;
        h = x * h + py;
        total += h;
    }
    return total;
}

} // namespace

cplx homogeneous_sum(cplx x, cplx y, std::uint64_t k) {
    const double sep = std::abs(x - y);
    if (use_direct(sep, k)) {
        return direct_homogeneous(x, y, k);
    }
    if (sep < kGeometricBranchThreshold) {
        const cplx mid = 0.5 * (x + y);
        return static_cast<double>(k + 1) * ipow(mid, k);
    }
    return (ipow(x, k + 1) - ipow(y, k + 1)) / (x - y);
}

cplx geometric_sum(cplx x, std::uint64_t count) {
    const double sep = std::abs(1.0 - x);
    if (use_direct(sep, count)) {
        cplx total{};
        cplx p{1.0, 0.0};
        for (std::uint64_t k = 0; k < count; ++k) {
            total += p;
            p *= x;
        }
        return total;
    }
    if (sep < kGeometricBranchThreshold) {
        return static_cast<double>(count);
    }
    return (1.0 - ipow(x, count)) / (1.0 - x);
}

cplx geometric_sum_f(cplx li, cplx lj, std::uint64_t n_sites) {
    if (n_sites < 3) {
        return 0.0;
    }
    const double sep_i = std::abs(1.0 - li);
    const double sep_j = std::abs(1.0 - lj);
    const double sep_ij = std::abs(li - lj);
    if (use_direct(std::min({sep_i, sep_j, sep_ij}), n_sites)) {
        return direct_f(li, lj, n_sites);
    }
    const double n = static_cast<double>(n_sites);
    const bool i_unit = sep_i < kGeometricBranchThreshold;
    const bool j_unit = sep_j < kGeometricBranchThreshold;
    if (i_unit && j_unit) {
        return 0.5 * (n - 1.0) * (n - 2.0);
    }
    if (i_unit || j_unit) {
        const cplx l = i_unit ? lj : li;
        const cplx d = 1.0 - l;
        return (n - 2.0) / d - l * (1.0 - ipow(l, n_sites - 2)) / (d * d);
    }
    if (sep_ij < kGeometricBranchThreshold) {
        const cplx l = 0.5 * (li + lj);
        const cplx d = 1.0 - l;
        return (1.0 - (n - 1.0) * ipow(l, n_sites - 2) + (n - 2.0) * ipow(l, n_sites - 1)) /
               (d * d);
    }
    const cplx num = (li - lj) - ipow(li, n_sites - 1) * (1.0 - lj) +
                     (1.0 - li) * ipow(lj, n_sites - 1);
    return num / ((li - lj) * (1.0 - li) * (1.0 - lj));
}

AsymptoticVariance asymptotic_variance(const TransferSet &ts, const LocalObservable &a,
                                       double tol) {
    a.require_hermitian();
    AsymptoticVariance out;
    const SpectralData sd = spectral(ts.E, tol);
    if (!sd.diagonalizable || sd.jordan_warning) {
        out.status = AsymptoticStatus::defective;
        out.diagnostic = "transfer matrix is not diagonalizable; only exact sums are available";
        return out;
    }
    const std::size_t dim = sd.eigenvalues.size();
    CMatrix proj(dim, dim);
    CMatrix reduced(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const CMatrix outer = sd.right_vectors.col(k) * sd.left_vectors.row(k);
        if (sd.is_unit(k)) {
            proj += outer;
            continue;
        }
        const cplx l = sd.eigenvalues[k];
        if (std::abs(l) > 1.0 - tol) {
            out.status = AsymptoticStatus::peripheral;
            out.diagnostic = "non-unit eigenvalue on the unit circle";
            continue;
        }
        reduced += outer * (1.0 / (1.0 - l));
    }

    const CMatrix ea = dressed_E(ts.kraus, a);
    const CMatrix ea2 = dressed_E(ts.kraus, a.squared());
    const CMatrix id = vec_identity();
    const CMatrix va = vec(a.matrix());
    const CMatrix r = boundary_row(ts.initial);
    const CMatrix rp = r * proj;
    const CMatrix ea_id = ea * id;
    const CMatrix pea_id = proj * ea_id;

    const double mean = checked_real(scalar(rp * ea_id), "asymptotic mean");
    const double second = checked_real(scalar(rp * ea * pea_id), "asymptotic second moment");
    out.mean_coeff = mean;
    out.quadratic_coeff = second - mean * mean;
    if (out.status != AsymptoticStatus::ok) {
        return out;
    }

    const cplx c_m = -mean + scalar(r * reduced * ea_id) + scalar(rp * va);
    out.mean_offset = checked_real(c_m, "asymptotic mean offset");
    const cplx lin = scalar(rp * ea2 * id) - 3.0 * second +
                     2.0 * scalar(rp * ea * reduced * ea_id) +
                     2.0 * scalar(r * reduced * ea * pea_id) + 2.0 * scalar(rp * ea * proj * va) -
                     2.0 * mean * c_m;
    out.linear_coeff = checked_real(lin, "asymptotic linear coefficient");
    return out;
}

CollectiveMoments to_half_spin(CollectiveMoments unscaled) {
    return {0.5 * unscaled.mean, 0.25 * unscaled.variance};
}

} // namespace seqmps
