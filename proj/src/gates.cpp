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

#include "seqmps/gates.hpp"

#include <array>
#include <cmath>
#include <random>

#include "seqmps/errors.hpp"

namespace seqmps {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_unitary_2x2(const CMatrix &r, const char *name) {
    if (r.rows() != 2 || r.cols() != 2) {
        throw InputError(std::string("conjugated_gate: ") + name + " must be 2x2");
    }
    const double dev = unitarity_deviation(r);
    if (dev > kDefaultUnitarityTolerance) {
        throw InputError(std::string("conjugated_gate: ") + name +
                         " is not unitary (deviation " + std::to_string(dev) + ")");
    }
}

} // namespace

std::string_view to_string(GateFamily f) noexcept {
    switch (f) {
    case GateFamily::weyl:
        return "weyl";
    case GateFamily::controlled_rotation:
        return "controlled_rotation";
    case GateFamily::squeezing:
        return "squeezing";
    case GateFamily::macroscopic_family:
        return "macroscopic_family";
    case GateFamily::conjugated:
        return "conjugated";
    case GateFamily::random:
        return "random";
    case GateFamily::custom:
        return "custom";
    }
    return "custom";
}

GateFamily parse_gate_family(std::string_view tag) {
    for (auto f : {GateFamily::weyl, GateFamily::controlled_rotation, GateFamily::squeezing,
                   GateFamily::macroscopic_family, GateFamily::conjugated, GateFamily::random,
                   GateFamily::custom}) {
        if (tag == to_string(f)) {
            return f;
        }
    }
    throw InputError("unknown gate family '" + std::string(tag) + "'");
}

Gate Gate::from_matrix(CMatrix matrix, GateFamily family, std::vector<double> params,
                       double tol) {
    if (matrix.rows() != 4 || matrix.cols() != 4) {
        throw InputError("gate matrix must be 4x4");
    }
    if (!matrix.all_finite()) {
        throw InputError("gate matrix has non-finite entries");
    }
    const double dev = unitarity_deviation(matrix);
    if (dev > tol) {
        throw InputError("gate matrix is not unitary: max |U^dagger U - I| = " +
                         std::to_string(dev));
    }
    return Gate(std::move(matrix), family, std::move(params));
}

const CMatrix &pauli_x() {
    static const CMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const CMatrix &pauli_y() {
    static const CMatrix m{{0.0, -kI}, {kI, 0.0}};
    return m;
}

const CMatrix &pauli_z() {
    static const CMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

const CMatrix &identity2() {
    static const CMatrix m = CMatrix::identity(2);
    return m;
}

WeylEntries weyl_entries(double alpha, double beta, double gamma) {
    const cplx em = std::exp(-0.5 * kI * gamma);
    const cplx ep = std::exp(0.5 * kI * gamma);
    return {
        em * std::cos(0.5 * (alpha - beta)),
        -kI * ep * std::sin(0.5 * (alpha + beta)),
        ep * std::cos(0.5 * (alpha + beta)),
        -kI * em * std::sin(0.5 * (alpha - beta)),
    };
}

Gate weyl_gate(double alpha, double beta, double gamma) {
    const auto [x, y, z, w] = weyl_entries(alpha, beta, gamma);
    CMatrix u{
        {x, 0.0, 0.0, w},
        {0.0, z, y, 0.0},
        {0.0, y, z, 0.0},
        {w, 0.0, 0.0, x},
    };
    return Gate::from_matrix(std::move(u), GateFamily::weyl, {alpha, beta, gamma});
}

Gate controlled_rotation(double angle) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    CMatrix u = CMatrix::identity(4);
    u(2, 2) = c;
    u(2, 3) = -s;
    u(3, 2) = s;
    u(3, 3) = c;
    return Gate::from_matrix(std::move(u), GateFamily::controlled_rotation, {angle});
}

Gate squeezing_gate(double chi_t) {
    const Gate w = weyl_gate(chi_t, -chi_t, 0.0);
    return Gate::from_matrix(w.matrix(), GateFamily::squeezing, {chi_t});
}

Gate macroscopic_family(double p, double theta, double theta_prime, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("macroscopic_family: p must lie in [0, 1]");
    }
    const double a0 = std::sqrt(1.0 - p);
    const double a1 = std::sqrt(p);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cp = std::cos(theta_prime);
    const double sp = std::sin(theta_prime);
    // Column j0 holds (V_i)_{jk} at row 2i+k.
    CMatrix fixed(4, 2);
    fixed(0, 0) = a0 * c;
    fixed(1, 0) = a0 * kI * s;
    fixed(2, 0) = a1 * cp;
    fixed(3, 0) = a1 * kI * sp;
    fixed(0, 1) = a0 * kI * s;
    fixed(1, 1) = a0 * c;
    fixed(2, 1) = a1 * kI * sp;
    fixed(3, 1) = a1 * cp;

    const CMatrix full = orthonormal_completion(fixed, seed);
    CMatrix u(4, 4);
    u.set_col(0, full.col(0));
    u.set_col(2, full.col(1));
    u.set_col(1, full.col(2));
    u.set_col(3, full.col(3));
    return Gate::from_matrix(std::move(u), GateFamily::macroscopic_family,
                             {p, theta, theta_prime, static_cast<double>(seed)});
}

Gate conjugated_gate(const Gate &g, const CMatrix &r1, const CMatrix &r2) {
    require_unitary_2x2(r1, "r1");
    require_unitary_2x2(r2, "r2");
    const CMatrix left = kron(r1, r2);
    const CMatrix u = left * g.matrix() * adjoint(left);
    return Gate::from_matrix(u, GateFamily::conjugated, g.params());
}

Gate random_gate(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(4, 4);
    for (auto &z : m.entries()) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = cplx{re, im};
    }
    return Gate::from_matrix(orthonormalize_columns(m), GateFamily::random,
                             {static_cast<double>(seed)});
}

CMatrix rotation(double nx, double ny, double nz, double angle) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (norm == 0.0) {
        throw InputError("rotation: zero axis");
    }
    nx /= norm;
    ny /= norm;
    nz /= norm;
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const CMatrix ns = nx * pauli_x() + ny * pauli_y() + nz * pauli_z();
    return c * identity2() - (kI * s) * ns;
}

Gate make_family_gate(GateFamily family, const std::vector<double> &params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            throw InputError("gate family '" + std::string(to_string(family)) + "' expects " +
                             std::to_string(n) + " parameter(s), got " +
                             std::to_string(params.size()));
        }
    };
    auto as_seed = [](double v) {
        if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e15) {
            throw InputError("seed must be a non-negative integer");
        }
        return static_cast<std::uint64_t>(v);
    };
    switch (family) {
    case GateFamily::weyl:
        need(3);
        return weyl_gate(params[0], params[1], params[2]);
    case GateFamily::controlled_rotation:
        need(1);
        return controlled_rotation(params[0]);
    case GateFamily::squeezing:
        need(1);
        return squeezing_gate(params[0]);
    case GateFamily::macroscopic_family:
        need(4);
        return macroscopic_family(params[0], params[1], params[2], as_seed(params[3]));
    case GateFamily::random:
        need(1);
        return random_gate(as_seed(params[0]));
    case GateFamily::conjugated:
    case GateFamily::custom:
        break;
    }
    throw InputError("gate family '" + std::string(to_string(family)) +
                     "' cannot be built from parameters; supply a matrix");
}

} // namespace seqmps
