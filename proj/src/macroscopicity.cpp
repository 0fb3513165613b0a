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


#include "seqmps/macroscopicity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "seqmps/errors.hpp"

namespace seqmps {

namespace {

constexpr std::size_t kLatticePoints = 512;
constexpr double kAngleTolerance = 1e-10;
constexpr std::size_t kMaxSweeps = 500;
constexpr double kImagTolerance = 1e-10;

// Projection onto the unit eigenspace, split into right columns, left rows
// and the boundary pieces that enter every unit-space trace.
struct UnitSpace {
    std::size_t dimension = 1;
    CMatrix right;    // 4 x d
    CMatrix left;     // d x 4
    CMatrix weights;  // 1 x d, <r|s>
    CMatrix identity; // |I>
};

UnitSpace unit_space(const TransferSet &ts, double tol) {
    const SpectralData sd = spectral(ts.E, tol);
    if (sd.jordan_warning) {
        throw NumericalError("unit eigenspace of E is defective (algebraic multiplicity " +
                             std::to_string(sd.unit_multiplicity) + ", geometric " +
                             std::to_string(sd.unit_dimension) + ")");
    }
    UnitSpace u;
    u.dimension = sd.unit_multiplicity;
    u.right = CMatrix(4, u.dimension);
    u.left = CMatrix(u.dimension, 4);
    for (std::size_t s = 0; s < u.dimension; ++s) {
        u.right.set_col(s, sd.right_vectors.col(s));
        u.left.set_row(s, sd.left_vectors.row(s));
    }
    // X = |I><r|, so <r| is the first row of X.
    u.weights = ts.X.row(0) * u.right;
    u.identity = vec_identity();
    return u;
}

// Per-axis pieces <s~|E_k|t> and <s~|E_k|I> for k = x, y, z.
struct AxisPieces {
    std::array<CMatrix, 3> coupling; // d x d
    std::array<CMatrix, 3> source;   // d x 1
};

AxisPieces axis_pieces(const TransferSet &ts, const UnitSpace &u) {
    const CMatrix *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    AxisPieces p;
    for (std::size_t k = 0; k < 3; ++k) {
        const CMatrix ek = dressed_E(ts.kraus, *paulis[k]);
        p.coupling[k] = u.left * ek * u.right;
        p.source[k] = u.left * ek * u.identity;
    }
    return p;
}

// sum_{s,t} <s~|E_A|t><t~|E_A X|s> - (sum_s <s~|E_A X|s>)^2, where
// <t~|E_A X|s> = <t~|E_A|I><r|s>.
double unit_space_neff(const UnitSpace &u, const AxisPieces &p, const Direction &n) {
    if (u.dimension < 2) {
        return 0.0;
    }
    const std::size_t d = u.dimension;
    cplx pair{};
    cplx single{};
    for (std::size_t s = 0; s < d; ++s) {
        const cplx ws = u.weights(0, s);
        cplx src_s{};
        for (std::size_t k = 0; k < 3; ++k) {
            src_s += n[k] * p.source[k](s, 0);
        }
        single += src_s * ws;
        for (std::size_t t = 0; t < d; ++t) {
            cplx b_st{};
            cplx src_t{};
            for (std::size_t k = 0; k < 3; ++k) {
                b_st += n[k] * p.coupling[k](s, t);
                src_t += n[k] * p.source[k](t, 0);
            }
            pair += b_st * src_t * ws;
        }
    }
    const cplx value = pair - single * single;
    if (std::abs(value.imag()) > kImagTolerance * std::max(1.0, std::abs(value.real()))) {
        throw NumericalError("neff: imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

void require_unit(const Direction &n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
        throw InputError("direction must be a unit vector, |n| = " + std::to_string(norm));
    }
}

Direction from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Flips n so that its largest component (first on ties) is positive.
Direction canonical_sign(Direction n) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (std::abs(n[i]) > std::abs(n[k]) + 1e-12) {
            k = i;
        }
    }
    if (n[k] < 0.0) {
        for (double &c : n) {
            c = -c;
        }
    }
    return n;
}

// Maximizer of f on [lo, hi], assuming f is unimodal there.
double golden_max(const std::function<double(double)> &f, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > kAngleTolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double vector_norm(const CMatrix &v) {
    double s = 0.0;
    for (const cplx &z : v.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

std::optional<CommonEigenvector> check_candidate(const KrausPair &k, CMatrix v, double tol) {
    const double norm = vector_norm(v);
    if (norm < 1e-12) {
        return std::nullopt;
    }
    v *= cplx(1.0 / norm);
    const std::size_t lead = std::abs(v(0, 0)) > 1e-12 ? 0 : 1;
    v *= std::conj(v(lead, 0)) / std::abs(v(lead, 0));
    v(lead, 0) = std::abs(v(lead, 0));

    const CMatrix vh = adjoint(v);
    CommonEigenvector c;
    c.mu0 = (vh * k.v0 * v)(0, 0);
    c.mu1 = (vh * k.v1 * v)(0, 0);
    const double res0 = max_abs(k.v0 * v - v * c.mu0);
    const double res1 = max_abs(k.v1 * v - v * c.mu1);
    const double weight = std::norm(c.mu0) + std::norm(c.mu1);
    if (res0 > tol || res1 > tol || std::abs(weight - 1.0) > tol) {
        return std::nullopt;
    }
    const CMatrix *paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    for (std::size_t i = 0; i < 3; ++i) {
        c.bloch[i] = (vh * *paulis[i] * v)(0, 0).real();
    }
    c.vector = std::move(v);
    return c;
}

// Prefers the witness whose Bloch vector has a positive largest component.
bool preferred(const CommonEigenvector &a, const CommonEigenvector &b) {
    const Direction ca = canonical_sign(a.bloch);
    const Direction cb = canonical_sign(b.bloch);
    const bool a_pos = ca == a.bloch;
    const bool b_pos = cb == b.bloch;
    if (a_pos != b_pos) {
        return a_pos;
    }
    return ca > cb;
}

std::optional<CommonEigenvector> find_common_eigenvector(const KrausPair &k, double tol) {
    // Eigenvectors of generic combinations cover the cases where V0 or V1
    // alone is degenerate.
    const std::array<CMatrix, 5> probes = {
        k.v0,
        k.v1,
        k.v0 + k.v1 * cplx(0.5377, 0.0),
        k.v0 + k.v1 * cplx(-1.8339, 0.0),
        k.v0 + k.v1 * cplx(0.0, 2.2588),
    };
    std::vector<CommonEigenvector> found;
    for (const CMatrix &m : probes) {
        const EigenResult er = eig_general(m);
        for (std::size_t j = 0; j < er.right_vectors.cols(); ++j) {
            auto c = check_candidate(k, er.right_vectors.col(j), tol);
            if (!c) {
                continue;
            }
            const bool duplicate = std::any_of(found.begin(), found.end(), [&](const auto &f) {
                return std::abs(inner(f.vector, c->vector)) > 1.0 - 1e-8;
            });
            if (!duplicate) {
                found.push_back(std::move(*c));
            }
        }
    }
    if (found.empty()) {
        return std::nullopt;
    }
    return *std::min_element(found.begin(), found.end(), preferred);
}

} // namespace

double neff(const TransferSet &ts, const Direction &n, double tol) {
    require_unit(n);
    const UnitSpace u = unit_space(ts, tol);
    return unit_space_neff(u, axis_pieces(ts, u), n);
}

double neff(const Gate &g, const InitialState &s, const Direction &n, double tol) {
    return neff(TransferSet::build(g, s), n, tol);
}

std::vector<Direction> fibonacci_sphere(std::size_t count) {
    if (count == 0) {
        throw InputError("fibonacci_sphere needs at least one point");
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Direction> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return pts;
}

MacroReport neff_optimize(const Gate &g, const InitialState &s, double tol) {
    const TransferSet ts = TransferSet::build(g, s);
    const UnitSpace u = unit_space(ts, tol);
    MacroReport report;
    report.unit_dimension = spectral(ts.E, tol).unit_dimension;
    report.witness = find_common_eigenvector(ts.kraus, 1e-8);
    if (u.dimension < 2) {
        return report;
    }
    const AxisPieces pieces = axis_pieces(ts, u);
    const auto value = [&](double theta, double phi) {
        return unit_space_neff(u, pieces, from_angles(theta, phi));
    };

    Direction best = {0.0, 0.0, 1.0};
    double best_value = -1.0;
    for (const Direction &p : fibonacci_sphere(kLatticePoints)) {
        const double v = unit_space_neff(u, pieces, p);
        if (v > best_value) {
            best_value = v;
            best = p;
        }
    }

    double theta = std::acos(std::clamp(best[2], -1.0, 1.0));
    double phi = std::atan2(best[1], best[0]);
    // Brackets wide enough to cover the lattice spacing.
    const double half_width = 0.3;
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double t_new =
            golden_max([&](double t) { return value(t, phi); }, theta - half_width,
                       theta + half_width);
        const double phi_width = std::min(std::numbers::pi, half_width / std::max(std::sin(t_new), 1e-3));
        const double p_new = golden_max([&](double p) { return value(t_new, p); },
                                        phi - phi_width, phi + phi_width);
        const double step = std::max(std::abs(t_new - theta), std::abs(p_new - phi) * std::sin(t_new));
        const double candidate = value(t_new, p_new);
        if (candidate >= best_value) {
            best_value = candidate;
            theta = t_new;
            phi = p_new;
        }
        if (step < kAngleTolerance) {
            break;
        }
    }
    report.best_direction = canonical_sign(from_angles(theta, phi));
    report.neff_coeff = std::max(0.0, best_value);
    return report;
}

MacroClassification classify_macroscopic(const Gate &g, double tol) {
    if (!(tol > 0.0)) {
        throw InputError("classification tolerance must be positive");
    }
    const KrausPair k = extract_kraus(g);
    MacroClassification out;
    out.witness = find_common_eigenvector(k, tol);
    out.is_macroscopic = out.witness.has_value();
    out.commutator_norm = max_abs(k.v0 * k.v1 - k.v1 * k.v0);
    out.unit_dimension = spectral(transfer_E(k), tol).unit_dimension;
    const bool spectral_verdict = out.unit_dimension >= 2;
    if (spectral_verdict != out.is_macroscopic) {
        std::ostringstream msg;
        msg << "structural and spectral macroscopicity tests disagree at tol " << tol
            << ": common eigenvector " << (out.is_macroscopic ? "found" : "absent")
            << ", unit eigenspace dimension " << out.unit_dimension << ", commutator norm "
            << out.commutator_norm;
        throw NumericalError(msg.str());
    }
    return out;
}

std::vector<SweepRow> variance_sweep(const Gate &g, const InitialState &s,
                                     const LocalObservable &a,
                                     const std::vector<std::size_t> &n_list,
                                     VarianceMethod method) {
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw InputError("chain lengths must be strictly ascending");
        }
    }
    const TransferSet ts = TransferSet::build(g, s);
    std::vector<SweepRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t n : n_list) {
        SweepRow row;
        row.n_sites = n;
        row.variance = additive_variance_exact(ts, a, n, method).total;
        if (!rows.empty() && row.variance > 0.0 && rows.back().variance > 0.0) {
            row.slope = std::log(row.variance / rows.back().variance) /
                        std::log(static_cast<double>(n) / static_cast<double>(rows.back().n_sites));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace seqmps
