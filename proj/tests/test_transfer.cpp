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

#include <doctest.h>

#include <cmath>

#include "seqmps/errors.hpp"
#include "seqmps/oracle.hpp"
#include "seqmps/transfer.hpp"
#include "support.hpp"

using namespace seqmps;
using testsupport::kPi;
using testsupport::multiset_distance;

namespace {

const cplx kI{0.0, 1.0};

std::vector<Gate> family_gates() {
    return {
        Gate::from_matrix(CMatrix::identity(4)),
        weyl_gate(0.3, 0.9, -0.4),
        weyl_gate(0.7, kPi / 2, kPi / 2),
        weyl_gate(kPi / 2, 0.4, kPi / 2),
        controlled_rotation(kPi),
        controlled_rotation(kPi - 0.3),
        squeezing_gate(0.5),
        macroscopic_family(0.5, 0.3, 1.1, 7),
        conjugated_gate(weyl_gate(0, kPi / 2, kPi / 2), rotation(0, 0, 1, kPi / 4),
                        rotation(0, 0, 1, kPi / 4)),
        random_gate(42),
    };
}

// Partial trace over the first qubit of U (rho (x) |0><0|) U^dagger.
CMatrix partial_trace_oracle(const CMatrix &u, const CMatrix &rho) {
    CMatrix in(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            in(2 * i, 2 * j) = rho(i, j);
        }
    }
    const CMatrix out = u * in * adjoint(u);
    CMatrix r(2, 2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            r(a, b) = out(a, b) + out(2 + a, 2 + b);
        }
    }
    return r;
}

} // namespace

TEST_CASE("Kraus extraction conventions") {
    const KrausPair id = extract_kraus(Gate::from_matrix(CMatrix::identity(4)));
    CHECK(max_abs_diff(id.v0, CMatrix{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
    CHECK(max_abs_diff(id.v1, CMatrix{{0.0, 0.0}, {1.0, 0.0}}) == 0.0);

    const double a = 0.4, b = -1.2, c = 0.9;
    const auto [x, y, z, w] = weyl_entries(a, b, c);
    const KrausPair k = extract_kraus(weyl_gate(a, b, c));
    CHECK(max_abs_diff(k.v0, CMatrix{{x, 0.0}, {0.0, y}}) < 1e-15);
    CHECK(max_abs_diff(k.v1, CMatrix{{0.0, w}, {z, 0.0}}) < 1e-15);

    const double chi = 0.8;
    const KrausPair s = extract_kraus(squeezing_gate(chi));
    CHECK(max_abs_diff(s.v0, CMatrix{{std::cos(chi), 0.0}, {0.0, 0.0}}) < 1e-15);
    CHECK(max_abs_diff(s.v1, CMatrix{{0.0, -kI * std::sin(chi)}, {1.0, 0.0}}) < 1e-15);
}

TEST_CASE("isometry constraint") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        CHECK(check_isometry(extract_kraus(random_gate(seed))) <= 1e-12);
    }
    KrausPair bad{CMatrix::identity(2), CMatrix::identity(2)};
    CHECK(check_isometry(bad) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("vectorization fixture") {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    const CMatrix v = vec(m);
    CHECK(v(1, 0) == cplx{1.0, 0.0});
    CHECK(v(0, 0) == cplx{});
    CHECK(v(2, 0) == cplx{});
    CHECK(v(3, 0) == cplx{});
    const CMatrix id = vec_identity();
    CHECK(id(0, 0) == cplx{1.0, 0.0});
    CHECK(id(3, 0) == cplx{1.0, 0.0});

    // E vec(sigma) = vec(sum_i V_i* sigma V_i^T).
    const KrausPair k = extract_kraus(random_gate(9));
    const CMatrix sigma = testsupport::random_matrix(2, 2, 4);
    const CMatrix direct =
        conj(k.v0) * sigma * transpose(k.v0) + conj(k.v1) * sigma * transpose(k.v1);
    CHECK(max_abs_diff(transfer_E(k) * vec(sigma), vec(direct)) < 1e-14);
}

TEST_CASE("weyl transfer matrix and its spectrum") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int t = 0; t < 30; ++t) {
        const double a = u(rng), b = u(rng), c = u(rng);
        const auto [x, y, z, w] = weyl_entries(a, b, c);
        const CMatrix want{
            {std::norm(x), 0.0, 0.0, std::norm(w)},
            {0.0, std::conj(x) * y, z * std::conj(w), 0.0},
            {0.0, std::conj(z) * w, x * std::conj(y), 0.0},
            {std::norm(z), 0.0, 0.0, std::norm(y)},
        };
        const CMatrix e = transfer_E(extract_kraus(weyl_gate(a, b, c)));
        CHECK(max_abs_diff(e, want) < 1e-15);
        const double sa = std::sin(a), sb = std::sin(b), sc = std::sin(c);
        const cplx disc = std::sqrt(cplx{sc * sc * (sa + sb) * (sa + sb) - 4 * sa * sb, 0.0});
        const std::vector<cplx> formula{1.0, sa * sb, 0.5 * sc * (sa + sb) + 0.5 * disc,
                                        0.5 * sc * (sa + sb) - 0.5 * disc};
        CHECK(multiset_distance(eigenvalues(e), formula) < 1e-9);
    }
}

TEST_CASE("squeezing transfer spectrum") {
    for (double chi : {0.2, 0.5, 1.1}) {
        const double s = std::sin(chi);
        const CMatrix e = transfer_E(extract_kraus(squeezing_gate(chi)));
        CHECK(multiset_distance(eigenvalues(e), {1.0, s, -s * s, -s}) < 1e-12);
    }
}

TEST_CASE("boundary operator") {
    const CMatrix x0 = boundary_X(InitialState{});
    CMatrix want(4, 4);
    want(0, 0) = 1.0;
    want(3, 0) = 1.0;
    CHECK(max_abs_diff(x0, want) == 0.0);

    const double h = 1.0 / std::sqrt(2.0);
    const CMatrix xp = boundary_X(InitialState::make(h, h));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double v = (i == 0 || i == 3) ? 0.5 : 0.0;
            CHECK(std::abs(xp(i, j) - v) < 1e-15);
        }
    }

    // |I><r| with r_ab = c_a* c_b.
    const InitialState s = InitialState::normalized(cplx{0.3, 0.4}, cplx{-0.2, 0.7});
    const cplx c[2] = {s.c0, s.c1};
    CMatrix r(1, 4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            r(0, 2 * a + b) = std::conj(c[a]) * c[b];
        }
    }
    const CMatrix x = boundary_X(s);
    CHECK(max_abs_diff(x, vec_identity() * r) < 1e-15);
    CHECK(rank(x, 1e-9) == 1);
    CHECK(max_abs_diff(x * vec_identity(), vec_identity()) < 1e-15);
}

TEST_CASE("initial state validation") {
    CHECK_THROWS_AS(InitialState::make(1.0, 1.0), InputError);
    CHECK_THROWS_AS(InitialState::normalized(0.0, 0.0), InputError);
    CHECK_THROWS_AS(ChainSpec::make(1, InitialState{}), InputError);
    CHECK_NOTHROW(InitialState::make(0.6, cplx{0.0, 0.8}));
}

TEST_CASE("dressed operators") {
    const KrausPair k = extract_kraus(random_gate(3));
    const InitialState s = InitialState::normalized(0.6, cplx{0.1, 0.7});
    CHECK(max_abs_diff(dressed_E(k, LocalObservable::identity()), transfer_E(k)) < 1e-15);
    CHECK(max_abs_diff(dressed_X(s, LocalObservable::identity()), boundary_X(s)) < 1e-15);

    const CMatrix a = testsupport::random_matrix(2, 2, 21);
    const CMatrix b = testsupport::random_matrix(2, 2, 22);
    CHECK(max_abs_diff(dressed_E(k, a + b), dressed_E(k, a) + dressed_E(k, b)) < 1e-13);

    // X_A = |vec A><r|.
    const CMatrix xa = dressed_X(s, a);
    const CMatrix x = boundary_X(s);
    CHECK(max_abs_diff(xa, vec(a) * (x.row(0))) < 1e-14);
}

TEST_CASE("dressed transfer of the squeezing gate") {
    const double chi = 0.37;
    const double nx = 0.3, ny = 0.5, nz = std::sqrt(1 - 0.34);
    const cplx x = std::cos(chi), w = -kI * std::sin(chi);
    const CMatrix want{
        {nz * std::norm(x), (nx - kI * ny) * std::conj(x) * w, (nx + kI * ny) * x * std::conj(w),
         -nz * std::norm(w)},
        {(nx - kI * ny) * std::conj(x), 0.0, -nz * std::conj(w), 0.0},
        {(nx + kI * ny) * x, -nz * w, 0.0, 0.0},
        {-nz, 0.0, 0.0, 0.0},
    };
    const CMatrix ej =
        dressed_E(extract_kraus(squeezing_gate(chi)), LocalObservable::from_bloch(nx, ny, nz));
    CHECK(max_abs_diff(ej, want) < 1e-15);
}

TEST_CASE("dressed transfer of a weyl gate on |00>") {
    const double a = 0.6, b = 1.3, c = -0.2;
    const auto [x, y, z, w] = weyl_entries(a, b, c);
    const LocalObservable obs = LocalObservable::from_direction(0.2, -0.5, 0.8);
    const CMatrix &am = obs.matrix();
    const CMatrix ea = dressed_E(extract_kraus(weyl_gate(a, b, c)), obs);
    CMatrix e00(4, 1);
    e00(0, 0) = 1.0;
    const CMatrix out = ea * e00;
    CHECK(std::abs(out(1, 0) - std::conj(x) * z * am(0, 1)) < 1e-15);
    CHECK(std::abs(out(2, 0) - x * std::conj(z) * am(1, 0)) < 1e-15);
}

TEST_CASE("transfer invariants over families and random gates") {
    auto check_gate = [](const Gate &g) {
        const InitialState s = InitialState::normalized(cplx{0.8, 0.1}, cplx{0.3, -0.5});
        const TransferSet ts = TransferSet::build(g, s);
        CHECK(max_abs_diff(ts.E * vec_identity(), vec_identity()) < 1e-12);
        CHECK(max_abs_diff(ts.E * ts.X, ts.X) < 1e-12);
        CHECK(max_abs_diff(ts.X * vec_identity(), vec_identity()) < 1e-12);
        CHECK(check_isometry(ts.kraus) <= 1e-12);
        for (const cplx &l : eigenvalues(ts.E)) {
            CHECK(std::abs(l) <= 1.0 + 1e-10);
        }
    };
    for (const Gate &g : family_gates()) {
        check_gate(g);
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        check_gate(random_gate(seed));
    }
}

TEST_CASE("spectral data") {
    const SpectralData id = spectral(transfer_E(extract_kraus(Gate::from_matrix(CMatrix::identity(4)))));
    CHECK(id.unit_dimension == 1);
    CHECK(id.unit_multiplicity == 1);
    CHECK(multiset_distance(id.eigenvalues, {1.0, 0.0, 0.0, 0.0}) < 1e-12);

    const double alpha = 0.7;
    const SpectralData deg = spectral(transfer_E(extract_kraus(weyl_gate(alpha, kPi / 2, kPi / 2))));
    CHECK(deg.unit_dimension == 2);
    CHECK(deg.unit_multiplicity == 2);
    CHECK_FALSE(deg.jordan_warning);
    CHECK(multiset_distance(deg.eigenvalues, {1.0, 1.0, std::sin(alpha), std::sin(alpha)}) < 1e-9);
    CHECK(max_abs_diff(deg.right_vectors.col(0), vec_identity()) < 1e-15);
    CHECK(std::abs(inner(vec_identity(), deg.right_vectors.col(1))) < 1e-12);
    CHECK(max_abs_diff(deg.left_vectors * deg.right_vectors, CMatrix::identity(4)) < 1e-9);

    const double chi = 0.5;
    const double w2 = std::norm(std::sin(chi));
    const SpectralData sq = spectral(transfer_E(extract_kraus(squeezing_gate(chi))));
    CHECK(sq.unit_dimension == 1);
    const CMatrix l0 = sq.left_vectors.row(0);
    CHECK(std::abs(l0(0, 0) - 1.0 / (1.0 + w2)) < 1e-12);
    CHECK(std::abs(l0(0, 1)) < 1e-12);
    CHECK(std::abs(l0(0, 2)) < 1e-12);
    CHECK(std::abs(l0(0, 3) - w2 / (1.0 + w2)) < 1e-12);
}

TEST_CASE("spectral reconstruction") {
    for (const Gate &g : family_gates()) {
        const CMatrix e = transfer_E(extract_kraus(g));
        const SpectralData sd = spectral(e);
        if (!sd.diagonalizable) {
            continue;
        }
        CMatrix rec(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            rec += sd.eigenvalues[i] * (sd.right_vectors.col(i) * sd.left_vectors.row(i));
        }
        CHECK(max_abs_diff(rec, e) < 1e-9);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const CMatrix e = transfer_E(extract_kraus(random_gate(seed)));
        const SpectralData sd = spectral(e);
        REQUIRE(sd.diagonalizable);
        CHECK(sd.unit_dimension == 1);
        CMatrix rec(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            rec += sd.eigenvalues[i] * (sd.right_vectors.col(i) * sd.left_vectors.row(i));
        }
        CHECK(max_abs_diff(rec, e) < 1e-9);
    }
}

TEST_CASE("site density recursion: partial-trace examples") {
    const KrausPair id = extract_kraus(Gate::from_matrix(CMatrix::identity(4)));
    const CMatrix rho{{0.3, cplx{0.1, 0.2}}, {cplx{0.1, -0.2}, 0.7}};
    CHECK(max_abs_diff(site_density_recursion(id, rho), CMatrix{{1.0, 0.0}, {0.0, 0.0}}) < 1e-15);

    const CMatrix half = CMatrix::identity(2) * cplx{0.5, 0.0};
    CHECK(max_abs_diff(site_density_recursion(extract_kraus(controlled_rotation(kPi)), half),
                       half) < 1e-15);

    for (const Gate &g : family_gates()) {
        const KrausPair k = extract_kraus(g);
        const CMatrix out = site_density_recursion(k, rho);
        CHECK(std::abs(trace(out) - 1.0) < 1e-12);
        CHECK(max_abs_diff(out, partial_trace_oracle(g.matrix(), rho)) < 1e-14);
    }
    CHECK_THROWS_AS(site_density_recursion(id, CMatrix::identity(2)), InputError);
    CHECK_THROWS_AS(site_density_recursion(id, CMatrix{{2.0, 0.0}, {0.0, -1.0}}), InputError);
    CHECK_THROWS_AS(site_density_recursion(id, CMatrix{{0.5, 1.0}, {0.0, 0.5}}), InputError);
}

TEST_CASE("site density recursion follows the sweep prefix") {
    const InitialState s = InitialState::normalized(cplx{0.6, 0.2}, cplx{-0.3, 0.7});
    for (const Gate &g : family_gates()) {
        const KrausPair k = extract_kraus(g);
        for (std::size_t n = 2; n <= 10; ++n) {
            const ChainSpec chain = ChainSpec::make(n, s);
            const CMatrix phi = CMatrix{{s.c0}, {s.c1}};
            CMatrix rho = phi * adjoint(phi);
            for (std::size_t site = 1; site <= n; ++site) {
                const auto state = oracle::sweep_prefix(g, chain, site - 1);
                CHECK(max_abs_diff(rho, oracle::reduced_density(state, site)) < 1e-10);
                if (site < n) {
                    rho = site_density_recursion(k, rho);
                }
            }
        }
    }
}
