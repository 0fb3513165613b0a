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
#include "seqmps/gates.hpp"
#include "support.hpp"

using namespace seqmps;
using testsupport::kPi;
using testsupport::pauli;

namespace {

CMatrix weyl_oracle(double a, double b, double c) {
    const CMatrix h = a * kron(pauli(1), pauli(1)) + b * kron(pauli(2), pauli(2)) +
                      c * kron(pauli(3), pauli(3));
    return testsupport::expm(h * cplx{0.0, -0.5});
}

} // namespace

TEST_CASE("weyl gate special values") {
    CHECK(max_abs_diff(weyl_gate(0, 0, 0).matrix(), CMatrix::identity(4)) < 1e-15);
    const auto e = weyl_entries(kPi / 2, kPi / 2, kPi / 2);
    const cplx i{0.0, 1.0};
    CHECK(std::abs(e.x - std::exp(-i * kPi / 4.0)) < 1e-15);
    CHECK(std::abs(e.y - (-i * std::exp(i * kPi / 4.0))) < 1e-15);
    CHECK(std::abs(e.z) < 1e-15);
    CHECK(std::abs(e.w) < 1e-15);
}

TEST_CASE("weyl gate matches the matrix exponential") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int t = 0; t < 40; ++t) {
        const double a = u(rng), b = u(rng), c = u(rng);
        const Gate g = weyl_gate(a, b, c);
        CHECK(max_abs_diff(g.matrix(), weyl_oracle(a, b, c)) < 1e-12);
        const CMatrix &m = g.matrix();
        for (auto [r, col] : {std::pair{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1},
                              {3, 2}}) {
            CHECK(std::abs(m(r, col)) < 1e-14);
        }
    }
}

TEST_CASE("controlled rotation") {
    CHECK(max_abs_diff(controlled_rotation(0).matrix(), CMatrix::identity(4)) < 1e-15);
    const CMatrix m = controlled_rotation(kPi).matrix();
    CHECK(std::abs(m(2, 2)) < 1e-15);
    CHECK(std::abs(m(2, 3) + 1.0) < 1e-15);
    CHECK(std::abs(m(3, 2) - 1.0) < 1e-15);
    CHECK(std::abs(m(3, 3)) < 1e-15);
    const CMatrix h = controlled_rotation(kPi / 2).matrix();
    CHECK(std::abs(h(2, 2) - std::cos(kPi / 4)) < 1e-15);
    CHECK(std::abs(h(2, 3) + std::sin(kPi / 4)) < 1e-15);
    CHECK(std::abs(h(3, 2) - std::sin(kPi / 4)) < 1e-15);
}

TEST_CASE("squeezing gate") {
    CHECK(max_abs_diff(squeezing_gate(0).matrix(), CMatrix::identity(4)) < 1e-15);
    const CMatrix m = squeezing_gate(kPi / 4).matrix();
    CHECK(std::abs(m(0, 0) - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(m(1, 2)) < 1e-15);
    CHECK(std::abs(m(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(m(0, 3) - cplx{0.0, -std::sqrt(0.5)}) < 1e-15);
    for (double chi : {0.1, 0.7, 1.3}) {
        const CMatrix h = kron(pauli(1), pauli(1)) - kron(pauli(2), pauli(2));
        const CMatrix oracle = testsupport::expm(h * cplx{0.0, -0.5 * chi});
        CHECK(max_abs_diff(squeezing_gate(chi).matrix(), oracle) < 1e-12);
        CHECK(max_abs_diff(squeezing_gate(chi).matrix(), weyl_gate(chi, -chi, 0).matrix()) ==
              0.0);
    }
}

TEST_CASE("macroscopic family") {
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
        const Gate g = macroscopic_family(p, 0.3, 1.1, 17);
        CHECK(unitarity_deviation(g.matrix()) < 1e-12);
        const CMatrix &m = g.matrix();
        CHECK(std::abs(m(0, 0) - std::sqrt(1 - p) * std::cos(0.3)) < 1e-15);
        CHECK(std::abs(m(3, 2) - std::sqrt(p) * std::cos(1.1)) < 1e-15);
    }
    CHECK_THROWS_AS(macroscopic_family(1.5, 0, 0, 1), InputError);
    CHECK_THROWS_AS(macroscopic_family(-0.1, 0, 0, 1), InputError);
}

TEST_CASE("conjugated gate") {
    const Gate g = weyl_gate(0.3, 0.4, 0.5);
    const Gate same = conjugated_gate(g, identity2(), identity2());
    CHECK(max_abs_diff(same.matrix(), g.matrix()) < 1e-15);
    const CMatrix r = rotation(0.3, -0.2, 0.9, 1.7);
    const Gate c = conjugated_gate(controlled_rotation(kPi - 0.4), r, r);
    CHECK(unitarity_deviation(c.matrix()) < 1e-12);
    CHECK_THROWS_AS(conjugated_gate(g, CMatrix{{1.0, 0.0}, {0.0, 2.0}}, identity2()), InputError);
}

TEST_CASE("random gate determinism and unitarity") {
    CHECK(max_abs_diff(random_gate(42).matrix(), random_gate(42).matrix()) == 0.0);
    CHECK(max_abs_diff(random_gate(42).matrix(), random_gate(43).matrix()) > 0.01);
    for (std::uint64_t s = 0; s < 200; ++s) {
        CHECK(unitarity_deviation(random_gate(s).matrix()) < 1e-12);
    }
}

TEST_CASE("gate validation") {
    CHECK_THROWS_AS(Gate::from_matrix(CMatrix::identity(3)), InputError);
    CMatrix m = CMatrix::identity(4);
    m(0, 0) = 1.001;
    try {
        (void)Gate::from_matrix(m);
        FAIL("expected rejection");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("0.002") != std::string::npos);
    }
}

TEST_CASE("family construction from parameters") {
    CHECK(parse_gate_family("weyl") == GateFamily::weyl);
    CHECK_THROWS_AS(parse_gate_family("nope"), InputError);
    CHECK(make_family_gate(GateFamily::squeezing, {0.2}).family() == GateFamily::squeezing);
    CHECK_THROWS_AS(make_family_gate(GateFamily::weyl, {0.2}), InputError);
    CHECK_THROWS_AS(make_family_gate(GateFamily::random, {1.5}), InputError);
    CHECK_THROWS_AS(make_family_gate(GateFamily::custom, {}), InputError);
}

TEST_CASE("rotation helper") {
    const CMatrix rz = rotation(0, 0, 1, kPi / 2);
    CHECK(unitarity_deviation(rz) < 1e-15);
    CHECK(std::abs(rz(0, 0) - std::exp(cplx{0.0, -kPi / 4})) < 1e-15);
    CHECK(std::abs(rz(0, 1)) < 1e-15);
    CHECK_THROWS_AS(rotation(0, 0, 0, 1.0), InputError);
}
