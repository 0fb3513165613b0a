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

// Independent reference implementations shared by the tests. Nothing here
// calls into the library beyond CMatrix storage and basic products.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "seqmps/densemat.hpp"

namespace testsupport {

using seqmps::CMatrix;
using seqmps::cplx;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline CMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix m(r, c);
    for (auto &z : m.entries()) {
        const double re = u(rng);
        z = cplx{re, u(rng)};
    }
    return m;
}

inline double one_norm(const CMatrix &m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            s += std::abs(m(i, j));
        }
        best = std::max(best, s);
    }
    return best;
}

// Scaling and squaring with an 18-term Taylor series; fine for the O(1)
// generators used in the tests.
inline CMatrix expm(const CMatrix &a) {
    int squarings = 0;
    double norm = one_norm(a);
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    const CMatrix s = a * cplx{scale, 0.0};
    CMatrix term = CMatrix::identity(a.rows());
    CMatrix sum = term;
    for (int k = 1; k <= 18; ++k) {
        term = term * s;
        term *= cplx{1.0 / k, 0.0};
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

inline CMatrix naive_power(const CMatrix &m, int k) {
    CMatrix r = CMatrix::identity(m.rows());
    for (int i = 0; i < k; ++i) {
        r = r * m;
    }
    return r;
}

// Matches each expected value to a distinct computed one greedily by
// distance; returns the worst matched distance.
inline double multiset_distance(std::vector<cplx> got, std::vector<cplx> want) {
    if (got.size() != want.size()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (const cplx &w : want) {
        auto it = std::min_element(got.begin(), got.end(), [&](cplx a, cplx b) {
            return std::abs(a - w) < std::abs(b - w);
        });
        worst = std::max(worst, std::abs(*it - w));
        got.erase(it);
    }
    return worst;
}

inline CMatrix pauli(int k) {
    const cplx i{0.0, 1.0};
    switch (k) {
    case 1:
        return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case 2:
        return CMatrix{{0.0, -i}, {i, 0.0}};
    case 3:
        return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
    default:
        return CMatrix::identity(2);
    }
}

} // namespace testsupport
