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

#include "seqmps/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqmps/errors.hpp"

namespace seqmps::oracle {

namespace {

constexpr double kImagTolerance = 1e-10;

std::size_t bit_of(std::size_t sites, std::size_t m) { return std::size_t{1} << (sites - m); }

void check_site(const StateVector &s, std::size_t m) {
    if (m < 1 || m > s.sites()) {
        throw InputError("site index " + std::to_string(m) + " outside 1.." +
                         std::to_string(s.sites()));
    }
}

void check_observable(const CMatrix &a) {
    if (a.rows() != 2 || a.cols() != 2) {
        throw InputError("local observable must be 2x2");
    }
}

// A acting on site m of the amplitude vector.
std::vector<cplx> apply_local(const std::vector<cplx> &psi, std::size_t sites, const CMatrix &a,
                              std::size_t m) {
    const std::size_t bit = bit_of(sites, m);
    std::vector<cplx> out(psi.size());
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        if (idx & bit) {
            continue;
        }
        const cplx p0 = psi[idx];
        const cplx p1 = psi[idx | bit];
        out[idx] = a(0, 0) * p0 + a(0, 1) * p1;
        out[idx | bit] = a(1, 0) * p0 + a(1, 1) * p1;
    }
    return out;
}

cplx braket(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double real_part(cplx z, const char *what) {
    if (std::abs(z.imag()) > kImagTolerance * std::max(1.0, std::abs(z.real()))) {
        throw NumericalError(std::string(what) + ": imaginary residue " +
                             std::to_string(z.imag()));
    }
    return z.real();
}

} // namespace

std::size_t memory_estimate(std::size_t sites) {
    return (std::size_t{1} << sites) * sizeof(cplx);
}

StateVector StateVector::initial(const ChainSpec &chain, std::size_t max_sites) {
    const std::size_t n = chain.length;
    if (n < 2) {
        throw InputError("chain length must be at least 2");
    }
    if (n > max_sites || n > 30) {
        throw InputError("state vector for N = " + std::to_string(n) + " needs " +
                         (n > 30 ? std::string("more than 16 GiB")
                                 : std::to_string(memory_estimate(n)) + " bytes") +
                         "; cap is N = " + std::to_string(max_sites));
    }
    std::vector<cplx> amps(std::size_t{1} << n);
    amps[0] = chain.first.c0;
    amps[bit_of(n, 1)] = chain.first.c1;
    return {n, std::move(amps)};
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx &z : amps_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

void StateVector::apply_pair(const CMatrix &u, std::size_t m) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw InputError("pair gate must be 4x4");
    }
    if (m < 1 || m >= sites_) {
        throw InputError("pair (" + std::to_string(m) + "," + std::to_string(m + 1) +
                         ") outside the chain");
    }
    const std::size_t hi = bit_of(sites_, m);
    const std::size_t lo = bit_of(sites_, m + 1);
    for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
        if (idx & (hi | lo)) {
            continue;
        }
        const std::size_t slot[4] = {idx, idx | lo, idx | hi, idx | hi | lo};
        cplx in[4];
        for (int k = 0; k < 4; ++k) {
            in[k] = amps_[slot[k]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += u(r, c) * in[c];
            }
            amps_[slot[r]] = acc;
        }
    }
}

StateVector sweep_prefix(const Gate &g, const ChainSpec &chain, std::size_t pairs,
                         std::size_t max_sites) {
    StateVector s = StateVector::initial(chain, max_sites);
    if (pairs > chain.length - 1) {
        throw InputError("sweep prefix longer than the chain");
    }
    for (std::size_t m = 1; m <= pairs; ++m) {
        s.apply_pair(g.matrix(), m);
    }
    return s;
}

StateVector sweep(const Gate &g, const ChainSpec &chain, std::size_t max_sites) {
    return sweep_prefix(g, chain, chain.length - 1, max_sites);
}

double expect_local(const StateVector &s, const CMatrix &a, std::size_t m) {
    check_observable(a);
    check_site(s, m);
    const auto &psi = s.amplitudes();
    return real_part(braket(psi, apply_local(psi, s.sites(), a, m)), "expect_local");
}

double expect_pair(const StateVector &s, const CMatrix &a, std::size_t m, std::size_t n) {
    check_observable(a);
    check_site(s, m);
    check_site(s, n);
    if (m == n) {
        throw InputError("expect_pair needs distinct sites");
    }
    const auto &psi = s.amplitudes();
    const auto an = apply_local(psi, s.sites(), a, n);
    return real_part(braket(psi, apply_local(an, s.sites(), a, m)), "expect_pair");
}

double collective_mean(const StateVector &s, const CMatrix &a) {
    double total = 0.0;
    for (std::size_t m = 1; m <= s.sites(); ++m) {
        total += expect_local(s, a, m);
    }
    return total;
}

double collective_variance(const StateVector &s, const CMatrix &a) {
    check_observable(a);
    const auto &psi = s.amplitudes();
    std::vector<cplx> chi(psi.size());
    for (std::size_t m = 1; m <= s.sites(); ++m) {
        const auto am = apply_local(psi, s.sites(), a, m);
        for (std::size_t i = 0; i < chi.size(); ++i) {
            chi[i] += am[i];
        }
    }
    const double mean = real_part(braket(psi, chi), "collective_mean");
    const double second = braket(chi, chi).real();
    return second - mean * mean;
}

CMatrix reduced_density(const StateVector &s, std::size_t m) {
    check_site(s, m);
    const std::size_t bit = bit_of(s.sites(), m);
    const auto &psi = s.amplitudes();
    CMatrix rho(2, 2);
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
        if (idx & bit) {
            continue;
        }
        const cplx p0 = psi[idx];
        const cplx p1 = psi[idx | bit];
        rho(0, 0) += p0 * std::conj(p0);
        rho(0, 1) += p0 * std::conj(p1);
        rho(1, 0) += p1 * std::conj(p0);
        rho(1, 1) += p1 * std::conj(p1);
    }
    return rho;
}

} // namespace seqmps::oracle
