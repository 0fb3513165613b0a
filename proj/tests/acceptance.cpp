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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "seqmps/correlators.hpp"
#include "seqmps/errors.hpp"
#include "seqmps/gates.hpp"
#include "seqmps/macroscopicity.hpp"
#include "seqmps/oracle.hpp"
#include "seqmps/squeezing.hpp"
#include "seqmps/transfer.hpp"
#include "support.hpp"

using namespace seqmps;
using testsupport::kPi;

namespace {

int g_failures = 0;

void report(int id, const char *title, bool pass, const std::string &detail) {
    std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<Gate> family_gates() {
    std::vector<Gate> g = {
        Gate::from_matrix(CMatrix::identity(4)),
        weyl_gate(0.3, 0.9, -0.4),
        weyl_gate(1.1, -0.2, 2.3),
        weyl_gate(0.7, kPi / 2, kPi / 2),
        weyl_gate(kPi / 2, 0.4, kPi / 2),
        controlled_rotation(kPi),
        controlled_rotation(kPi - 0.3),
        controlled_rotation(0.8),
        squeezing_gate(0.3),
        squeezing_gate(0.5),
        squeezing_gate(1.4),
        macroscopic_family(0.5, 0.3, 1.1, 7),
        macroscopic_family(0.2, -0.6, 0.4, 11),
        conjugated_gate(macroscopic_family(0.3, 0.5, -0.9, 5), rotation(0, 0, 1, 0.8),
                        rotation(0, 0, 1, -0.3)),
        conjugated_gate(weyl_gate(0.4, 1.0, 0.2), rotation(1, 0, 0, 0.5), rotation(0, 1, 0, 1.2)),
    };
    return g;
}

// Criterion 1.
void oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Gate> gates = family_gates();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        gates.push_back(random_gate(seed));
    }
    const InitialState states[] = {InitialState{}, InitialState::normalized(0.6, cplx(0.3, 0.4))};
    const LocalObservable obs[] = {LocalObservable::sigma_x(), LocalObservable::sigma_y(),
                                   LocalObservable::sigma_z(),
                                   LocalObservable::from_direction(0.48, -0.6, 0.64)};
    double worst = 0.0;
    std::size_t checks = 0;
    for (const Gate &g : gates) {
        for (const InitialState &s : states) {
            const TransferSet ts = TransferSet::build(g, s);
            for (std::size_t n = 4; n <= 10; ++n) {
                const auto psi = oracle::sweep(g, ChainSpec::make(n, s));
                for (const LocalObservable &a : obs) {
                    for (std::size_t m = 1; m <= n; ++m) {
                        worst = std::max(worst, std::abs(one_point(ts, a, m, n) -
                                                         oracle::expect_local(psi, a.matrix(), m)));
                        for (std::size_t k = m + 1; k <= n; ++k) {
                            worst = std::max(worst,
                                             std::abs(two_point(ts, a, m, k, n) -
                                                      oracle::expect_pair(psi, a.matrix(), m, k)));
                        }
                    }
                    worst = std::max(worst, std::abs(additive_mean(ts, a, n) -
                                                     oracle::collective_mean(psi, a.matrix())));
                    worst = std::max(worst, std::abs(additive_variance_exact(ts, a, n).total -
                                                     oracle::collective_variance(psi, a.matrix())));
                    ++checks;
                }
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%zu gates, %zu (gate,state,N,A) cases, max deviation %.3e (tol 1e-8), %.2f s "
                  "(limit 60 s)",
                  gates.size(), checks, worst, secs);
    report(1, "oracle equivalence", worst <= 1e-8 && secs < 60.0, buf);
}

// Criterion 2.
void isometry() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        worst = std::max(worst, check_isometry(extract_kraus(random_gate(10000 + seed))));
    }
    report(2, "Kraus isometry", worst <= 1e-12,
           fmt("1000 random gates, max deviation %.3e (tol 1e-12)", worst));
}

// Criterion 3.
void weyl_spectrum() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double a = u(rng);
        const double b = u(rng);
        const double c = u(rng);
        const double sa = std::sin(a);
        const double sb = std::sin(b);
        const double sg = std::sin(c);
        const cplx disc = std::sqrt(cplx(sg * sg * (sa + sb) * (sa + sb) - 4.0 * sa * sb, 0.0));
        const std::vector<cplx> want = {1.0, sa * sb, 0.5 * sg * (sa + sb) + 0.5 * disc,
                                        0.5 * sg * (sa + sb) - 0.5 * disc};
        const auto got = eigenvalues(transfer_E(extract_kraus(weyl_gate(a, b, c))));
        worst = std::max(worst, testsupport::multiset_distance(got, want));
    }
    report(3, "Weyl transfer spectrum", worst <= 1e-9,
           fmt("100 random angle triples, max multiset distance %.3e (tol 1e-9)", worst));
}

double axis_angle(const Direction &a, const Direction &b) {
    const double dot = std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
    return std::acos(std::min(1.0, dot));
}

// Criterion 4.
void effective_size() {
    double worst_value = 0.0;
    double worst_angle = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double t = 0.05 + k * (kPi - 0.1) / 49.0;
        const double c2 = std::cos(t) * std::cos(t);
        const Gate gy = weyl_gate(t, kPi / 2, kPi / 2);
        const Gate gx = weyl_gate(kPi / 2, t, kPi / 2);
        worst_value = std::max(worst_value, std::abs(neff(gy, InitialState{}, {0, 1, 0}) - c2));
        worst_value = std::max(worst_value, std::abs(neff(gx, InitialState{}, {1, 0, 0}) - c2));
        const MacroReport ry = neff_optimize(gy, InitialState{});
        const MacroReport rx = neff_optimize(gx, InitialState{});
        worst_value = std::max({worst_value, std::abs(ry.neff_coeff - c2), std::abs(rx.neff_coeff - c2)});
        worst_angle = std::max({worst_angle, axis_angle(ry.best_direction, {0, 1, 0}),
                                axis_angle(rx.best_direction, {1, 0, 0})});
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "50 angles, max |neff - cos^2| %.3e (tol 1e-8), max axis error %.3e rad (tol 1e-4)",
                  worst_value, worst_angle);
    report(4, "effective size of symmetric gates", worst_value <= 1e-8 && worst_angle <= 1e-4, buf);
}

// Criterion 5.
void fig3() {
    const double h = 1.0 / std::sqrt(2.0);
    const InitialState plus = InitialState::normalized(h, h);
    const auto z = LocalObservable::sigma_z();
    const std::vector<std::size_t> ns = {2, 3, 4, 5, 6, 7, 8, 9, 10, 100, 1000, 2000, 5000, 10000};
    double worst_rel = 0.0;
    for (const SweepRow &r :
         variance_sweep(controlled_rotation(kPi), plus, z, ns, VarianceMethod::spectral)) {
        const double n2 = static_cast<double>(r.n_sites) * static_cast<double>(r.n_sites);
        worst_rel = std::max(worst_rel, std::abs(r.variance - n2) / n2);
    }
    bool ok = worst_rel <= 1e-9;
    std::string detail = fmt("a=pi: max |var/N^2 - 1| %.3e (tol 1e-9, N<=1e4);", worst_rel);
    for (double d : {0.1, 0.2, 0.3, 0.4}) {
        const auto rows = variance_sweep(controlled_rotation(kPi - d), plus, z,
                                         {2, 3, 9, 10, 500, 1000}, VarianceMethod::spectral);
        const double early = *rows[1].slope;
        const double late = *rows[5].slope;
        // Small-N slope within 0.1 of 2 at N=2..3, below 1.2 between N=500 and 1000.
        ok = ok && std::abs(early - 2.0) < 0.1 && late < 1.2;
        char buf[160];
        std::snprintf(buf, sizeof buf, " a=pi-%.1f: slope(2..3)=%.4f slope(9..10)=%.4f slope(500..1000)=%.3e;",
                      d, early, *rows[3].slope, late);
        detail += buf;
    }
    report(5, "Fig. 3 variance scaling", ok, detail);
}

// Criterion 6.
void squeezing_fit() {
    const double ns[] = {100.0, 200.0, 400.0, 800.0};
    std::string detail;
    bool ok = true;
    double worst = 0.0;
    for (int k = 1; k <= 15; ++k) {
        const double chi = 0.1 * k;
        double sx = 0, sxx = 0, sm = 0, sv = 0, sxm = 0, sxv = 0;
        for (double n : ns) {
            const auto ni = static_cast<std::size_t>(n);
            const double m = mean_z(chi, ni, SqueezeMode::exact);
            const double v = transverse_variance(chi, kPi / 4, ni, SqueezeMode::exact);
            sx += n;
            sxx += n * n;
            sm += m;
            sv += v;
            sxm += n * m;
            sxv += n * v;
        }
        const double den = 4.0 * sxx - sx * sx;
        const double bm = (4.0 * sxm - sx * sm) / den;
        const double bv = (4.0 * sxv - sx * sv) / den;
        const double s = std::sin(chi);
        const double v_closed =
            1.0 - 2.0 * std::sin(2.0 * chi) * std::cos(chi) / ((1.0 + s * s) * (1.0 + s));
        const double dm = std::abs(bm - (1.0 - 3.0 * s * s) / (1.0 + s * s));
        const double dv = std::abs(bv - v_closed);
        worst = std::max({worst, dm, dv});
        if (dm > 1e-4 || dv > 1e-4) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, " chi_t=%.1f misses (mean %.2e, variance %.2e);", chi, dm, dv);
            detail += buf;
        }
    }
    report(6, "large-N squeezing slopes", ok,
           fmt("max slope error %.3e over chi_t=0.1..1.5 (tol 1e-4);", worst) + detail);
}

// Criterion 7.
void squeezing_existence() {
    const double xi = xi_squared(0.2, 1000, SqueezeMode::asymptotic);
    double worst = 0.0;
    for (int k = 1; k <= 15; ++k) {
        worst = std::max(worst, std::abs(optimal_theta(0.1 * k).theta - kPi / 4));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "xi^2(chi_t=0.2, asymptotic) = %.6f (< 1); max |theta* - pi/4| %.3e (tol 1e-6)",
                  xi, worst);
    report(7, "squeezing existence", xi < 1.0 && worst <= 1e-6, buf);
}

// Criterion 8.
void fig4() {
    std::vector<double> grid;
    for (int k = 0; k <= 1000; ++k) {
        grid.push_back(k / 1000.0);
    }
    double worst = 0.0;
    for (const auto &[m, f] : sm_bound(0.5, grid).samples) {
        worst = std::max(worst, std::abs(f - m * m));
    }
    std::vector<double> chi;
    for (int k = 1; k <= 156; ++k) {
        chi.push_back(0.01 * k);
    }
    int witnesses = 0;
    bool bounded = true;
    double best_m = 0.0;
    for (const Fig4Point &p : fig4_curve(chi)) {
        bounded = bounded && p.v >= 0.0 && p.v <= 1.0 && std::abs(p.m) <= 1.0;
        if (p.below_pairwise && p.m > 0.5) {
            ++witnesses;
            best_m = std::max(best_m, p.m);
        }
    }
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "max |F_1/2 - m^2| %.3e (tol 1e-8); %d chi_t points below F_1 with m > 0.5 "
                  "(largest m %.4f); all points within 0<=v<=1, |m|<=1: %s",
                  worst, witnesses, best_m, bounded ? "yes" : "no");
    report(8, "Fig. 4 bounds", worst <= 1e-8 && witnesses > 0 && bounded, buf);
}

// Criterion 9.
void classification() {
    std::vector<Gate> gates = family_gates();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        gates.push_back(random_gate(seed));
    }
    int disagreements = 0;
    int macroscopic = 0;
    for (const Gate &g : gates) {
        try {
            const MacroClassification c = classify_macroscopic(g, 1e-8);
            const std::size_t dim = spectral(transfer_E(extract_kraus(g)), 1e-8).unit_dimension;
            disagreements += c.is_macroscopic == (dim >= 2) ? 0 : 1;
            macroscopic += c.is_macroscopic ? 1 : 0;
        } catch (const NumericalError &) {
            ++disagreements;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu gates, %d macroscopic, %d disagreements (tol 1e-8)",
                  gates.size(), macroscopic, disagreements);
    report(9, "macroscopicity classification", disagreements == 0, buf);
}

// Criterion 10.
void density_recursion() {
    std::vector<Gate> gates = family_gates();
    gates.push_back(random_gate(3));
    const InitialState s = InitialState::normalized(cplx(0.6, 0.2), cplx(-0.3, 0.7));
    double worst = 0.0;
    for (const Gate &g : gates) {
        const KrausPair k = extract_kraus(g);
        for (std::size_t n = 2; n <= 10; ++n) {
            const ChainSpec chain = ChainSpec::make(n, s);
            const CMatrix phi{{s.c0}, {s.c1}};
            CMatrix rho = phi * adjoint(phi);
            for (std::size_t site = 1; site <= n; ++site) {
                const auto state = oracle::sweep_prefix(g, chain, site - 1);
                worst = std::max(worst, max_abs_diff(rho, oracle::reduced_density(state, site)));
                if (site < n) {
                    rho = site_density_recursion(k, rho);
                }
            }
        }
    }
    report(10, "reduced-density recursion", worst <= 1e-10,
           fmt("all families, N<=10, all sites, max deviation %.3e (tol 1e-10)", worst));
}

} // namespace

int main() {
    oracle_equivalence();
    isometry();
    weyl_spectrum();
    effective_size();
    fig3();
    squeezing_fit();
    squeezing_existence();
    fig4();
    classification();
    density_recursion();
    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures;
}
