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


#include "seqmps/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "seqmps/correlators.hpp"
#include "seqmps/errors.hpp"
#include "seqmps/gates.hpp"
#include "seqmps/transfer.hpp"

namespace seqmps {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kThetaGrid = 64;
constexpr double kDegenerateSpread = 1e-9;
constexpr std::size_t kBoundGrid = 1001;
constexpr std::size_t kMuScanPoints = 2001;
constexpr double kMuScanMax = 20.0;

TransferSet squeezing_transfer(double chi_t) {
    return TransferSet::build(squeezing_gate(chi_t), InitialState{});
}

void require_length(std::size_t n_sites, SqueezeMode mode) {
    if (mode == SqueezeMode::exact && n_sites < 2) {
        throw InputError("exact mode needs N >= 2");
    }
    if (n_sites == 0) {
        throw InputError("chain length must be positive");
    }
}

double wrap_theta(double theta) {
    double t = std::fmod(theta, kPi);
    if (t < 0.0) {
        t += kPi;
    }
    return t >= kPi ? 0.0 : t;
}

// Spin-1 ground state of J_x^2 - mu J_z: returns (<J_z>, <J_x^2> - <J_x>^2).
std::pair<double, double> spin_one_ground(double mu) {
    const double s = 1.0 / std::sqrt(2.0);
    const CMatrix jx{{0.0, s, 0.0}, {s, 0.0, s}, {0.0, s, 0.0}};
    const CMatrix jz{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}};
    const CMatrix jx2 = jx * jx;
    const HermitianEigen he = eig_hermitian(jx2 - jz * cplx(mu));
    const CMatrix g = he.vectors.col(0);
    const CMatrix gh = adjoint(g);
    const double mz = (gh * jz * g)(0, 0).real();
    const double mx = (gh * jx * g)(0, 0).real();
    const double x2 = (gh * jx2 * g)(0, 0).real();
    return {mz, x2 - mx * mx};
}

// Per-site variance bound for spin-1 blocks at normalized mean m in [0, 1].
double spin_one_bound(double m, const std::vector<double> &mu_scan,
                      const std::vector<double> &m_scan) {
    constexpr double j = 1.0;
    if (m <= 0.0) {
        return 0.0;
    }
    if (m >= 1.0 - 1e-12) {
        return 1.0;
    }
    double lo = 0.0;
    double hi = mu_scan.back();
    const auto it = std::lower_bound(m_scan.begin(), m_scan.end(), m);
    if (it != m_scan.end()) {
        const auto k = static_cast<std::size_t>(it - m_scan.begin());
        hi = mu_scan[k];
        lo = k > 0 ? mu_scan[k - 1] : 0.0;
    } else {
        lo = hi;
        while (spin_one_ground(hi).first / j < m) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e12) {
                throw NumericalError("spin-1 bound: multiplier bracket diverged at m = " +
                                     std::to_string(m));
            }
        }
    }
    for (int it_count = 0; it_count < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it_count) {
        const double mid = 0.5 * (lo + hi);
        if (spin_one_ground(mid).first / j < m) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (2.0 / j) * spin_one_ground(0.5 * (lo + hi)).second;
}

// Lower convex hull of points sorted by x, evaluated back at every x.
std::vector<double> lower_hull_values(const std::vector<std::pair<double, double>> &pts) {
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (hull.size() >= 2) {
            const auto &a = pts[hull[hull.size() - 2]];
            const auto &b = pts[hull.back()];
            const auto &c = pts[i];
            const double cross =
                (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
            if (cross > 0.0) {
                break;
            }
            hull.pop_back();
        }
        hull.push_back(i);
    }
    std::vector<double> out(pts.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (seg + 1 < hull.size() && pts[hull[seg + 1]].first < pts[i].first) {
            ++seg;
        }
        if (seg + 1 >= hull.size() || pts[hull[seg]].first == pts[i].first) {
            out[i] = std::min(pts[i].second, pts[hull[seg]].second);
            continue;
        }
        const auto &a = pts[hull[seg]];
        const auto &b = pts[hull[seg + 1]];
        const double t = (pts[i].first - a.first) / (b.first - a.first);
        out[i] = std::min(pts[i].second, a.second + t * (b.second - a.second));
    }
    return out;
}

const BoundCurve &reference_curve(double j) {
    static const std::vector<double> grid = [] {
        std::vector<double> g(kBoundGrid);
        for (std::size_t i = 0; i < kBoundGrid; ++i) {
            g[i] = static_cast<double>(i) / static_cast<double>(kBoundGrid - 1);
        }
        return g;
    }();
    static const BoundCurve half = sm_bound(0.5, grid);
    static const BoundCurve one = sm_bound(1.0, grid);
    return j == 0.5 ? half : one;
}

} // namespace

double mean_z_coeff(double chi_t) {
    const double s2 = std::sin(chi_t) * std::sin(chi_t);
    return (1.0 - 3.0 * s2) / (1.0 + s2);
}

double transverse_variance_coeff(double chi_t, double theta) {
    const double s = std::sin(chi_t);
    return 1.0 + 4.0 * s * (s - std::sin(2.0 * theta)) / (1.0 + s * s);
}

double mean_z(double chi_t, std::size_t n_sites, SqueezeMode mode) {
    require_length(n_sites, mode);
    if (mode == SqueezeMode::asymptotic) {
        return static_cast<double>(n_sites) * mean_z_coeff(chi_t);
    }
    return additive_mean(squeezing_transfer(chi_t), LocalObservable::sigma_z(), n_sites);
}

double transverse_variance(double chi_t, double theta, std::size_t n_sites, SqueezeMode mode) {
    require_length(n_sites, mode);
    if (mode == SqueezeMode::asymptotic) {
        return static_cast<double>(n_sites) * transverse_variance_coeff(chi_t, theta);
    }
    const auto a = LocalObservable::from_bloch(std::cos(theta), std::sin(theta), 0.0);
    return additive_variance_exact(squeezing_transfer(chi_t), a, n_sites).total;
}

ThetaOptimum optimal_theta(double chi_t) {
    std::size_t best = 0;
    double lo_val = transverse_variance_coeff(chi_t, 0.0);
    double hi_val = lo_val;
    const double step = kPi / static_cast<double>(kThetaGrid);
    for (std::size_t k = 1; k < kThetaGrid; ++k) {
        const double v = transverse_variance_coeff(chi_t, step * static_cast<double>(k));
        if (v < lo_val) {
            lo_val = v;
            best = k;
        }
        hi_val = std::max(hi_val, v);
    }
    ThetaOptimum out;
    out.degenerate = hi_val - lo_val < kDegenerateSpread;

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const auto f = [&](double t) { return transverse_variance_coeff(chi_t, t); };
    double a = step * static_cast<double>(best) - step;
    double b = step * static_cast<double>(best) + step;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > 1e-12) {
        if (fc <= fd) {
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
    out.theta = wrap_theta(0.5 * (a + b));
    out.coeff = f(out.theta);
    return out;
}

TransverseMinimum minimal_transverse_variance(double chi_t, std::size_t n_sites,
                                              SqueezeMode mode) {
    require_length(n_sites, mode);
    if (mode == SqueezeMode::asymptotic) {
        const ThetaOptimum opt = optimal_theta(chi_t);
        return {opt.theta, static_cast<double>(n_sites) * opt.coeff};
    }
    const double vx = transverse_variance(chi_t, 0.0, n_sites, mode);
    const double vy = transverse_variance(chi_t, kPi / 2.0, n_sites, mode);
    const double vd = transverse_variance(chi_t, kPi / 4.0, n_sites, mode);
    // Covariance matrix [[vx, c], [c, vy]] of (A_x, A_y).
    const double c = vd - 0.5 * (vx + vy);
    const double half_diff = 0.5 * (vx - vy);
    TransverseMinimum out;
    out.variance = 0.5 * (vx + vy) - std::hypot(half_diff, c);
    out.theta = wrap_theta(0.5 * std::atan2(2.0 * c, vx - vy) + kPi / 2.0);
    return out;
}

double xi_squared_from_moments(std::size_t n_sites, double mean, double variance) {
    const double n = static_cast<double>(n_sites);
    if (!(std::abs(mean) >= 1e-9 * n)) {
        throw InputError("squeezing parameter undefined: |<A_z>| = " + std::to_string(mean) +
                         " for N = " + std::to_string(n_sites));
    }
    return n * variance / (mean * mean);
}

double xi_squared(double chi_t, std::size_t n_sites, SqueezeMode mode) {
    const double mean = mean_z(chi_t, n_sites, mode);
    if (!(std::abs(mean) >= 1e-9 * static_cast<double>(n_sites))) {
        return xi_squared_from_moments(n_sites, mean, 0.0);
    }
    return xi_squared_from_moments(n_sites, mean,
                                   minimal_transverse_variance(chi_t, n_sites, mode).variance);
}

BoundCurve sm_bound(double j, const std::vector<double> &m_grid) {
    if (j != 0.5 && j != 1.0) {
        throw InputError("bound available for j = 1/2 and j = 1 only, got " + std::to_string(j));
    }
    for (std::size_t i = 0; i < m_grid.size(); ++i) {
        if (!(m_grid[i] >= 0.0 && m_grid[i] <= 1.0)) {
            throw InputError("bound grid must lie in [0, 1]");
        }
        if (i > 0 && !(m_grid[i] > m_grid[i - 1])) {
            throw InputError("bound grid must be strictly ascending");
        }
    }
    BoundCurve curve;
    curve.j = j;
    curve.samples.reserve(m_grid.size());
    if (j == 0.5) {
        for (double m : m_grid) {
            curve.samples.emplace_back(m, m * m);
        }
        return curve;
    }

    std::vector<double> mu_scan(kMuScanPoints);
    std::vector<double> m_scan(kMuScanPoints);
    for (std::size_t k = 0; k < kMuScanPoints; ++k) {
        mu_scan[k] = kMuScanMax * static_cast<double>(k) / static_cast<double>(kMuScanPoints - 1);
        m_scan[k] = spin_one_ground(mu_scan[k]).first / j;
    }
    // Ground-state magnetization grows with mu; enforce it against rounding.
    for (std::size_t k = 1; k < kMuScanPoints; ++k) {
        m_scan[k] = std::max(m_scan[k], m_scan[k - 1]);
    }
    for (double m : m_grid) {
        curve.samples.emplace_back(m, spin_one_bound(m, mu_scan, m_scan));
    }
    const std::vector<double> hull = lower_hull_values(curve.samples);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        curve.samples[i].second = hull[i];
    }
    return curve;
}

double interpolate_bound(const BoundCurve &curve, double m) {
    const auto &s = curve.samples;
    if (s.empty()) {
        throw InputError("empty bound curve");
    }
    if (m <= s.front().first) {
        return s.front().second;
    }
    if (m >= s.back().first) {
        return s.back().second;
    }
    const auto it = std::lower_bound(s.begin(), s.end(), m,
                                     [](const auto &p, double x) { return p.first < x; });
    const auto &b = *it;
    const auto &a = *(it - 1);
    const double t = (m - a.first) / (b.first - a.first);
    return a.second + t * (b.second - a.second);
}

std::vector<Fig4Point> fig4_curve(const std::vector<double> &chi_t_grid) {
    std::vector<Fig4Point> out;
    out.reserve(chi_t_grid.size());
    for (double chi_t : chi_t_grid) {
        if (!(chi_t > 0.0 && chi_t < kPi / 2.0)) {
            throw InputError("chi_t must lie in (0, pi/2), got " + std::to_string(chi_t));
        }
        Fig4Point p;
        p.chi_t = chi_t;
        p.m = mean_z_coeff(chi_t);
        p.v = transverse_variance_coeff(chi_t, kPi / 4.0);
        p.f_half = interpolate_bound(reference_curve(0.5), std::abs(p.m));
        p.f_one = interpolate_bound(reference_curve(1.0), std::abs(p.m));
        p.below_separable = p.v < p.f_half;
        p.below_pairwise = p.v < p.f_one;
        out.push_back(p);
    }
    return out;
}

SqueezeReport squeeze_report(double chi_t, std::size_t n_sites, SqueezeMode mode) {
    SqueezeReport r;
    r.chi_t = chi_t;
    r.mean_z_coeff = mean_z_coeff(chi_t);
    const ThetaOptimum opt = optimal_theta(chi_t);
    r.theta_star = opt.theta;
    r.var_coeff = opt.coeff;
    r.xi2 = xi_squared(chi_t, n_sites, mode);
    const double am = std::abs(r.mean_z_coeff);
    r.below_separable = r.var_coeff < interpolate_bound(reference_curve(0.5), am);
    r.below_pairwise = r.var_coeff < interpolate_bound(reference_curve(1.0), am);
    return r;
}

} // namespace seqmps
