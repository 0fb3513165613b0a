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


#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "seqmps/cli.hpp"
#include "seqmps/correlators.hpp"
#include "seqmps/errors.hpp"
#include "seqmps/macroscopicity.hpp"
#include "seqmps/oracle.hpp"
#include "seqmps/squeezing.hpp"
#include "seqmps/transfer.hpp"

namespace seqmps::cli {

namespace {

constexpr std::size_t kOracleLimit = 10;

struct GateCase {
    std::string label;
    Gate gate;
};

class Csv {
  public:
    Csv(const RunConfig &config, std::initializer_list<std::string_view> header) {
        text_ << "# seqmps " << config.to_json().dump() << '\n';
        bool first = true;
        for (std::string_view h : header) {
            text_ << (first ? "" : ",") << h;
            first = false;
        }
        text_ << '\n';
    }

    Csv &cell(const std::string &s) {
        text_ << (row_started_ ? "," : "") << s;
        row_started_ = true;
        return *this;
    }
    Csv &cell(double x) { return cell(format_double(x)); }
    Csv &cell(std::size_t x) { return cell(std::to_string(x)); }
    Csv &cell(bool b) { return cell(std::string(b ? "1" : "0")); }
    Csv &empty() { return cell(std::string()); }
    void end_row() {
        text_ << '\n';
        row_started_ = false;
    }
    [[nodiscard]] std::string str() const { return text_.str(); }

  private:
    std::ostringstream text_;
    bool row_started_ = false;
};

std::string csv_safe(std::string s) {
    for (char &ch : s) {
        if (ch == ',') {
            ch = ';';
        }
    }
    return s;
}

std::vector<GateCase> gates_from_config(const RunConfig &c) {
    if (!c.gate_file.empty()) {
        if (!c.gate.empty() || !c.params.empty()) {
            throw InputError("--gate-file cannot be combined with --gate or --params");
        }
        return {{"file:" + csv_safe(c.gate_file), load_gate_file(c.gate_file)}};
    }
    if (c.gate.empty()) {
        throw InputError("command '" + c.command + "' needs --gate or --gate-file");
    }
    const GateFamily family = parse_gate_family(c.gate);
    std::vector<GateCase> out;
    if (!c.params.empty()) {
        for (const std::string &p : c.params) {
            out.push_back({c.gate + ":" + csv_safe(p), make_family_gate(family, parse_angle_list(p))});
        }
        return out;
    }
    if (family == GateFamily::random) {
        for (std::size_t s : parse_size_range(c.seed)) {
            out.push_back({c.gate + ":" + std::to_string(s),
                           make_family_gate(family, {static_cast<double>(s)})});
        }
        return out;
    }
    if (family == GateFamily::squeezing && !c.chi_t.empty()) {
        for (double chi : parse_angle_list(c.chi_t)) {
            out.push_back({c.gate + ":" + format_double(chi), squeezing_gate(chi)});
        }
        return out;
    }
    throw InputError("--gate " + c.gate + " needs --params");
}

InitialState initial_from_config(const RunConfig &c, cplx default_c0, cplx default_c1) {
    const cplx c0 = c.c0 ? parse_complex(*c.c0) : default_c0;
    const cplx c1 = c.c1 ? parse_complex(*c.c1) : default_c1;
    return InitialState::normalized(c0, c1);
}

LocalObservable observable_from_config(const RunConfig &c) {
    if (c.theta) {
        const double t = parse_angle(*c.theta);
        return LocalObservable::from_bloch(std::cos(t), std::sin(t), 0.0);
    }
    const auto n = parse_angle_list(c.bloch);
    if (n.size() != 3) {
        throw InputError("--bloch needs three components");
    }
    return LocalObservable::from_direction(n[0], n[1], n[2]);
}

Direction direction_from_config(const RunConfig &c) {
    const LocalObservable a = observable_from_config(c);
    return *a.bloch();
}

std::vector<std::size_t> lengths_from_config(const RunConfig &c, std::string_view fallback) {
    if (c.n && !c.n_range.empty()) {
        throw InputError("use either --n or --n-range");
    }
    if (c.n) {
        return {*c.n};
    }
    return parse_size_range(c.n_range.empty() ? fallback : std::string_view(c.n_range));
}

std::size_t single_length(const RunConfig &c) {
    if (!c.n) {
        throw InputError("command '" + c.command + "' needs --n");
    }
    return *c.n;
}

CommandResult cmd_spectrum(const RunConfig &c) {
    Csv csv(c, {"gate", "index", "re", "im", "modulus", "is_unit", "unit_dimension", "macroscopic"});
    for (const GateCase &gc : gates_from_config(c)) {
        const MacroClassification cls = classify_macroscopic(gc.gate, c.tol);
        const SpectralData sd = spectral(transfer_E(extract_kraus(gc.gate)), c.tol);
        for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
            const cplx l = sd.eigenvalues[i];
            csv.cell(gc.label).cell(i).cell(l.real()).cell(l.imag()).cell(std::abs(l));
            csv.cell(sd.is_unit(i)).cell(sd.unit_dimension).cell(cls.is_macroscopic);
            csv.end_row();
        }
    }
    return {csv.str(), false};
}

CommandResult cmd_fig3(const RunConfig &c) {
    if (!c.gate_file.empty() || (!c.gate.empty() && c.gate != "controlled_rotation")) {
        throw InputError("fig3 sweeps controlled_rotation angles given by --params");
    }
    std::vector<double> angles;
    if (c.params.empty()) {
        angles = parse_angle_list("pi,pi-0.1,pi-0.2,pi-0.3,pi-0.4");
    }
    for (const std::string &p : c.params) {
        for (double a : parse_angle_list(p)) {
            angles.push_back(a);
        }
    }
    const double h = 1.0 / std::numbers::sqrt2;
    const InitialState s = initial_from_config(c, h, h);
    const LocalObservable a = observable_from_config(c);
    const auto ns = lengths_from_config(c, "2,3,4,5,6,7,8,9,10,20,50,100,200,500,1000");

    Csv csv(c, {"a", "n", "variance", "slope", "oracle_variance", "oracle_deviation"});
    bool failed = false;
    for (double angle : angles) {
        const Gate g = controlled_rotation(angle);
        VarianceMethod method = VarianceMethod::spectral;
        if (!spectral(transfer_E(extract_kraus(g))).diagonalizable) {
            method = VarianceMethod::sweep;
        }
        for (const SweepRow &row : variance_sweep(g, s, a, ns, method)) {
            csv.cell(angle).cell(row.n_sites).cell(row.variance);
            row.slope ? csv.cell(*row.slope) : csv.empty();
            if (row.n_sites <= kOracleLimit) {
                const auto psi = oracle::sweep(g, ChainSpec::make(row.n_sites, s));
                const double ov = oracle::collective_variance(psi, a.matrix());
                const double dev = std::abs(ov - row.variance);
                failed = failed || !(dev <= c.tol);
                csv.cell(ov).cell(dev);
            } else {
                csv.empty().empty();
            }
            csv.end_row();
        }
    }
    return {csv.str(), failed};
}

CommandResult cmd_fig4(const RunConfig &c) {
    std::vector<double> grid;
    if (c.chi_t.empty()) {
        for (int k = 1; k <= 156; ++k) {
            grid.push_back(0.01 * k);
        }
    } else {
        grid = parse_angle_list(c.chi_t);
    }
    Csv csv(c, {"chi_t", "m", "v", "f_half", "f_one", "below_separable", "below_pairwise"});
    for (const Fig4Point &p : fig4_curve(grid)) {
        csv.cell(p.chi_t).cell(p.m).cell(p.v).cell(p.f_half).cell(p.f_one);
        csv.cell(p.below_separable).cell(p.below_pairwise);
        csv.end_row();
    }
    return {csv.str(), false};
}

CommandResult cmd_neff(const RunConfig &c) {
    const InitialState s = initial_from_config(c, 1.0, 0.0);
    const Direction along = direction_from_config(c);
    Csv csv(c, {"gate", "unit_dimension", "neff_coeff", "best_x", "best_y", "best_z", "neff_along",
                "witness_x", "witness_y", "witness_z"});
    for (const GateCase &gc : gates_from_config(c)) {
        const MacroReport r = neff_optimize(gc.gate, s, c.tol);
        csv.cell(gc.label).cell(r.unit_dimension).cell(r.neff_coeff);
        for (double x : r.best_direction) {
            csv.cell(x);
        }
        csv.cell(neff(gc.gate, s, along, c.tol));
        if (r.witness) {
            for (double x : r.witness->bloch) {
                csv.cell(x);
            }
        } else {
            csv.empty().empty().empty();
        }
        csv.end_row();
    }
    return {csv.str(), false};
}

CommandResult cmd_correlate(const RunConfig &c) {
    const InitialState s = initial_from_config(c, 1.0, 0.0);
    const LocalObservable a = observable_from_config(c);
    const std::size_t n = single_length(c);
    if (n < 2) {
        throw InputError("chain length must be at least 2");
    }
    Csv csv(c, {"gate", "m", "n", "one_point_m", "one_point_n", "two_point", "connected"});
    for (const GateCase &gc : gates_from_config(c)) {
        const TransferSet ts = TransferSet::build(gc.gate, s);
        std::vector<double> ones(n + 1);
        for (std::size_t m = 1; m <= n; ++m) {
            ones[m] = one_point(ts, a, m, n);
        }
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t k = m + 1; k <= n; ++k) {
                const double two = two_point(ts, a, m, k, n);
                csv.cell(gc.label).cell(m).cell(k).cell(ones[m]).cell(ones[k]).cell(two);
                csv.cell(two - ones[m] * ones[k]);
                csv.end_row();
            }
        }
    }
    return {csv.str(), false};
}

CommandResult cmd_oracle_check(const RunConfig &c) {
    RunConfig defaults = c;
    if (defaults.gate.empty() && defaults.gate_file.empty()) {
        defaults.gate = "random";
    }
    const InitialState s = initial_from_config(c, 1.0, 0.0);
    const LocalObservable a = observable_from_config(c);
    const auto ns = lengths_from_config(c, "4:10");
    Csv csv(c, {"gate", "n", "dev_one_point", "dev_two_point", "dev_mean", "dev_variance",
                "max_dev", "pass"});
    bool failed = false;
    for (const GateCase &gc : gates_from_config(defaults)) {
        const TransferSet ts = TransferSet::build(gc.gate, s);
        for (std::size_t n : ns) {
            const auto psi = oracle::sweep(gc.gate, ChainSpec::make(n, s));
            double d1 = 0.0;
            double d2 = 0.0;
            for (std::size_t m = 1; m <= n; ++m) {
                d1 = std::max(d1, std::abs(one_point(ts, a, m, n) -
                                           oracle::expect_local(psi, a.matrix(), m)));
                for (std::size_t k = m + 1; k <= n; ++k) {
                    d2 = std::max(d2, std::abs(two_point(ts, a, m, k, n) -
                                               oracle::expect_pair(psi, a.matrix(), m, k)));
                }
            }
            const double dm =
                std::abs(additive_mean(ts, a, n) - oracle::collective_mean(psi, a.matrix()));
            const double dv = std::abs(additive_variance_exact(ts, a, n).total -
                                       oracle::collective_variance(psi, a.matrix()));
            const double worst = std::max({d1, d2, dm, dv});
            const bool pass = worst <= c.tol;
            failed = failed || !pass;
            csv.cell(gc.label).cell(n).cell(d1).cell(d2).cell(dm).cell(dv).cell(worst).cell(pass);
            csv.end_row();
        }
    }
    return {csv.str(), failed};
}

const std::map<std::string, CommandResult (*)(const RunConfig &)> &commands() {
    static const std::map<std::string, CommandResult (*)(const RunConfig &)> table = {
        {"spectrum", cmd_spectrum}, {"fig3", cmd_fig3},           {"fig4", cmd_fig4},
        {"neff", cmd_neff},         {"correlate", cmd_correlate}, {"oracle-check", cmd_oracle_check},
    };
    return table;
}

std::filesystem::path output_path(const RunConfig &c) {
    if (!c.out.empty()) {
        return c.out;
    }
    const char *dir = std::getenv(kOutputDirEnv);
    if (dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir) / (c.command + ".csv");
    }
    return {};
}

} // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["gate"] = gate;
    j["params"] = params;
    j["gate_file"] = gate_file;
    j["c0"] = c0 ? nlohmann::json(*c0) : nlohmann::json(nullptr);
    j["c1"] = c1 ? nlohmann::json(*c1) : nlohmann::json(nullptr);
    j["n"] = n ? nlohmann::json(*n) : nlohmann::json(nullptr);
    j["n_range"] = n_range;
    j["bloch"] = bloch;
    j["theta"] = theta ? nlohmann::json(*theta) : nlohmann::json(nullptr);
    j["chi_t"] = chi_t;
    j["seed"] = seed;
    j["tol"] = format_double(tol);
    j["out"] = out;
    return j;
}

CommandResult run_command(const RunConfig &config) {
    const auto &table = commands();
    const auto it = table.find(config.command);
    if (it == table.end()) {
        throw InputError("unknown command '" + config.command + "'");
    }
    if (!(config.tol > 0.0)) {
        throw InputError("--tol must be positive");
    }
    return it->second(config);
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Transfer-matrix analysis of sequentially generated qubit chains"};
    RunConfig c;
    std::string c0;
    std::string c1;
    std::size_t n = 0;
    std::string theta;

    std::vector<std::string> names;
    for (const auto &entry : commands()) {
        names.push_back(entry.first);
    }
    app.add_option("command", c.command, "spectrum | fig3 | fig4 | neff | correlate | oracle-check")
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--gate", c.gate, "gate family tag");
    app.add_option("--params", c.params, "comma-separated gate parameters; repeat for a sweep")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.add_option("--gate-file", c.gate_file, "JSON gate file");
    auto *o_c0 = app.add_option("--c0", c0, "first-site amplitude of |0>, 're' or 're,im'");
    auto *o_c1 = app.add_option("--c1", c1, "first-site amplitude of |1>, 're' or 're,im'");
    auto *o_n = app.add_option("--n", n, "chain length");
    app.add_option("--n-range", c.n_range, "chain lengths, 'a:b', 'a:b:step' or a list");
    app.add_option("--bloch", c.bloch, "observable direction 'x,y,z'");
    auto *o_theta = app.add_option("--theta", theta, "transverse observable angle");
    app.add_option("--chi-t", c.chi_t, "accumulated interaction values");
    app.add_option("--seed", c.seed, "seed or seed range for random gates");
    app.add_option("--tol", c.tol, "numerical tolerance");
    app.add_option("--out", c.out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInput;
    }
    if (o_c0->count() > 0) {
        c.c0 = c0;
    }
    if (o_c1->count() > 0) {
        c.c1 = c1;
    }
    if (o_n->count() > 0) {
        c.n = n;
    }
    if (o_theta->count() > 0) {
        c.theta = theta;
    }

    CommandResult result;
    try {
        result = run_command(c);
        const std::filesystem::path path = output_path(c);
        if (path.empty()) {
            out << result.csv;
        } else {
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                throw InputError("cannot write '" + path.string() + "'");
            }
            file << result.csv;
            if (!file) {
                throw InputError("write to '" + path.string() + "' failed");
            }
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
    if (result.tolerance_failure) {
        err << "error: tolerance " << format_double(c.tol) << " exceeded\n";
        return kExitNumerical;
    }
    return kExitOk;
}

} // namespace seqmps::cli
