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


#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "seqmps/cli.hpp"
#include "seqmps/errors.hpp"

namespace seqmps::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

double parse_number(const std::string &text, std::string_view context) {
    if (text.empty()) {
        throw InputError("empty number in '" + std::string(context) + "'");
    }
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
        throw InputError("cannot parse '" + text + "' in '" + std::string(context) + "'");
    }
    return v;
}

std::size_t parse_count(const std::string &text, std::string_view context) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("expected a non-negative integer, got '" + text + "' in '" +
                         std::string(context) + "'");
    }
    errno = 0;
    const unsigned long long v = std::strtoull(text.c_str(), nullptr, 10);
    if (errno == ERANGE) {
        throw InputError("integer out of range in '" + std::string(context) + "'");
    }
    return static_cast<std::size_t>(v);
}

// One signed term: a number, or [coef][*]pi[/den].
double parse_term(const std::string &term, std::string_view context) {
    const auto pos = term.find("pi");
    if (pos == std::string::npos) {
        return parse_number(term, context);
    }
    std::string coef = term.substr(0, pos);
    std::string rest = term.substr(pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
    }
    double scale = 1.0;
    if (coef == "-") {
        scale = -1.0;
    } else if (coef == "+") {
        scale = 1.0;
    } else if (!coef.empty()) {
        scale = parse_number(coef, context);
    }
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw InputError("unexpected '" + rest + "' after pi in '" + std::string(context) + "'");
        }
        const double den = parse_number(rest.substr(1), context);
        if (den == 0.0) {
            throw InputError("division by zero in '" + std::string(context) + "'");
        }
        return scale * std::numbers::pi / den;
    }
    return scale * std::numbers::pi;
}

} // namespace

double parse_angle(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw InputError("empty angle");
    }
    double total = 0.0;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const bool boundary = i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' &&
                                                s[i - 1] != 'E' && s[i - 1] != '*' && s[i - 1] != '/');
        if (boundary) {
            total += parse_term(s.substr(start, i - start), text);
            start = i;
        }
    }
    return total;
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    if (trim(text).empty()) {
        return out;
    }
    for (const std::string &part : split(text, ',')) {
        out.push_back(parse_angle(part));
    }
    return out;
}

cplx parse_complex(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) {
        return {parse_angle(parts[0]), 0.0};
    }
    if (parts.size() == 2) {
        return {parse_angle(parts[0]), parse_angle(parts[1])};
    }
    throw InputError("complex amplitude must be 're' or 're,im', got '" + std::string(text) + "'");
}

std::vector<std::size_t> parse_size_range(std::string_view text) {
    const std::string s = trim(text);
    std::vector<std::size_t> out;
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 2 && parts.size() != 3) {
            throw InputError("range must be 'a:b' or 'a:b:step', got '" + s + "'");
        }
        const std::size_t a = parse_count(parts[0], s);
        const std::size_t b = parse_count(parts[1], s);
        const std::size_t step = parts.size() == 3 ? parse_count(parts[2], s) : 1;
        if (step == 0 || b < a) {
            throw InputError("empty or invalid range '" + s + "'");
        }
        for (std::size_t v = a; v <= b; v += step) {
            out.push_back(v);
        }
        return out;
    }
    for (const std::string &part : split(s, ',')) {
        out.push_back(parse_count(part, s));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) {
            throw InputError("list must be strictly ascending: '" + s + "'");
        }
    }
    return out;
}

Gate gate_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw InputError("gate file must hold a single JSON object");
    }
    const bool has_family = j.contains("family");
    const bool has_matrix = j.contains("matrix");
    if (has_family == has_matrix) {
        throw InputError("gate file needs exactly one of 'family' or 'matrix'");
    }
    if (has_family) {
        if (!j["family"].is_string()) {
            throw InputError("'family' must be a string");
        }
        std::vector<double> params;
        if (j.contains("params")) {
            if (!j["params"].is_array()) {
                throw InputError("'params' must be an array");
            }
            for (const auto &p : j["params"]) {
                if (p.is_number()) {
                    params.push_back(p.get<double>());
                } else if (p.is_string()) {
                    params.push_back(parse_angle(p.get<std::string>()));
                } else {
                    throw InputError("gate parameters must be numbers or angle strings");
                }
            }
        }
        return make_family_gate(parse_gate_family(j["family"].get<std::string>()), params);
    }
    const auto &m = j["matrix"];
    if (!m.is_array() || m.size() != 4) {
        throw InputError("'matrix' must have 4 rows");
    }
    CMatrix u(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        if (!m[r].is_array() || m[r].size() != 4) {
            throw InputError("matrix row " + std::to_string(r) + " must have 4 entries");
        }
        for (std::size_t c = 0; c < 4; ++c) {
            const auto &e = m[r][c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw InputError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be [re, im]");
            }
            u(r, c) = {e[0].get<double>(), e[1].get<double>()};
        }
    }
    return Gate::from_matrix(std::move(u));
}

Gate load_gate_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open gate file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw InputError("gate file '" + path + "': " + e.what());
    }
    return gate_from_json(j);
}

nlohmann::json gate_to_json(const Gate &g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 4; ++c) {
            row.push_back({g.matrix()(r, c).real(), g.matrix()(r, c).imag()});
        }
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

} // namespace seqmps::cli
