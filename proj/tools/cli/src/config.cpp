// Copyright 2026 The qcf Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qcf_cli/config.hpp"

#include <charconv>
#include <cmath>

namespace qcf::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(what) + ": cannot parse '" + std::string(text) +
                          "' as a number");
    }
    return v;
}

// Guards the node count against step rounding, e.g. 0:1.5:0.01.
constexpr double kGridSlack = 1e-9;

} // namespace

std::string_view command_name(Command c) noexcept {
    switch (c) {
    case Command::Fig1: return "fig1";
    case Command::Fig2: return "fig2";
    case Command::Fig3: return "fig3";
    case Command::Witness: return "witness";
    case Command::Sample: return "sample";
    case Command::OracleCheck: return "oracle-check";
    case Command::Kmax: return "kmax";
    }
    return "unknown";
}

Grid Grid::parse(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw ConfigError("grid '" + std::string(text) + "' is not min:max:step");
    }
    Grid g;
    g.min = parse_double(text.substr(0, c1), "grid min");
    g.max = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid max");
    g.step = parse_double(text.substr(c2 + 1), "grid step");
    g.validate("grid");
    return g;
}

void Grid::validate(std::string_view what) const {
    if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
        throw ConfigError(std::string(what) + ": bounds and step must be finite");
    }
    if (!(step > 0.0)) {
        throw ConfigError(std::string(what) + ": step must be > 0");
    }
    if (max < min) {
        throw ConfigError(std::string(what) + ": max < min gives an empty grid");
    }
    if ((max - min) / step > 1e7) {
        throw ConfigError(std::string(what) + ": more than 1e7 nodes");
    }
}

std::vector<double> Grid::nodes() const {
    const auto n = static_cast<std::size_t>(std::floor((max - min) / step + kGridSlack)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = min + static_cast<double>(i) * step;
    }
    return out;
}

std::string Grid::to_string() const {
    return format_number(min) + ":" + format_number(max) + ":" + format_number(step);
}

void RunConfig::validate() const {
    if (!(std::isfinite(gamma) && gamma > 0.0)) {
        throw ConfigError("--gamma must be finite and > 0");
    }
    if (nbar && !(std::isfinite(*nbar) && *nbar >= 0.0)) {
        throw ConfigError("--nbar must be finite and >= 0");
    }
    if (k_grid) {
        k_grid->validate("--k-grid");
    }
    if (t_grid) {
        t_grid->validate("--t-grid");
        if (t_grid->min < 0.0) {
            throw ConfigError("--t-grid must start at gamma t >= 0");
        }
    }
    if (samples == 0) {
        throw ConfigError("--samples must be >= 1");
    }
    if (!(std::isfinite(sigmas) && sigmas > 0.0)) {
        throw ConfigError("--sigmas must be finite and > 0");
    }
    if (n_trunc < 8) {
        throw ConfigError("--n-trunc must be >= 8");
    }
    if (workers == 0) {
        throw ConfigError("--workers must be >= 1");
    }
    if (!std::isfinite(phi)) {
        throw ConfigError("--phi must be finite");
    }
    if (!(std::isfinite(gamma_t) && gamma_t >= 0.0)) {
        throw ConfigError("--time must be finite and >= 0");
    }
}

std::string format_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

} // namespace qcf::cli
