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


/**
 * @file
 * Run configuration for the qcf command-line tool.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/types.hpp"

namespace qcf::cli {

/// Bad flags or flag combinations. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Unreadable input or unwritable output. Maps to exit code 4.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Command { Fig1, Fig2, Fig3, Witness, Sample, OracleCheck, Kmax };
enum class Format { Csv, Json };

[[nodiscard]] std::string_view command_name(Command c) noexcept;

/// Inclusive uniform grid min, min+step, ..., up to max.
struct Grid {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    /// "min:max:step"
    static Grid parse(std::string_view text);

    void validate(std::string_view what) const;
    [[nodiscard]] std::vector<double> nodes() const;
    [[nodiscard]] std::string to_string() const;
};

struct RunConfig {
    Command command = Command::Fig1;
    std::optional<StateSpec> state;
    double gamma = 1.0;
    std::optional<double> nbar;
    std::optional<Grid> k_grid;
    std::optional<Grid> t_grid;
    std::size_t samples = 1000000;
    std::uint64_t seed = 0;
    std::string out_path; ///< empty: stdout
    Format format = Format::Csv;
    double sigmas = 5.0;
    std::size_t n_trunc = 64;
    unsigned workers = 1;
    double phi = 0.0;
    double gamma_t = 0.0;     ///< evolution time for sample/witness
    std::string data_path;    ///< witness: read samples instead of drawing
    std::string dataset_out;  ///< sample: also write the raw samples

    /// Throws ConfigError on values no command accepts.
    void validate() const;

    /// Per-command defaults.
    [[nodiscard]] StateSpec state_or(const StateSpec &fallback) const {
        return state.value_or(fallback);
    }
    [[nodiscard]] BathParams bath_or(double nbar_default) const {
        return BathParams{gamma, nbar.value_or(nbar_default)};
    }
    [[nodiscard]] Grid k_grid_or(Grid fallback) const {
        return k_grid.value_or(fallback);
    }
    [[nodiscard]] Grid t_grid_or(Grid fallback) const {
        return t_grid.value_or(fallback);
    }
};

/// Shortest round-trip text for a double.
[[nodiscard]] std::string format_number(double v);

} // namespace qcf::cli
