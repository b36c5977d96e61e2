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
 * Tabular command output: named columns, rows of reals, and a metadata block
 * written as leading '#' lines in CSV or as an object in JSON.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcf::cli {

struct FigureTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    void add_row(std::vector<double> row);

    /// Row widths match the header and every cell is finite.
    void validate() const;

    /// Column index by name; throws std::out_of_range.
    [[nodiscard]] std::size_t column(const std::string &name) const;
};

/// 17 significant digits, '.' separator.
void write_csv(std::ostream &os, const FigureTable &table);
void write_json(std::ostream &os, const FigureTable &table);

} // namespace qcf::cli
