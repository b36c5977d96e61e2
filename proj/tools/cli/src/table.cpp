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


#include "qcf_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace qcf::cli {

namespace {

std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void FigureTable::add_row(std::vector<double> row) {
    rows.push_back(std::move(row));
}

void FigureTable::validate() const {
    if (columns.empty()) {
        throw std::logic_error("table has no columns");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != columns.size()) {
            throw std::logic_error("row " + std::to_string(r) + " has " +
                                   std::to_string(rows[r].size()) + " cells, expected " +
                                   std::to_string(columns.size()));
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (!std::isfinite(rows[r][c])) {
                throw std::logic_error("non-finite value in column " + columns[c] +
                                       ", row " + std::to_string(r));
            }
        }
    }
}

std::size_t FigureTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named " + name);
}

void write_csv(std::ostream &os, const FigureTable &table) {
    for (const auto &[key, value] : table.metadata) {
        os << "# " << key << ": " << value << '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c];
    }
    os << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << cell(row[c]);
        }
        os << '\n';
    }
}

void write_json(std::ostream &os, const FigureTable &table) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[key, value] : table.metadata) {
        meta[key] = value;
    }
    nlohmann::ordered_json doc;
    doc["metadata"] = std::move(meta);
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    os << doc.dump(2) << '\n';
}

} // namespace qcf::cli
