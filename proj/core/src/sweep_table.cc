// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pulseforge/sweep_table.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifndef PULSEFORGE_VERSION
#define PULSEFORGE_VERSION "unknown"
#endif

namespace pulseforge {

const char *version() { return PULSEFORGE_VERSION; }

std::string format_scientific(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

SweepTable::SweepTable(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
    if (columns_.empty()) {
        throw std::invalid_argument("sweep table needs at least one column");
    }
}

void SweepTable::add_row(std::vector<double> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("sweep table row width does not match the header");
    }
    for (double x : row) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("sweep table values must be finite");
        }
    }
    if (!rows_.empty() && !(row[0] > rows_.back()[0])) {
        throw std::invalid_argument("sweep table grid coordinates must be strictly increasing");
    }
    rows_.push_back(std::move(row));
}

void SweepTable::add_metadata(std::string key, std::string value) {
    metadata_.emplace_back(std::move(key), std::move(value));
}

size_t SweepTable::column_index(const std::string &label) const {
    for (size_t k = 0; k < columns_.size(); k++) {
        if (columns_[k] == label) {
            return k;
        }
    }
    throw std::out_of_range("no column named '" + label + "' in table " + name_);
}

std::vector<double> SweepTable::column(const std::string &label) const {
    size_t k = column_index(label);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(row[k]);
    }
    return out;
}

void SweepTable::write_csv(std::ostream &out, bool include_metadata) const {
    if (include_metadata) {
        out << "# table: " << name_ << '\n';
        for (const auto &[key, value] : metadata_) {
            out << "# " << key << ": " << value << '\n';
        }
        out << "# pulseforge_version: " << version() << '\n';
    }
    for (size_t k = 0; k < columns_.size(); k++) {
        out << (k ? "," : "") << columns_[k];
    }
    out << '\n';
    for (const auto &row : rows_) {
        for (size_t k = 0; k < row.size(); k++) {
            out << (k ? "," : "") << format_scientific(row[k]);
        }
        out << '\n';
    }
}

std::string SweepTable::to_csv(bool include_metadata) const {
    std::ostringstream out;
    write_csv(out, include_metadata);
    return out.str();
}

}  // namespace pulseforge
