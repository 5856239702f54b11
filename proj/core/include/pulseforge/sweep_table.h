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

#ifndef PULSEFORGE_SWEEP_TABLE_H
#define PULSEFORGE_SWEEP_TABLE_H

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pulseforge {

/// Library version string, recorded in CSV metadata.
const char *version();

/// Columnar numeric results keyed by a strictly increasing first column.
///
/// Rows must be rectangular and finite; add_row throws
/// std::invalid_argument otherwise.
class SweepTable {
  public:
    SweepTable(std::string name, std::vector<std::string> columns);

    void add_row(std::vector<double> row);
    void add_metadata(std::string key, std::string value);

    const std::string &name() const { return name_; }
    const std::vector<std::string> &columns() const { return columns_; }
    const std::vector<std::vector<double>> &rows() const { return rows_; }
    const std::vector<std::pair<std::string, std::string>> &metadata() const { return metadata_; }

    size_t column_index(const std::string &label) const;
    std::vector<double> column(const std::string &label) const;

    /// '#'-prefixed metadata (optional), header line, then one row per grid
    /// point in %.16e. LF line endings.
    void write_csv(std::ostream &out, bool include_metadata = true) const;
    std::string to_csv(bool include_metadata = true) const;

  private:
    std::string name_;
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

/// 17 significant digits in scientific notation.
std::string format_scientific(double value);

}  // namespace pulseforge

#endif  // PULSEFORGE_SWEEP_TABLE_H
