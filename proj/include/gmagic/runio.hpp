// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMAGIC_RUNIO_HPP_
#define GMAGIC_RUNIO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gmagic {

inline constexpr const char *kVersion = "0.1.0";

using Cell = std::variant<double, std::int64_t, std::string>;

/// Run metadata written ahead of every table; `config` keeps insertion order
/// so a file can be replayed from its own header.
struct TableMeta {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config;

    void add(const std::string &key, const std::string &value) { config.emplace_back(key, value); }
    void add(const std::string &key, double value);
    void add(const std::string &key, std::int64_t value);
    void add(const std::string &key, int value) { add(key, static_cast<std::int64_t>(value)); }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// 17 significant digits; enough to round-trip a double exactly.
std::string format_real(double v);

/// ISO-8601 UTC timestamp; honors SOURCE_DATE_EPOCH for reproducible output.
std::string run_timestamp();

/// CSV with '#'-prefixed metadata header lines.
void write_csv(const std::string &path, const TableMeta &meta, const Table &table);

/// The same content as one structured JSON document.
void write_json(const std::string &path, const TableMeta &meta, const Table &table);

/// Dispatches on `json`; appends the matching extension when `path` has none.
std::string write_table(const std::string &path, bool json, const TableMeta &meta,
                        const Table &table);

}  // namespace gmagic

#endif  // GMAGIC_RUNIO_HPP_
