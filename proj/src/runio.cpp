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

#include "gmagic/runio.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "gmagic/errors.hpp"

namespace gmagic {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void TableMeta::add(const std::string &key, double value) { add(key, format_real(value)); }

void TableMeta::add(const std::string &key, std::int64_t value) {
    add(key, std::to_string(value));
}

std::string run_timestamp() {
    std::time_t t;
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::time(nullptr);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

std::string cell_text(const Cell &cell) {
    if (const auto *d = std::get_if<double>(&cell)) return format_real(*d);
    if (const auto *i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    return std::get<std::string>(cell);
}

std::ofstream open_or_throw(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open output file: " + path);
    }
    return out;
}

}  // namespace

void write_csv(const std::string &path, const TableMeta &meta, const Table &table) {
    std::ofstream out = open_or_throw(path);
    out << "# gmagic " << kVersion << "\n";
    out << "# command = " << meta.command << "\n";
    out << "# seed = " << meta.seed << "\n";
    out << "# timestamp = " << run_timestamp() << "\n";
    for (const auto &[key, value] : meta.config) {
        out << "# " << key << " = " << value << "\n";
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    }
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << cell_text(row[c]) << (c + 1 < row.size() ? "," : "\n");
        }
    }
}

void write_json(const std::string &path, const TableMeta &meta, const Table &table) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    doc["command"] = meta.command;
    doc["seed"] = meta.seed;
    doc["timestamp"] = run_timestamp();
    nlohmann::ordered_json config;
    for (const auto &[key, value] : meta.config) config[key] = value;
    doc["config"] = std::move(config);
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const Cell &cell : row) {
            if (const auto *d = std::get_if<double>(&cell)) {
                jrow.push_back(*d);
            } else if (const auto *i = std::get_if<std::int64_t>(&cell)) {
                jrow.push_back(*i);
            } else {
                jrow.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    std::ofstream out = open_or_throw(path);
    out << doc.dump(2) << "\n";
}

std::string write_table(const std::string &path, bool json, const TableMeta &meta,
                        const Table &table) {
    std::string full = path;
    if (full.find('.') == std::string::npos) {
        full += json ? ".json" : ".csv";
    }
    if (json) {
        write_json(full, meta, table);
    } else {
        write_csv(full, meta, table);
    }
    return full;
}

}  // namespace gmagic
