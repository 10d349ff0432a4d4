// Copyright 2026 The cmaxlab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cmax::io {

inline constexpr const char* kSchemaVersion = "1.0.0";

enum class Format { csv, json, text };

Format parse_format(const std::string& name);

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Output unit of every subcommand: metadata plus a column-declared table.
/// CSV puts metadata in leading "# key: value" lines followed by the header
/// row and the data; JSON is {"metadata": {..., "columns": [...]}, "data": [[...]]}.
struct Envelope {
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  Table table;
};

/// 17 significant digits, round-trip exact for double.
std::string format_double(double value);

void write_csv(std::ostream& os, const Envelope& env);
void write_json(std::ostream& os, const Envelope& env);
void write(std::ostream& os, const Envelope& env, Format format);

/// The reproducible part of an emitted document: CSV without '#' lines, or
/// the JSON "data" array re-serialised.
std::string data_section(const std::string& document, Format format);

}  // namespace cmax::io
