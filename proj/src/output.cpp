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

#include "cmax/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cmax/model.hpp"

namespace cmax::io {

namespace {

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return quote_csv(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

std::string metadata_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw DomainError("unknown format '" + name + "'");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& os, const Envelope& env) {
  for (const auto& [key, value] : env.metadata.items()) {
    os << "# " << key << ": " << metadata_value(value) << '\n';
  }
  os << "# columns: ";
  for (std::size_t i = 0; i < env.table.columns.size(); ++i) os << (i ? "," : "") << env.table.columns[i];
  os << '\n';
  for (std::size_t i = 0; i < env.table.columns.size(); ++i) os << (i ? "," : "") << quote_csv(env.table.columns[i]);
  os << '\n';
  for (const auto& row : env.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Envelope& env) {
  nlohmann::ordered_json doc;
  doc["metadata"] = env.metadata;
  doc["metadata"]["columns"] = env.table.columns;
  auto& data = doc["data"] = nlohmann::ordered_json::array();
  for (const auto& row : env.table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(json_cell(cell));
    data.push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

void write(std::ostream& os, const Envelope& env, Format format) {
  if (format == Format::json) {
    write_json(os, env);
  } else {
    write_csv(os, env);
  }
}

std::string data_section(const std::string& document, Format format) {
  if (format == Format::json) {
    return nlohmann::ordered_json::parse(document).at("data").dump();
  }
  std::istringstream in(document);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace cmax::io
