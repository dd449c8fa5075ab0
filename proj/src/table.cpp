#include "qf/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qf {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw TableError("row width does not match the column count");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw TableError("unknown output format '" + name + "'");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return csv_quote(std::get<std::string>(c));
}

std::string json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "null";
    if (std::isinf(*d)) throw TableError("JSON cannot hold an infinite value");
    return format_double(*d);
  }
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return json_quote(std::get<std::string>(c));
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (j > 0) out += ',';
    out += csv_quote(t.columns[j]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += csv_cell(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += i == 0 ? "\n  {" : ",\n  {";
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      if (j > 0) out += ", ";
      out += json_quote(t.columns[j]) + ": " + json_cell(t.rows[i][j]);
    }
    out += '}';
  }
  out += t.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

void write_table(std::ostream& os, const Table& t, Format f) {
  os << (f == Format::Csv ? to_csv(t) : to_json(t));
}

void emit_table(const Table& t, Format f, const std::string& path) {
  if (path.empty() || path == "-") {
    write_table(std::cout, t, f);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw TableError("cannot open '" + path + "' for writing");
  write_table(os, t, f);
  if (!os) throw TableError("write to '" + path + "' failed");
}

namespace {

// Splits one CSV record starting at `pos`; returns cells as (text, quoted).
std::vector<std::pair<std::string, bool>> csv_record(const std::string& text, std::size_t& pos) {
  std::vector<std::pair<std::string, bool>> cells;
  std::string cur;
  bool quoted = false;
  while (true) {
    if (pos < text.size() && text[pos] == '"') {
      quoted = true;
      ++pos;
      while (true) {
        if (pos >= text.size()) throw TableError("unterminated quoted CSV field");
        if (text[pos] == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            cur += '"';
            pos += 2;
            continue;
          }
          ++pos;
          break;
        }
        cur += text[pos++];
      }
    }
    while (pos < text.size() && text[pos] != ',' && text[pos] != '\n') cur += text[pos++];
    cells.emplace_back(std::move(cur), quoted);
    cur.clear();
    quoted = false;
    if (pos >= text.size() || text[pos] == '\n') {
      ++pos;
      return cells;
    }
    ++pos;  // comma
  }
}

Cell csv_value(const std::string& s, bool quoted) {
  if (quoted) return s;
  if (s == "true") return true;
  if (s == "false") return false;
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw TableError("bad CSV number '" + s + "'");
  return d;
}

}  // namespace

Table parse_csv(const std::string& text) {
  Table t;
  std::size_t pos = 0;
  if (text.empty()) throw TableError("CSV has no header");
  for (auto& [name, quoted] : csv_record(text, pos)) t.columns.push_back(name);
  while (pos < text.size()) {
    std::vector<Cell> row;
    for (auto& [s, quoted] : csv_record(text, pos)) row.push_back(csv_value(s, quoted));
    t.add_row(std::move(row));
  }
  return t;
}

Table parse_json(const std::string& text) {
  Table t;
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw TableError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_array()) throw TableError("JSON table must be an array");
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw TableError("JSON rows must be objects");
    if (t.columns.empty() && t.rows.empty()) {
      for (const auto& [key, _] : obj.items()) t.columns.push_back(key);
    }
    std::vector<Cell> row;
    for (const auto& col : t.columns) {
      if (!obj.contains(col)) throw TableError("JSON row lacks column '" + col + "'");
      const auto& v = obj.at(col);
      if (v.is_boolean()) row.emplace_back(v.get<bool>());
      else if (v.is_number()) row.emplace_back(v.get<double>());
      else if (v.is_null()) row.emplace_back(std::nan(""));
      else if (v.is_string()) row.emplace_back(v.get<std::string>());
      else throw TableError("unsupported JSON cell in column '" + col + "'");
    }
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace qf
