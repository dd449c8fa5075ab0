#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qf {

using Cell = std::variant<double, std::string, bool>;

// Rows share the column list; every row has one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

Format parse_format(const std::string& name);

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Doubles are written with 17 significant digits.
std::string format_double(double x);

void write_table(std::ostream& os, const Table& t, Format f);
// Writes to `path`, or to stdout when the path is empty or "-".
void emit_table(const Table& t, Format f, const std::string& path);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Inverses of the writers. CSV cells: quoted text is a string, true/false a
// bool, anything else a double.
Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

}  // namespace qf
