#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace fluxcnot::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-named records. Numeric column names carry a unit suffix.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Header row then one line per record; floats with 12 significant digits.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by column name. Non-finite floats become strings
/// ("inf", "-inf", "nan").
nlohmann::ordered_json records(const Table& table);

std::string format_double(double x);

}  // namespace fluxcnot::cli
