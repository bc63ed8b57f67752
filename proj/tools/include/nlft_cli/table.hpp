#ifndef NLFT_CLI_TABLE_HPP
#define NLFT_CLI_TABLE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nlft/partitions.hpp"

namespace nlft::cli {

using Cell = std::variant<long long, BigInt, double, bool, std::string>;

enum class OutputFormat { csv, json };

/// Column-named result table with an optional checksum footer.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> footer;

  void add_row(std::vector<Cell> row);
};

/// %.17g-style text, independent of the global locale.
std::string format_double(double value);

/// CSV: header line, one line per row, then "# key=value" footer lines.
void write_csv(std::ostream& os, const Table& table);

/// JSON object {command, columns, rows, footer}. Big integers beyond 2^53
/// are written as strings.
void write_json(std::ostream& os, const Table& table);

void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace nlft::cli

#endif  // NLFT_CLI_TABLE_HPP
