#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twostate {

struct CsvTable {
  std::vector<std::string> metadata;  // written as "# " lines before the header
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 12 significant digits, '.' separator, shortest of fixed/scientific;
/// independent of the global locale.
std::string format_number(double value);

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);

}  // namespace twostate
