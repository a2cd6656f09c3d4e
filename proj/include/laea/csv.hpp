#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laea {

/// Shortest round-trip decimal representation (std::to_chars), so reruns
/// with identical values emit identical bytes.
std::string format_double(double value);

/// Fixed-point formatting with the given number of decimal places.
std::string format_fixed(double value, int places);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

std::vector<std::string> split_csv_line(const std::string& line);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv_file(const std::string& path);

}  // namespace laea
