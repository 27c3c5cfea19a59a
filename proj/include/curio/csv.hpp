// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace curio {

/// Shortest decimal representation that round-trips the exact double.
/// Used for every floating-point field written to disk, so reruns are
/// byte-identical.
std::string format_double(double value);

/// Minimal CSV table: numeric and identifier fields only, '.' decimal
/// separator, '\n' line endings, no quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reads a CSV file and checks the header matches exactly.
/// Throws IoError on unreadable files, a wrong header, or rows whose field
/// count differs from the header (message cites the 1-based row number).
CsvTable read_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& expected_header);

/// Parses a CSV field as double / integer; throws IoError citing the field
/// and row number on failure.
double parse_double_field(const std::string& field, std::size_t row_number);
std::uint64_t parse_u64_field(const std::string& field, std::size_t row_number);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace curio
