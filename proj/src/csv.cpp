// SPDX-License-Identifier: Apache-2.0
#include "curio/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "curio/errors.hpp"

namespace curio {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::logic_error("format_double: buffer too small");
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += fields[i];
  }
  return out;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& expected_header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  CsvTable table;
  std::string line;
  std::size_t row_number = 0;
  while (std::getline(in, line)) {
    ++row_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (row_number == 1) {
      if (fields != expected_header)
        throw IoError(path.string() + ": expected header '" + join(expected_header) +
                      "', got '" + line + "'");
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() != expected_header.size())
      throw IoError(path.string() + ": row " + std::to_string(row_number) + " has " +
                    std::to_string(fields.size()) + " fields, expected " +
                    std::to_string(expected_header.size()));
    table.rows.push_back(std::move(fields));
  }
  if (table.header.empty())
    throw IoError(path.string() + ": empty file, expected header '" +
                  join(expected_header) + "'");
  return table;
}

double parse_double_field(const std::string& field, std::size_t row_number) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw IoError("row " + std::to_string(row_number) + ": '" + field +
                  "' is not a number");
  return value;
}

std::uint64_t parse_u64_field(const std::string& field, std::size_t row_number) {
  std::uint64_t value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw IoError("row " + std::to_string(row_number) + ": '" + field +
                  "' is not a non-negative integer");
  return value;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace curio
