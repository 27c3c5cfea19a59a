// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "curio/csv.hpp"
#include "curio/errors.hpp"

using namespace curio;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("format_double round trips exactly") {
  for (const double value : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-9, 1e300,
                             0.6321205588285577}) {
    const std::string text = format_double(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("write_row joins fields with commas") {
  std::ostringstream out;
  write_row(out, {"a", "b", "c"});
  write_row(out, {"1", "2", "3"});
  CHECK(out.str() == "a,b,c\n1,2,3\n");
}

TEST_CASE("read_csv returns rows matching the header") {
  const fs::path path = write_temp("curio_csv_ok.csv", "x,y\n1,2\n3,4\n");
  const CsvTable table = read_csv(path, {"x", "y"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[1][0] == "3");
  fs::remove(path);
}

TEST_CASE("read_csv tolerates CRLF endings and trailing blank lines") {
  const fs::path path = write_temp("curio_csv_crlf.csv", "x,y\r\n1,2\r\n\n");
  const CsvTable table = read_csv(path, {"x", "y"});
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0][1] == "2");
  fs::remove(path);
}

TEST_CASE("read_csv rejects malformed inputs") {
  CHECK_THROWS_AS(read_csv(fs::temp_directory_path() / "curio_does_not_exist.csv",
                           {"x"}),
                  IoError);

  const fs::path bad_header = write_temp("curio_csv_header.csv", "a,b\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad_header, {"x", "y"}), IoError);
  fs::remove(bad_header);

  const fs::path ragged = write_temp("curio_csv_ragged.csv", "x,y\n1,2\n3\n");
  try {
    (void)read_csv(ragged, {"x", "y"});
    FAIL("expected IoError");
  } catch (const IoError& error) {
    CHECK(std::string(error.what()).find("row 3") != std::string::npos);
  }
  fs::remove(ragged);

  const fs::path empty = write_temp("curio_csv_empty.csv", "");
  CHECK_THROWS_AS(read_csv(empty, {"x", "y"}), IoError);
  fs::remove(empty);
}

TEST_CASE("field parsers cite the offending row") {
  CHECK(parse_double_field("2.5", 2) == 2.5);
  CHECK(parse_u64_field("17", 2) == 17);
  try {
    (void)parse_double_field("abc", 5);
    FAIL("expected IoError");
  } catch (const IoError& error) {
    CHECK(std::string(error.what()).find("row 5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_u64_field("-2", 7), IoError);
  CHECK_THROWS_AS(parse_u64_field("1.5", 7), IoError);
  CHECK_THROWS_AS(parse_double_field("1.5x", 7), IoError);
}
