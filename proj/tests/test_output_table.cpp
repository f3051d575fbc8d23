#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "charherm/output_table.hpp"

using namespace charherm;

namespace {

OutputTable sample() {
  OutputTable t;
  t.header = {"a", "n", "value", "error"};
  t.add_row({100.0, std::int64_t{93}, 0.1 + 0.2, std::string("")});
  t.add_row({1e5, std::int64_t{99000}, -1.2345678901234567e-300, std::string("not_found")});
  t.add_row({2.5, std::int64_t{-4}, 1.0 / 3.0, std::string("")});
  return t;
}

// Numeric value of a cell; 100.0 prints as "100" and reads back as an integer.
double as_number(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::get<double>(c);
}

}  // namespace

TEST_CASE("rows must match the header width") {
  OutputTable t;
  t.header = {"x", "y"};
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
  t.add_row({1.0, 2.0});
  CHECK(t.rows.size() == 1);
}

TEST_CASE("numbers carry seventeen significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-1.0) == "-1");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double v : {0.1 + 0.2, 1.0 / 3.0, 6.02214076e23, 5e-324}) {
    CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("csv layout and round trip") {
  const OutputTable t = sample();
  std::ostringstream out;
  write_csv(t, out);
  const std::string text = out.str();
  CHECK(text.rfind("a,n,value,error\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  const OutputTable back = read_csv(text);
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    CHECK(as_number(back.rows[r][0]) == as_number(t.rows[r][0]));
    CHECK(std::get<std::int64_t>(back.rows[r][1]) == std::get<std::int64_t>(t.rows[r][1]));
    CHECK(as_number(back.rows[r][2]) == as_number(t.rows[r][2]));
    CHECK(std::get<std::string>(back.rows[r][3]) == std::get<std::string>(t.rows[r][3]));
  }
}

TEST_CASE("json and csv emissions describe the same table") {
  const OutputTable t = sample();
  std::ostringstream json_out;
  write_table(t, OutputFormat::kJson, json_out);
  const auto parsed = nlohmann::json::parse(json_out.str());
  std::ostringstream csv_out;
  write_table(t, OutputFormat::kCsv, csv_out);
  const OutputTable from_csv = read_csv(csv_out.str());

  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == from_csv.rows.size());
  for (std::size_t r = 0; r < parsed.size(); ++r) {
    const auto& obj = parsed[r];
    CHECK(obj.size() == from_csv.header.size());
    CHECK(obj.at("a").get<double>() == as_number(from_csv.rows[r][0]));
    CHECK(obj.at("n").get<std::int64_t>() == std::get<std::int64_t>(from_csv.rows[r][1]));
    CHECK(obj.at("value").get<double>() == as_number(from_csv.rows[r][2]));
    CHECK(obj.at("error").get<std::string>() == std::get<std::string>(from_csv.rows[r][3]));
  }
}

TEST_CASE("non-finite values become null in json") {
  OutputTable t;
  t.header = {"v"};
  t.add_row({std::numeric_limits<double>::quiet_NaN()});
  std::ostringstream out;
  write_json(t, out);
  const auto parsed = nlohmann::json::parse(out.str());
  CHECK(parsed[0].at("v").is_null());
}

TEST_CASE("empty table") {
  OutputTable t;
  t.header = {"x"};
  std::ostringstream out;
  write_json(t, out);
  CHECK(nlohmann::json::parse(out.str()).empty());
}
