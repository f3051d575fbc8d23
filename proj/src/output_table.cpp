#include "charherm/output_table.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace charherm {

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(ch);
    }
  }
  out.push_back('"');
  return out;
}

std::string json_value(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return std::isfinite(*d) ? format_number(*d) : "null";
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return json_escape(std::get<std::string>(cell));
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

Cell parse_cell(const std::string& text) {
  if (text.empty()) return text;
  const char* begin = text.c_str();
  char* end = nullptr;
  const bool integral = text.find_first_of(".eEn") == std::string::npos;
  if (integral) {
    errno = 0;
    const long long v = std::strtoll(begin, &end, 10);
    if (errno == 0 && end == begin + text.size()) return static_cast<std::int64_t>(v);
  }
  const double d = std::strtod(begin, &end);
  if (end == begin + text.size()) return d;
  return text;
}

}  // namespace

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("output table: row width " + std::to_string(row.size()) +
                                " does not match header width " +
                                std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(const OutputTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << cell_text(row[i]);
    }
    out << '\n';
  }
}

void write_json(const OutputTable& table, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      out << (i ? ", " : "") << json_escape(table.header[i]) << ": "
          << json_value(table.rows[r][i]);
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const OutputTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

OutputTable read_csv(std::string_view text) {
  OutputTable table;
  bool first = true;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    const auto fields = split_line(line);
    if (first) {
      table.header = fields;
      first = false;
      continue;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f));
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace charherm
