// SPDX-License-Identifier: Apache-2.0
#include "silbound/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "silbound/error.hpp"

namespace silbound {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void append_number(std::string& line, double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  line.append(buffer, ptr);
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<std::vector<double>> parse_numeric_csv(std::istream& in, bool has_header) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view field =
          trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                               std::to_string(row.size() + 1) + ": '" + std::string(field) +
                                               "' is not a number");
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::NonFiniteInput, "line " + std::to_string(line_no) + ", column " +
                                                   std::to_string(row.size() + 1) + " is not finite");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(rows.front().size()) + " columns, found " +
                                             std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PointSet read_points_csv(const std::filesystem::path& path, bool has_header) {
  auto in = open_input(path);
  const auto rows = parse_numeric_csv(in, has_header);
  if (rows.size() < 2) {
    throw Error(ErrorCode::ParseError, "'" + path.string() + "' holds fewer than 2 points");
  }
  return PointSet::from_rows(rows);
}

DissimilarityMatrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto rows = parse_numeric_csv(in, false);
  if (!rows.empty() && rows.size() != rows.front().size()) {
    throw Error(ErrorCode::NotSquare, "'" + path.string() + "' has " + std::to_string(rows.size()) + " rows and " +
                                          std::to_string(rows.front().size()) + " columns");
  }
  return validate_matrix(rows);
}

std::vector<int> read_labels_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      if (first) {
        first = false;
        continue;
      }
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": '" + std::string(text) + "' is not an integer label");
    }
    first = false;
    labels.push_back(value);
  }
  return labels;
}

void write_points_csv(const std::filesystem::path& path, const PointSet& points) {
  auto out = open_output(path);
  std::string line;
  for (std::size_t i = 0; i < points.size(); ++i) {
    line.clear();
    const auto p = points.point(i);
    for (std::size_t d = 0; d < p.size(); ++d) {
      if (d > 0) line.push_back(',');
      append_number(line, p[d]);
    }
    line.push_back('\n');
    out << line;
  }
  finish(out, path);
}

void write_matrix_csv(const std::filesystem::path& path, const DissimilarityMatrix& delta) {
  auto out = open_output(path);
  std::string line;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    line.clear();
    const auto row = delta.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line.push_back(',');
      append_number(line, row[j]);
    }
    line.push_back('\n');
    out << line;
  }
  finish(out, path);
}

void write_labels_csv(const std::filesystem::path& path, std::span<const int> labels) {
  auto out = open_output(path);
  for (const int label : labels) out << label << '\n';
  finish(out, path);
}

}  // namespace silbound
