#pragma once

#include <string>
#include <vector>

#include "settune/error.hpp"

namespace settune::io {

/// Comma-separated table with a header row and LF line endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw InvariantError("CSV row width does not match header");
    rows.push_back(std::move(row));
  }

  std::string render() const {
    std::string out;
    append_line(out, header);
    for (const auto& r : rows) append_line(out, r);
    return out;
  }

 private:
  static void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quoted(cells[i]);
    }
    out += '\n';
  }

  static std::string quoted(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char c : cell) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
};

}  // namespace settune::io
