#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gf2m::cli {

enum class Format { Table, Csv, Json };

Format parse_format(std::string_view name);

// Column display width of a UTF-8 string (one cell per code point).
std::size_t display_width(std::string_view s);

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  // Aligned columns, two spaces apart, dashed rule under the header.
  void print_text(std::ostream& os) const;
  // RFC 4180 quoting where needed.
  void print_csv(std::ostream& os) const;
  // Array of objects keyed by header, in column order.
  nlohmann::ordered_json to_json() const;
  void print(std::ostream& os, Format format) const;
};

void print_json(std::ostream& os, const nlohmann::ordered_json& j);

}  // namespace gf2m::cli
