#include "render.hpp"

#include <algorithm>
#include <ostream>

#include "gf2m/error.hpp"

namespace gf2m::cli {

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(Errc::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void TextTable::print_text(std::ostream& os) const {
  std::vector<std::size_t> width(headers.size(), 0);
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = display_width(headers[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      out += cell;
      if (c + 1 < width.size()) out += std::string(width[c] - display_width(cell) + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << '\n';
  };
  line(headers);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void TextTable::print_csv(std::ostream& os) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
    os << '\n';
  };
  line(headers);
  for (const auto& row : rows) line(row);
}

nlohmann::ordered_json TextTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < headers.size(); ++c) obj[headers[c]] = c < row.size() ? row[c] : "";
    arr.push_back(std::move(obj));
  }
  return arr;
}

void TextTable::print(std::ostream& os, Format format) const {
  switch (format) {
    case Format::Table: print_text(os); break;
    case Format::Csv: print_csv(os); break;
    case Format::Json: print_json(os, to_json()); break;
  }
}

void print_json(std::ostream& os, const nlohmann::ordered_json& j) { os << j.dump(2) << '\n'; }

}  // namespace gf2m::cli
