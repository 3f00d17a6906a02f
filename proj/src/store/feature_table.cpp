#include "aesthetic/store/feature_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "aesthetic/errors.hpp"
#include "aesthetic/store/text.hpp"

namespace aesthetic::store {

namespace {

constexpr std::size_t kColumns = 10;
constexpr double kSimplicityTolerance = 1e-6;

double parseUnit(std::string_view cell, std::size_t line, const char* column) {
  const double v = parseDouble(cell, line, column);
  if (!(v >= 0.0 && v <= 1.0)) throw ParseError(line, std::string(column) + " must lie in [0, 1]");
  return v;
}

scoring::ScoredRow parseRow(std::string_view text, std::size_t line) {
  const auto cells = splitCsvLine(text);
  if (cells.size() != kColumns) {
    throw ParseError(line, "expected " + std::to_string(kColumns) + " columns, found " + std::to_string(cells.size()));
  }

  scoring::ScoredRow row;
  row.imageId = std::string(cells[0]);
  if (!isValidImageId(row.imageId)) throw ParseError(line, "invalid image_id '" + row.imageId + "'");
  row.likes = parseUnsigned(cells[1], line, "likes");

  row.raw.colorHarmony = parseDouble(cells[2], line, "color_harmony");
  if (!(row.raw.colorHarmony >= 0.0 && row.raw.colorHarmony <= 100.0)) {
    throw ParseError(line, "color_harmony must lie in [0, 100]");
  }
  const auto lightness = parseUnsigned(cells[3], line, "lightness");
  if (lightness < 1 || lightness > 10) throw ParseError(line, "lightness must be an integer in 1..10");
  row.raw.lightness = static_cast<int>(lightness);
  row.raw.complexity = parseUnsigned(cells[4], line, "complexity");

  row.normalized.colorHarmony = parseUnit(cells[5], line, "ch_norm");
  row.normalized.lightness = parseUnit(cells[6], line, "l_norm");
  row.normalized.complexity = parseUnit(cells[7], line, "c_norm");
  row.normalized.simplicity = parseUnit(cells[8], line, "simplicity_norm");
  if (std::abs(row.normalized.simplicity - (1.0 - row.normalized.complexity)) > kSimplicityTolerance) {
    throw ParseError(line, "simplicity_norm must equal 1 - c_norm");
  }
  row.aestheticScore = parseUnit(cells[9], line, "aesthetic_score");
  return row;
}

}  // namespace

FeatureTable::FeatureTable(std::vector<scoring::ScoredRow> rows) : rows_(std::move(rows)) {
  std::set<std::string_view> ids;
  for (const auto& row : rows_) {
    if (!isValidImageId(row.imageId)) throw ArgumentError("invalid image id '" + row.imageId + "'");
    if (!ids.insert(row.imageId).second) throw ArgumentError("duplicate image id '" + row.imageId + "'");
  }
}

const scoring::ScoredRow* FeatureTable::find(std::string_view imageId) const noexcept {
  for (const auto& row : rows_) {
    if (row.imageId == imageId) return &row;
  }
  return nullptr;
}

const scoring::ScoredRow& FeatureTable::at(std::string_view imageId) const {
  if (const auto* row = find(imageId)) return *row;
  throw LookupError("unknown image '" + std::string(imageId) + "'");
}

bool isValidImageId(std::string_view id) noexcept {
  if (id.empty()) return false;
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || c == ',' || c == '"' || c == '/' || c == '\\' || u == 0x7F) return false;
  }
  return true;
}

bool imageIdLess(std::string_view a, std::string_view b) noexcept {
  auto numeric = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const bool na = numeric(a);
  const bool nb = numeric(b);
  if (na && nb) {
    auto strip = [](std::string_view s) {
      const auto first = s.find_first_not_of('0');
      return first == std::string_view::npos ? std::string_view("0") : s.substr(first);
    };
    const auto sa = strip(a);
    const auto sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

std::string formatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string formatTable(const FeatureTable& table) {
  std::ostringstream out;
  out << kFeatureTableHeader << '\n';
  for (const auto& row : table.rows()) {
    out << row.imageId << ',' << row.likes << ',' << formatNumber(row.raw.colorHarmony) << ',' << row.raw.lightness
        << ',' << row.raw.complexity << ',' << formatNumber(row.normalized.colorHarmony) << ','
        << formatNumber(row.normalized.lightness) << ',' << formatNumber(row.normalized.complexity) << ','
        << formatNumber(row.normalized.simplicity) << ',' << formatNumber(row.aestheticScore) << '\n';
  }
  return out.str();
}

FeatureTable parseTable(std::string_view text) {
  const auto lines = splitLines(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  if (lines.front() != kFeatureTableHeader) throw ParseError(1, "unexpected header '" + std::string(lines.front()) + "'");

  std::vector<scoring::ScoredRow> rows;
  std::set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto row = parseRow(lines[i], i + 1);
    if (!ids.insert(row.imageId).second) throw ParseError(i + 1, "duplicate image_id '" + row.imageId + "'");
    rows.push_back(std::move(row));
  }
  return FeatureTable(std::move(rows));
}

void saveTable(const FeatureTable& table, const std::filesystem::path& path) {
  writeTextFile(path, formatTable(table));
}

FeatureTable loadTable(const std::filesystem::path& path) { return parseTable(readTextFile(path)); }

}  // namespace aesthetic::store
