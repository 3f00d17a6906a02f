#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aesthetic/scoring/scoring.hpp"

namespace aesthetic::store {

inline constexpr std::string_view kFeatureTableHeader =
    "image_id,likes,color_harmony,lightness,complexity,ch_norm,l_norm,c_norm,simplicity_norm,aesthetic_score";

/// Scored rows keyed by unique image id, in insertion order.
class FeatureTable {
 public:
  FeatureTable() = default;
  /// Throws ArgumentError on duplicate or malformed image ids.
  explicit FeatureTable(std::vector<scoring::ScoredRow> rows);

  const std::vector<scoring::ScoredRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  const scoring::ScoredRow* find(std::string_view imageId) const noexcept;
  /// Throws LookupError when absent.
  const scoring::ScoredRow& at(std::string_view imageId) const;

  bool operator==(const FeatureTable&) const = default;

 private:
  std::vector<scoring::ScoredRow> rows_;
};

/// Image ids become CSV cells, so separators and control characters are rejected.
bool isValidImageId(std::string_view id) noexcept;

/// Natural order: ids that are both decimal integers compare numerically,
/// everything else lexicographically (numeric ids first).
bool imageIdLess(std::string_view a, std::string_view b) noexcept;

/// Numbers are written with at most six decimals (trailing zeros trimmed).
std::string formatNumber(double value);

std::string formatTable(const FeatureTable& table);
/// Throws ParseError (with a 1-based line number) on malformed input.
FeatureTable parseTable(std::string_view text);

void saveTable(const FeatureTable& table, const std::filesystem::path& path);
FeatureTable loadTable(const std::filesystem::path& path);

}  // namespace aesthetic::store
