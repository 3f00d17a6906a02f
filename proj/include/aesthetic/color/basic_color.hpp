#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "aesthetic/image/standard_image.hpp"

namespace aesthetic::color {

/// Closed basic-color vocabulary. Enumerator order is the tie-break order.
enum class BasicColor : std::uint8_t {
  Red,
  Orange,
  Yellow,
  Green,
  Blue,
  Purple,
  Pink,
  Brown,
  Beige,
  Gray,
  Black,
  White,
};

inline constexpr std::size_t kBasicColorCount = 12;

inline constexpr std::array<BasicColor, kBasicColorCount> kAllBasicColors{
    BasicColor::Red,   BasicColor::Orange, BasicColor::Yellow, BasicColor::Green, BasicColor::Blue,  BasicColor::Purple,
    BasicColor::Pink,  BasicColor::Brown,  BasicColor::Beige,  BasicColor::Gray,  BasicColor::Black, BasicColor::White,
};

constexpr std::size_t index(BasicColor c) noexcept { return static_cast<std::size_t>(c); }

std::string_view name(BasicColor c) noexcept;
std::optional<BasicColor> parseBasicColor(std::string_view name) noexcept;

/// Reference centroid, also used as the display swatch.
image::Rgb referenceRgb(BasicColor c) noexcept;

/// Nearest reference centroid in RGB (Euclidean); ties go to the earlier name.
BasicColor classifyBasicColor(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

struct ColorCount {
  BasicColor color;
  std::size_t pixels;

  bool operator==(const ColorCount&) const = default;
};

/// Up to five basic colors with their pixel counts, descending by count.
class DominantColorSummary {
 public:
  static constexpr std::size_t kMaxEntries = 5;

  DominantColorSummary() = default;
  /// Throws ArgumentError on zero counts, duplicates, wrong ordering, more
  /// than five entries or a total above the standard pixel count.
  explicit DominantColorSummary(std::vector<ColorCount> entries);

  const std::vector<ColorCount>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t totalPixels() const noexcept;

  bool operator==(const DominantColorSummary&) const = default;

 private:
  std::vector<ColorCount> entries_;
};

/// Per-color pixel tally over the whole image.
std::array<std::size_t, kBasicColorCount> tallyBasicColors(const image::StandardImage& img);

/// Top-k colors by pixel count (k <= 5); ties broken by vocabulary order.
DominantColorSummary dominantColors(const image::StandardImage& img, std::size_t k = DominantColorSummary::kMaxEntries);

}  // namespace aesthetic::color
