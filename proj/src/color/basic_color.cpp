#include "aesthetic/color/basic_color.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "aesthetic/errors.hpp"

namespace aesthetic::color {

namespace {

struct Reference {
  std::string_view name;
  image::Rgb rgb;
};

constexpr std::array<Reference, kBasicColorCount> kReferences{{
    {"red", {200, 30, 30}},
    {"orange", {240, 130, 30}},
    {"yellow", {240, 220, 40}},
    {"green", {40, 160, 60}},
    {"blue", {40, 80, 200}},
    {"purple", {130, 60, 170}},
    {"pink", {240, 150, 190}},
    {"brown", {120, 75, 40}},
    {"beige", {225, 205, 170}},
    {"gray", {128, 128, 128}},
    {"black", {20, 20, 20}},
    {"white", {245, 245, 245}},
}};

int squaredDistance(image::Rgb a, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const int dr = int{a.r} - r;
  const int dg = int{a.g} - g;
  const int db = int{a.b} - b;
  return dr * dr + dg * dg + db * db;
}

}  // namespace

std::string_view name(BasicColor c) noexcept { return kReferences[index(c)].name; }

std::optional<BasicColor> parseBasicColor(std::string_view text) noexcept {
  for (auto c : kAllBasicColors) {
    if (name(c) == text) return c;
  }
  return std::nullopt;
}

image::Rgb referenceRgb(BasicColor c) noexcept { return kReferences[index(c)].rgb; }

BasicColor classifyBasicColor(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  BasicColor best = BasicColor::Red;
  int bestDistance = squaredDistance(kReferences[0].rgb, r, g, b);
  for (std::size_t i = 1; i < kBasicColorCount; ++i) {
    const int d = squaredDistance(kReferences[i].rgb, r, g, b);
    if (d < bestDistance) {  // strict: earlier names win ties
      bestDistance = d;
      best = kAllBasicColors[i];
    }
  }
  return best;
}

DominantColorSummary::DominantColorSummary(std::vector<ColorCount> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxEntries) throw ArgumentError("a dominant-color summary holds at most five colors");
  std::set<BasicColor> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].pixels == 0) throw ArgumentError("dominant-color counts must be positive");
    if (!seen.insert(entries_[i].color).second) throw ArgumentError("dominant colors must be distinct");
    if (i > 0 && entries_[i].pixels > entries_[i - 1].pixels) {
      throw ArgumentError("dominant colors must be ordered by descending count");
    }
  }
  if (totalPixels() > image::StandardImage::kPixelCount) {
    throw ArgumentError("dominant-color counts exceed the image pixel count");
  }
}

std::size_t DominantColorSummary::totalPixels() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0},
                         [](std::size_t acc, const ColorCount& c) { return acc + c.pixels; });
}

std::array<std::size_t, kBasicColorCount> tallyBasicColors(const image::StandardImage& img) {
  std::array<std::size_t, kBasicColorCount> counts{};
  const auto px = img.data();
  for (std::size_t i = 0; i < px.size(); i += 3) ++counts[index(classifyBasicColor(px[i], px[i + 1], px[i + 2]))];
  return counts;
}

DominantColorSummary dominantColors(const image::StandardImage& img, std::size_t k) {
  if (k == 0 || k > DominantColorSummary::kMaxEntries) throw ArgumentError("k must lie in [1, 5]");
  const auto counts = tallyBasicColors(img);

  std::vector<ColorCount> all;
  for (auto c : kAllBasicColors) {
    if (counts[index(c)] > 0) all.push_back({c, counts[index(c)]});
  }
  // Stable sort keeps vocabulary order among equal counts.
  std::stable_sort(all.begin(), all.end(), [](const ColorCount& a, const ColorCount& b) { return a.pixels > b.pixels; });
  if (all.size() > k) all.resize(k);
  return DominantColorSummary(std::move(all));
}

}  // namespace aesthetic::color
