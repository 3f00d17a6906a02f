#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "aesthetic/color/hue_histogram.hpp"
#include "aesthetic/image/standard_image.hpp"

namespace aesthetic::features {

struct FeatureVector {
  double colorHarmony = 0.0;  // [0, 100]
  int lightness = 1;          // 1..10
  std::size_t complexity = 0;

  bool operator==(const FeatureVector&) const = default;
};

enum class HarmonyFamily { Monochromatic, Analogous, Complementary, SplitComplementary };

/// A set of hue terms that are allowed to carry chromatic mass.
struct HarmonyTemplate {
  HarmonyFamily family;
  std::vector<std::size_t> terms;
};

std::string_view familyName(HarmonyFamily family) noexcept;

/// Every rotation of the four template families over the hue terms.
const std::vector<HarmonyTemplate>& harmonyTemplates();

/// Achromatic mass plus the chromatic mass inside the template's terms.
double templateFit(const color::FuzzyHueHistogram& hist, const HarmonyTemplate& tmpl) noexcept;

/// 100 x best template fit.
double colorHarmony(const color::FuzzyHueHistogram& hist);
double colorHarmony(const image::StandardImage& img);

/// sqrt(0.299 R^2 + 0.587 G^2 + 0.114 B^2) of the per-channel means.
double perceivedBrightness(const image::StandardImage& img);
/// Brightness quantized to ten bins of width 25.6, numbered 1..10.
int lightnessLevel(double brightness) noexcept;
int lightnessLevel(const image::StandardImage& img);

std::size_t complexity(const image::StandardImage& img);

FeatureVector extractFeatures(const image::StandardImage& img);

}  // namespace aesthetic::features
