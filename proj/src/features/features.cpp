#include "aesthetic/features/features.hpp"

#include <algorithm>
#include <cmath>

#include "aesthetic/image/contours.hpp"

namespace aesthetic::features {

namespace {

constexpr int kLightnessLevels = 10;
// Bin width is 256 / 10 = 25.6. The slack absorbs rounding in the luma
// coefficients (0.299 + 0.587 + 0.114 is not exactly 1 in binary), so a
// uniform gray of 128 lands in bin 6, not 5.
constexpr double kLightnessBinSlack = 1e-9;

std::vector<HarmonyTemplate> buildTemplates() {
  constexpr std::size_t n = color::kHueTermCount;
  std::vector<HarmonyTemplate> out;
  for (std::size_t t = 0; t < n; ++t) out.push_back({HarmonyFamily::Monochromatic, {t}});
  for (std::size_t t = 0; t < n; ++t) out.push_back({HarmonyFamily::Analogous, {t, (t + 1) % n}});
  // Opposite terms; t and t + 4 repeat after four rotations.
  for (std::size_t t = 0; t < n / 2; ++t) out.push_back({HarmonyFamily::Complementary, {t, t + n / 2}});
  // t, t + 135 deg, t + 225 deg.
  for (std::size_t t = 0; t < n; ++t) out.push_back({HarmonyFamily::SplitComplementary, {t, (t + 3) % n, (t + 5) % n}});
  return out;
}

}  // namespace

std::string_view familyName(HarmonyFamily family) noexcept {
  switch (family) {
    case HarmonyFamily::Monochromatic: return "monochromatic";
    case HarmonyFamily::Analogous: return "analogous";
    case HarmonyFamily::Complementary: return "complementary";
    case HarmonyFamily::SplitComplementary: return "split-complementary";
  }
  return "unknown";
}

const std::vector<HarmonyTemplate>& harmonyTemplates() {
  static const std::vector<HarmonyTemplate> templates = buildTemplates();
  return templates;
}

double templateFit(const color::FuzzyHueHistogram& hist, const HarmonyTemplate& tmpl) noexcept {
  double fit = hist.achromatic;
  for (std::size_t term : tmpl.terms) fit += hist.chromatic[term];
  return fit;
}

double colorHarmony(const color::FuzzyHueHistogram& hist) {
  double best = 0.0;
  for (const auto& tmpl : harmonyTemplates()) best = std::max(best, templateFit(hist, tmpl));
  return std::clamp(100.0 * best, 0.0, 100.0);
}

double colorHarmony(const image::StandardImage& img) { return colorHarmony(color::fuzzyHueHistogram(img)); }

double perceivedBrightness(const image::StandardImage& img) {
  double sums[3] = {0.0, 0.0, 0.0};
  const auto px = img.data();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    sums[0] += px[i];
    sums[1] += px[i + 1];
    sums[2] += px[i + 2];
  }
  const double n = static_cast<double>(image::StandardImage::kPixelCount);
  const double r = sums[0] / n;
  const double g = sums[1] / n;
  const double b = sums[2] / n;
  return std::sqrt(0.299 * r * r + 0.587 * g * g + 0.114 * b * b);
}

int lightnessLevel(double brightness) noexcept {
  const int level = static_cast<int>(std::floor(brightness * kLightnessLevels / 256.0 + kLightnessBinSlack)) + 1;
  return std::clamp(level, 1, kLightnessLevels);
}

int lightnessLevel(const image::StandardImage& img) { return lightnessLevel(perceivedBrightness(img)); }

std::size_t complexity(const image::StandardImage& img) { return image::countContours(img); }

FeatureVector extractFeatures(const image::StandardImage& img) {
  return {colorHarmony(img), lightnessLevel(img), complexity(img)};
}

}  // namespace aesthetic::features
