#include "aesthetic/color/hue_histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aesthetic::color {

double FuzzyHueHistogram::total() const noexcept {
  return std::accumulate(chromatic.begin(), chromatic.end(), achromatic);
}

bool isAchromatic(const HsiColor& c) noexcept {
  return c.saturation < kAchromaticMaxSaturation || c.intensity < kAchromaticMinIntensity ||
         c.intensity > kAchromaticMaxIntensity;
}

double hueTermMembership(std::size_t term, double hueDegrees) noexcept {
  const double peak = static_cast<double>(term) * kHueTermSpacing;
  double distance = std::fmod(std::abs(hueDegrees - peak), 360.0);
  distance = std::min(distance, 360.0 - distance);
  return std::max(0.0, 1.0 - distance / kHueTermSpacing);
}

FuzzyHueHistogram fuzzyHueHistogram(const image::StandardImage& img) {
  FuzzyHueHistogram hist;
  const auto px = img.data();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    const HsiColor c = rgbToHsi(px[i], px[i + 1], px[i + 2]);
    if (isAchromatic(c)) {
      hist.achromatic += 1.0;
      continue;
    }
    // A hue lies between two adjacent peaks; their memberships sum to 1.
    const auto lower = static_cast<std::size_t>(std::floor(c.hue / kHueTermSpacing)) % kHueTermCount;
    const auto upper = (lower + 1) % kHueTermCount;
    const double wLower = hueTermMembership(lower, c.hue);
    const double wUpper = hueTermMembership(upper, c.hue);
    const double norm = wLower + wUpper;
    hist.chromatic[lower] += wLower / norm;
    hist.chromatic[upper] += wUpper / norm;
  }

  const double pixels = static_cast<double>(image::StandardImage::kPixelCount);
  hist.achromatic /= pixels;
  for (double& m : hist.chromatic) m /= pixels;
  return hist;
}

}  // namespace aesthetic::color
