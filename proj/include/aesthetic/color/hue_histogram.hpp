#pragma once

#include <array>
#include <cstddef>

#include "aesthetic/color/hsi.hpp"
#include "aesthetic/image/standard_image.hpp"

namespace aesthetic::color {

inline constexpr std::size_t kHueTermCount = 8;
inline constexpr double kHueTermSpacing = 45.0;

// Pixels below/above these limits carry no reliable hue.
inline constexpr double kAchromaticMaxSaturation = 0.12;
inline constexpr double kAchromaticMinIntensity = 0.08;
inline constexpr double kAchromaticMaxIntensity = 0.95;

/// Fraction of pixels per fuzzy hue term (peaks at 0, 45, ..., 315 degrees)
/// plus the fraction treated as achromatic. Masses sum to 1.
struct FuzzyHueHistogram {
  std::array<double, kHueTermCount> chromatic{};
  double achromatic = 0.0;

  double total() const noexcept;
};

bool isAchromatic(const HsiColor& c) noexcept;

/// Triangular membership of a hue in term `term`, with wrap-around at 360.
double hueTermMembership(std::size_t term, double hueDegrees) noexcept;

FuzzyHueHistogram fuzzyHueHistogram(const image::StandardImage& img);

}  // namespace aesthetic::color
