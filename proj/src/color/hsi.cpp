#include "aesthetic/color/hsi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aesthetic::color {

HsiColor rgbToHsi(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) noexcept {
  const double r = r8;
  const double g = g8;
  const double b = b8;
  const double sum = r + g + b;

  HsiColor out;
  out.intensity = sum / (3.0 * 255.0);
  if (sum == 0.0) return out;

  out.saturation = 1.0 - 3.0 * std::min({r, g, b}) / sum;
  if (out.saturation <= 0.0) {
    out.saturation = 0.0;
    return out;
  }

  const double numerator = 0.5 * ((r - g) + (r - b));
  const double denominator = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
  if (denominator == 0.0) return out;

  const double theta = std::acos(std::clamp(numerator / denominator, -1.0, 1.0)) * 180.0 / std::numbers::pi;
  out.hue = b > g ? 360.0 - theta : theta;
  if (out.hue >= 360.0) out.hue -= 360.0;
  return out;
}

}  // namespace aesthetic::color
