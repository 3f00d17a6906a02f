#pragma once

#include <cstdint>

namespace aesthetic::color {

struct HsiColor {
  double hue = 0.0;         // degrees, [0, 360); 0 when saturation is 0
  double saturation = 0.0;  // [0, 1]
  double intensity = 0.0;   // [0, 1]
};

HsiColor rgbToHsi(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

}  // namespace aesthetic::color
