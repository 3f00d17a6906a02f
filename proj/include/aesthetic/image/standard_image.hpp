#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace aesthetic::image {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

/// A 200x200 8-bit RGB raster, row-major, three interleaved channels.
class StandardImage {
 public:
  static constexpr int kWidth = 200;
  static constexpr int kHeight = 200;
  static constexpr std::size_t kPixelCount = static_cast<std::size_t>(kWidth) * kHeight;

  /// Uniform image (black by default).
  explicit StandardImage(Rgb fill = {});

  /// Stretches an arbitrary interleaved RGB raster to 200x200 with bilinear
  /// interpolation. A 200x200 source is copied unchanged.
  static StandardImage fromRgb(int width, int height, std::span<const std::uint8_t> rgb);

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb color);
  /// Fills the rectangle clipped to the image bounds.
  void fillRect(int x, int y, int width, int height, Rgb color);

  StandardImage mirroredHorizontally() const;

  std::span<const std::uint8_t> data() const noexcept { return pixels_; }

  bool operator==(const StandardImage&) const = default;

 private:
  std::vector<std::uint8_t> pixels_;
};

/// Reads a PNG or JPEG file and standardizes it: alpha dropped, grayscale
/// replicated to three channels, stretched to 200x200 (aspect not preserved).
/// Throws IoError when the file cannot be read, FormatError when it cannot be
/// decoded.
StandardImage loadAndStandardize(const std::filesystem::path& path);
StandardImage decodeAndStandardize(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encodePng(const StandardImage& image);
void savePng(const StandardImage& image, const std::filesystem::path& path);

}  // namespace aesthetic::image
