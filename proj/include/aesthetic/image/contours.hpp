#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aesthetic/image/standard_image.hpp"

namespace aesthetic::image {

/// Binary edge mask with the dimensions of a StandardImage.
class EdgeMap {
 public:
  explicit EdgeMap(std::vector<std::uint8_t> mask);

  bool isEdge(int x, int y) const { return mask_.at(static_cast<std::size_t>(y) * StandardImage::kWidth + x) != 0; }
  std::size_t edgePixelCount() const noexcept;
  std::span<const std::uint8_t> mask() const noexcept { return mask_; }

 private:
  std::vector<std::uint8_t> mask_;
};

struct CannyParameters {
  int blurKernel = 5;
  double blurSigma = 1.4;
  double lowThreshold = 50.0;
  double highThreshold = 150.0;
};

/// Luma grayscale (0.299R + 0.587G + 0.114B), row-major.
std::vector<std::uint8_t> toGrayscale(const StandardImage& img);

/// Grayscale, Gaussian blur, then Canny with the L2 gradient norm.
EdgeMap detectEdges(const StandardImage& img, const CannyParameters& params = {});

/// Number of 8-connected components in the edge mask.
std::size_t countComponents(const EdgeMap& edges);

std::size_t countContours(const StandardImage& img);

}  // namespace aesthetic::image
