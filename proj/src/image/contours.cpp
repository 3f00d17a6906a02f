#include "aesthetic/image/contours.hpp"

#include <algorithm>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "aesthetic/errors.hpp"

namespace aesthetic::image {

namespace {

cv::Mat viewRgb(const StandardImage& img) {
  return cv::Mat(StandardImage::kHeight, StandardImage::kWidth, CV_8UC3, const_cast<std::uint8_t*>(img.data().data()));
}

}  // namespace

EdgeMap::EdgeMap(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {
  if (mask_.size() != StandardImage::kPixelCount) throw ArgumentError("edge mask must be 200x200");
}

std::size_t EdgeMap::edgePixelCount() const noexcept {
  return static_cast<std::size_t>(std::count_if(mask_.begin(), mask_.end(), [](std::uint8_t v) { return v != 0; }));
}

std::vector<std::uint8_t> toGrayscale(const StandardImage& img) {
  std::vector<std::uint8_t> gray(StandardImage::kPixelCount);
  cv::Mat dst(StandardImage::kHeight, StandardImage::kWidth, CV_8UC1, gray.data());
  cv::cvtColor(viewRgb(img), dst, cv::COLOR_RGB2GRAY);
  return gray;
}

EdgeMap detectEdges(const StandardImage& img, const CannyParameters& params) {
  auto gray = toGrayscale(img);
  const cv::Mat grayView(StandardImage::kHeight, StandardImage::kWidth, CV_8UC1, gray.data());

  cv::Mat blurred;
  cv::GaussianBlur(grayView, blurred, cv::Size(params.blurKernel, params.blurKernel), params.blurSigma,
                   params.blurSigma, cv::BORDER_REFLECT_101);

  std::vector<std::uint8_t> mask(StandardImage::kPixelCount);
  cv::Mat edges(StandardImage::kHeight, StandardImage::kWidth, CV_8UC1, mask.data());
  cv::Canny(blurred, edges, params.lowThreshold, params.highThreshold, 3, /*L2gradient=*/true);
  for (auto& v : mask) v = v ? 1 : 0;
  return EdgeMap(std::move(mask));
}

std::size_t countComponents(const EdgeMap& edges) {
  const cv::Mat mask(StandardImage::kHeight, StandardImage::kWidth, CV_8UC1,
                     const_cast<std::uint8_t*>(edges.mask().data()));
  cv::Mat labels;
  const int labelCount = cv::connectedComponents(mask, labels, 8, CV_32S);
  return static_cast<std::size_t>(labelCount - 1);  // label 0 is background
}

std::size_t countContours(const StandardImage& img) { return countComponents(detectEdges(img)); }

}  // namespace aesthetic::image
