#include "aesthetic/image/standard_image.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "aesthetic/errors.hpp"

namespace aesthetic::image {

namespace {

constexpr std::size_t kChannels = 3;

std::size_t offset(int x, int y) {
  if (x < 0 || y < 0 || x >= StandardImage::kWidth || y >= StandardImage::kHeight) {
    throw ArgumentError("pixel coordinate out of bounds");
  }
  return (static_cast<std::size_t>(y) * StandardImage::kWidth + static_cast<std::size_t>(x)) * kChannels;
}

bool looksLikePng(std::span<const std::uint8_t> bytes) {
  static constexpr std::array<std::uint8_t, 8> kSignature{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  return bytes.size() >= kSignature.size() && std::equal(kSignature.begin(), kSignature.end(), bytes.begin());
}

bool looksLikeJpeg(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF;
}

}  // namespace

StandardImage::StandardImage(Rgb fill) : pixels_(kPixelCount * kChannels) {
  for (std::size_t i = 0; i < kPixelCount; ++i) {
    pixels_[i * kChannels] = fill.r;
    pixels_[i * kChannels + 1] = fill.g;
    pixels_[i * kChannels + 2] = fill.b;
  }
}

StandardImage StandardImage::fromRgb(int width, int height, std::span<const std::uint8_t> rgb) {
  if (width <= 0 || height <= 0) throw ArgumentError("image dimensions must be positive");
  if (rgb.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * kChannels) {
    throw ArgumentError("pixel buffer size does not match dimensions");
  }

  StandardImage out;
  if (width == kWidth && height == kHeight) {
    std::copy(rgb.begin(), rgb.end(), out.pixels_.begin());
    return out;
  }
  // cv::Mat over the caller's buffer; resize writes into our own storage.
  const cv::Mat src(height, width, CV_8UC3, const_cast<std::uint8_t*>(rgb.data()));
  cv::Mat dst(kHeight, kWidth, CV_8UC3, out.pixels_.data());
  cv::resize(src, dst, cv::Size(kWidth, kHeight), 0.0, 0.0, cv::INTER_LINEAR);
  return out;
}

Rgb StandardImage::at(int x, int y) const {
  const auto o = offset(x, y);
  return {pixels_[o], pixels_[o + 1], pixels_[o + 2]};
}

void StandardImage::set(int x, int y, Rgb color) {
  const auto o = offset(x, y);
  pixels_[o] = color.r;
  pixels_[o + 1] = color.g;
  pixels_[o + 2] = color.b;
}

void StandardImage::fillRect(int x, int y, int width, int height, Rgb color) {
  const int x0 = std::max(0, x);
  const int y0 = std::max(0, y);
  const int x1 = std::min(kWidth, x + width);
  const int y1 = std::min(kHeight, y + height);
  for (int yy = y0; yy < y1; ++yy) {
    for (int xx = x0; xx < x1; ++xx) set(xx, yy, color);
  }
}

StandardImage StandardImage::mirroredHorizontally() const {
  StandardImage out;
  for (int y = 0; y < kHeight; ++y) {
    for (int x = 0; x < kWidth; ++x) out.set(kWidth - 1 - x, y, at(x, y));
  }
  return out;
}

StandardImage decodeAndStandardize(std::span<const std::uint8_t> bytes) {
  if (!looksLikePng(bytes) && !looksLikeJpeg(bytes)) throw FormatError("not a PNG or JPEG stream");

  const cv::Mat buffer(1, static_cast<int>(bytes.size()), CV_8UC1, const_cast<std::uint8_t*>(bytes.data()));
  cv::Mat bgr;
  try {
    // IMREAD_COLOR drops alpha, replicates gray and reduces 16-bit to 8-bit.
    bgr = cv::imdecode(buffer, cv::IMREAD_COLOR);
  } catch (const cv::Exception& e) {
    throw FormatError(std::string("image decode failed: ") + e.what());
  }
  if (bgr.empty()) throw FormatError("image decode failed");

  cv::Mat rgb;
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  if (!rgb.isContinuous()) rgb = rgb.clone();
  return StandardImage::fromRgb(rgb.cols, rgb.rows,
                                std::span<const std::uint8_t>(rgb.data, rgb.total() * rgb.elemSize()));
}

StandardImage loadAndStandardize(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  try {
    return decodeAndStandardize(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encodePng(const StandardImage& image) {
  const cv::Mat rgb(StandardImage::kHeight, StandardImage::kWidth, CV_8UC3,
                    const_cast<std::uint8_t*>(image.data().data()));
  cv::Mat bgr;
  cv::cvtColor(rgb, bgr, cv::COLOR_RGB2BGR);
  std::vector<std::uint8_t> out;
  if (!cv::imencode(".png", bgr, out)) throw FormatError("PNG encoding failed");
  return out;
}

void savePng(const StandardImage& image, const std::filesystem::path& path) {
  const auto bytes = encodePng(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace aesthetic::image
