#include <gtest/gtest.h>

#include <fstream>

#include "aesthetic/errors.hpp"
#include "aesthetic/image/contours.hpp"
#include "aesthetic/image/standard_image.hpp"
#include "support/test_support.hpp"

namespace aesthetic::image {
namespace {

using test_support::Encoding;
using test_support::TempDir;

TEST(LoadAndStandardize, LargePngIsDownscaled) {
  TempDir dir;
  test_support::writeImage(dir / "big.png", 400, 400, 3, Encoding::Png,
                           [](int x, int y) { return Rgb{std::uint8_t(x / 2), std::uint8_t(y / 2), 90}; });
  const auto img = loadAndStandardize(dir / "big.png");
  EXPECT_EQ(img.data().size(), StandardImage::kPixelCount * 3);
  EXPECT_EQ(img.at(0, 0).b, 90);
}

TEST(LoadAndStandardize, StandardSizeIsPixelIdentical) {
  TempDir dir;
  auto pixel = [](int x, int y) { return Rgb{std::uint8_t(x), std::uint8_t(y), std::uint8_t((x * 7 + y * 3) % 256)}; };
  test_support::writeImage(dir / "same.png", 200, 200, 3, Encoding::Png, pixel);
  const auto img = loadAndStandardize(dir / "same.png");
  for (int y = 0; y < 200; ++y) {
    for (int x = 0; x < 200; ++x) ASSERT_EQ(img.at(x, y), pixel(x, y)) << x << "," << y;
  }
}

TEST(LoadAndStandardize, WideJpegIsStretched) {
  TempDir dir;
  test_support::writeImage(dir / "wide.jpg", 300, 150, 3, Encoding::Jpeg,
                           [](int x, int) { return x < 150 ? Rgb{250, 250, 250} : Rgb{10, 10, 10}; });
  const auto img = loadAndStandardize(dir / "wide.jpg");
  EXPECT_EQ(img.data().size(), StandardImage::kPixelCount * 3);
  // Aspect is not preserved: the left half of the source fills the left half.
  EXPECT_GT(img.at(50, 100).r, 200);
  EXPECT_LT(img.at(150, 100).r, 60);
}

TEST(LoadAndStandardize, GrayscaleReplicatedAcrossChannels) {
  TempDir dir;
  test_support::writeImage(dir / "gray.png", 200, 200, 1, Encoding::Png,
                           [](int x, int) { return Rgb{std::uint8_t(x), std::uint8_t(x), std::uint8_t(x)}; });
  const auto img = loadAndStandardize(dir / "gray.png");
  EXPECT_EQ(img.at(77, 3), (Rgb{77, 77, 77}));
}

TEST(LoadAndStandardize, AlphaIsDropped) {
  TempDir dir;
  test_support::writeImage(dir / "rgba.png", 200, 200, 4, Encoding::Png, [](int, int) { return Rgb{10, 20, 30}; });
  const auto img = loadAndStandardize(dir / "rgba.png");
  EXPECT_EQ(img.at(5, 5), (Rgb{10, 20, 30}));
}

TEST(LoadAndStandardize, Errors) {
  TempDir dir;
  EXPECT_THROW(loadAndStandardize(dir / "missing.png"), IoError);
  std::ofstream(dir / "junk.png") << "definitely not an image";
  EXPECT_THROW(loadAndStandardize(dir / "junk.png"), FormatError);
  std::ofstream(dir / "truncated.png", std::ios::binary) << "\x89PNG\r\n\x1a\n";
  EXPECT_THROW(loadAndStandardize(dir / "truncated.png"), FormatError);
}

TEST(LoadAndStandardize, DeterministicForIdenticalBytes) {
  TempDir dir;
  test_support::writeImage(dir / "a.jpg", 333, 211, 3, Encoding::Jpeg, [](int x, int y) {
    return Rgb{std::uint8_t(x * 3), std::uint8_t(y * 5), std::uint8_t(x ^ y)};
  });
  EXPECT_EQ(loadAndStandardize(dir / "a.jpg"), loadAndStandardize(dir / "a.jpg"));
}

TEST(StandardImage, PngRoundTrip) {
  const auto scene = test_support::interiorScene(5);
  EXPECT_EQ(decodeAndStandardize(encodePng(scene)), scene);
}

TEST(StandardImage, BoundsChecked) {
  StandardImage img;
  EXPECT_THROW(img.at(200, 0), ArgumentError);
  EXPECT_THROW(img.set(-1, 0, {}), ArgumentError);
  EXPECT_NO_THROW(img.fillRect(-50, -50, 500, 500, {1, 2, 3}));
  EXPECT_EQ(img.at(199, 199), (Rgb{1, 2, 3}));
}

TEST(CountContours, UniformImagesHaveNone) {
  for (Rgb c : {Rgb{0, 0, 0}, Rgb{255, 255, 255}, Rgb{128, 64, 200}}) {
    EXPECT_EQ(countContours(test_support::uniform(c)), 0u);
  }
}

TEST(CountContours, SingleLargeSquare) {
  StandardImage img;
  img.fillRect(80, 80, 40, 40, {255, 255, 255});
  const auto edges = detectEdges(img);
  EXPECT_EQ(test_support::bfsComponentCount(edges), 1u);
  EXPECT_EQ(countContours(img), 1u);
}

class SquareGrid : public ::testing::TestWithParam<int> {};

TEST_P(SquareGrid, CountsEverySquare) {
  const int n = GetParam();
  const auto img = test_support::squareGrid(n, n);
  const auto edges = detectEdges(img);
  EXPECT_EQ(test_support::bfsComponentCount(edges), std::size_t(n * n));
  EXPECT_EQ(countComponents(edges), std::size_t(n * n));
}

INSTANTIATE_TEST_SUITE_P(Grids, SquareGrid, ::testing::Values(1, 2, 3));

TEST(CountContours, AgreesWithOracleOnScenes) {
  for (int objects = 0; objects <= 12; ++objects) {
    const auto edges = detectEdges(test_support::interiorScene(objects));
    ASSERT_EQ(countComponents(edges), test_support::bfsComponentCount(edges)) << objects;
  }
}

TEST(CountContours, MirrorInvariant) {
  for (int n = 1; n <= 3; ++n) {
    const auto img = test_support::squareGrid(n, n);
    EXPECT_EQ(countContours(img), countContours(img.mirroredHorizontally()));
  }
  for (int objects = 0; objects <= 12; objects += 3) {
    const auto img = test_support::interiorScene(objects);
    EXPECT_EQ(countContours(img), countContours(img.mirroredHorizontally())) << objects;
  }
}

TEST(CountContours, MoreObjectsMoreContours) {
  for (int objects = 0; objects < 12; ++objects) {
    EXPECT_LT(countContours(test_support::interiorScene(objects)), countContours(test_support::interiorScene(objects + 1)))
        << objects;
  }
}

TEST(Grayscale, LumaWeights) {
  const auto gray = toGrayscale(test_support::uniform({255, 0, 0}));
  EXPECT_NEAR(gray[0], 0.299 * 255, 1.0);
  EXPECT_EQ(toGrayscale(test_support::uniform({90, 90, 90}))[123], 90);
}

}  // namespace
}  // namespace aesthetic::image
