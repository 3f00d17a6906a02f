#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "aesthetic/color/basic_color.hpp"
#include "aesthetic/color/hsi.hpp"
#include "aesthetic/color/hue_histogram.hpp"
#include "aesthetic/errors.hpp"
#include "support/test_support.hpp"

namespace aesthetic::color {
namespace {

using image::Rgb;
using image::StandardImage;

TEST(RgbToHsi, Examples) {
  const auto white = rgbToHsi(255, 255, 255);
  EXPECT_DOUBLE_EQ(white.hue, 0.0);
  EXPECT_DOUBLE_EQ(white.saturation, 0.0);
  EXPECT_DOUBLE_EQ(white.intensity, 1.0);

  const auto red = rgbToHsi(255, 0, 0);
  EXPECT_NEAR(red.hue, 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(red.saturation, 1.0);
  EXPECT_NEAR(red.intensity, 1.0 / 3.0, 1e-12);

  const auto cyan = rgbToHsi(0, 255, 255);
  EXPECT_NEAR(cyan.hue, 180.0, 1e-9);
  EXPECT_DOUBLE_EQ(cyan.saturation, 1.0);
  EXPECT_NEAR(cyan.intensity, 2.0 / 3.0, 1e-12);

  const auto black = rgbToHsi(0, 0, 0);
  EXPECT_DOUBLE_EQ(black.saturation, 0.0);
  EXPECT_DOUBLE_EQ(black.intensity, 0.0);
}

TEST(RgbToHsi, PrimaryAndSecondaryHues) {
  EXPECT_NEAR(rgbToHsi(0, 255, 0).hue, 120.0, 1e-9);
  EXPECT_NEAR(rgbToHsi(0, 0, 255).hue, 240.0, 1e-9);
  EXPECT_NEAR(rgbToHsi(255, 255, 0).hue, 60.0, 1e-9);
  EXPECT_NEAR(rgbToHsi(255, 0, 255).hue, 300.0, 1e-9);
}

TEST(RgbToHsi, RangesHoldEverywhere) {
  for (int r = 0; r < 256; r += 15) {
    for (int g = 0; g < 256; g += 15) {
      for (int b = 0; b < 256; b += 15) {
        const auto c = rgbToHsi(r, g, b);
        ASSERT_GE(c.hue, 0.0);
        ASSERT_LT(c.hue, 360.0);
        ASSERT_GE(c.saturation, 0.0);
        ASSERT_LE(c.saturation, 1.0);
        ASSERT_GE(c.intensity, 0.0);
        ASSERT_LE(c.intensity, 1.0);
      }
    }
  }
}

BasicColor nearestByBruteForce(int r, int g, int b) {
  const int centroids[12][3] = {{200, 30, 30},  {240, 130, 30}, {240, 220, 40},  {40, 160, 60},
                                {40, 80, 200},  {130, 60, 170}, {240, 150, 190}, {120, 75, 40},
                                {225, 205, 170}, {128, 128, 128}, {20, 20, 20},  {245, 245, 245}};
  int best = 0;
  long bestDist = -1;
  for (int i = 0; i < 12; ++i) {
    const long dr = r - centroids[i][0];
    const long dg = g - centroids[i][1];
    const long db = b - centroids[i][2];
    const long d = dr * dr + dg * dg + db * db;
    if (bestDist < 0 || d < bestDist) {
      bestDist = d;
      best = i;
    }
  }
  return kAllBasicColors[best];
}

TEST(ClassifyBasicColor, Examples) {
  EXPECT_EQ(classifyBasicColor(255, 0, 0), BasicColor::Red);
  EXPECT_EQ(classifyBasicColor(128, 128, 128), BasicColor::Gray);
  EXPECT_EQ(classifyBasicColor(20, 20, 20), BasicColor::Black);
}

TEST(ClassifyBasicColor, CentroidsClassifyAsThemselves) {
  for (BasicColor c : kAllBasicColors) {
    const Rgb rgb = referenceRgb(c);
    EXPECT_EQ(classifyBasicColor(rgb.r, rgb.g, rgb.b), c) << name(c);
  }
}

TEST(ClassifyBasicColor, MatchesBruteForceNearestCentroid) {
  for (int r = 0; r < 256; r += 5) {
    for (int g = 0; g < 256; g += 5) {
      for (int b = 0; b < 256; b += 5) ASSERT_EQ(classifyBasicColor(r, g, b), nearestByBruteForce(r, g, b));
    }
  }
}

TEST(BasicColorNames, RoundTrip) {
  for (BasicColor c : kAllBasicColors) EXPECT_EQ(parseBasicColor(name(c)), c);
  EXPECT_EQ(name(BasicColor::Beige), "beige");
  EXPECT_FALSE(parseBasicColor("teal").has_value());
}

TEST(DominantColors, UniformRed) {
  const auto summary = dominantColors(test_support::uniform(referenceRgb(BasicColor::Red)));
  EXPECT_EQ(summary.entries(), (std::vector<ColorCount>{{BasicColor::Red, 40000}}));
}

TEST(DominantColors, HalfRedHalfBlue) {
  StandardImage img({200, 30, 30});
  img.fillRect(100, 0, 100, 200, {40, 80, 200});
  EXPECT_EQ(dominantColors(img).entries(),
            (std::vector<ColorCount>{{BasicColor::Red, 20000}, {BasicColor::Blue, 20000}}));
}

TEST(DominantColors, TopFiveDescendingAndCountsSumWhenKCoversAll) {
  StandardImage img(referenceRgb(BasicColor::Gray));
  img.fillRect(0, 0, 100, 100, referenceRgb(BasicColor::Beige));
  img.fillRect(100, 0, 60, 100, referenceRgb(BasicColor::Black));
  img.fillRect(0, 100, 50, 50, referenceRgb(BasicColor::Brown));
  img.fillRect(50, 100, 20, 20, referenceRgb(BasicColor::Red));
  img.fillRect(70, 100, 10, 10, referenceRgb(BasicColor::Blue));
  const auto summary = dominantColors(img);
  ASSERT_EQ(summary.entries().size(), 5u);
  std::vector<BasicColor> order;
  for (const auto& e : summary.entries()) order.push_back(e.color);
  EXPECT_EQ(order, (std::vector<BasicColor>{BasicColor::Gray, BasicColor::Beige, BasicColor::Black, BasicColor::Brown,
                                            BasicColor::Red}));
  EXPECT_LT(summary.totalPixels(), 40000u);

  const auto tally = tallyBasicColors(img);
  EXPECT_EQ(std::accumulate(tally.begin(), tally.end(), std::size_t{0}), 40000u);
  const auto five = dominantColors(test_support::interiorScene(3));
  EXPECT_EQ(five.totalPixels(), 40000u);  // wall, floor and three objects: five colors
}

TEST(DominantColors, TiesFollowVocabularyOrder) {
  StandardImage img(referenceRgb(BasicColor::White));
  img.fillRect(0, 0, 100, 200, referenceRgb(BasicColor::Green));
  EXPECT_EQ(dominantColors(img).entries().front().color, BasicColor::Green);
  EXPECT_EQ(dominantColors(img, 1).entries().size(), 1u);
}

TEST(DominantColorSummary, RejectsInvalidEntries) {
  using E = std::vector<ColorCount>;
  EXPECT_THROW(DominantColorSummary(E{{BasicColor::Red, 0}}), ArgumentError);
  EXPECT_THROW(DominantColorSummary(E{{BasicColor::Red, 5}, {BasicColor::Red, 3}}), ArgumentError);
  EXPECT_THROW(DominantColorSummary(E{{BasicColor::Red, 3}, {BasicColor::Blue, 5}}), ArgumentError);
  EXPECT_THROW(DominantColorSummary(E{{BasicColor::Red, 40001}}), ArgumentError);
  EXPECT_THROW(DominantColorSummary(E{{BasicColor::Red, 6},
                                      {BasicColor::Blue, 5},
                                      {BasicColor::Green, 4},
                                      {BasicColor::Pink, 3},
                                      {BasicColor::Gray, 2},
                                      {BasicColor::Black, 1}}),
               ArgumentError);
}

TEST(FuzzyHueHistogram, UniformGrayIsAchromatic) {
  const auto h = fuzzyHueHistogram(test_support::uniform({128, 128, 128}));
  EXPECT_DOUBLE_EQ(h.achromatic, 1.0);
  for (double m : h.chromatic) EXPECT_EQ(m, 0.0);
}

TEST(FuzzyHueHistogram, UniformRedOnFirstTerm) {
  const auto h = fuzzyHueHistogram(test_support::uniform({255, 0, 0}));
  EXPECT_NEAR(h.chromatic[0], 1.0, 1e-12);
  EXPECT_EQ(h.achromatic, 0.0);
}

TEST(FuzzyHueHistogram, HalfRedHalfCyan) {
  StandardImage img({255, 0, 0});
  img.fillRect(0, 100, 200, 100, {0, 255, 255});
  const auto h = fuzzyHueHistogram(img);
  EXPECT_NEAR(h.chromatic[0], 0.5, 1e-9);
  EXPECT_NEAR(h.chromatic[4], 0.5, 1e-9);
  EXPECT_NEAR(h.total(), 1.0, 1e-9);
}

TEST(FuzzyHueHistogram, WrapsAroundAt360) {
  EXPECT_NEAR(hueTermMembership(0, 350.0), 35.0 / 45.0, 1e-12);
  EXPECT_NEAR(hueTermMembership(7, 350.0), 10.0 / 45.0, 1e-12);
  for (std::size_t t = 1; t < 7; ++t) EXPECT_EQ(hueTermMembership(t, 350.0), 0.0);
  EXPECT_NEAR(hueTermMembership(0, 10.0), 35.0 / 45.0, 1e-12);
}

TEST(FuzzyHueHistogram, MembershipsPartitionUnity) {
  for (int i = 0; i < 3600; ++i) {
    double sum = 0.0;
    for (std::size_t t = 0; t < kHueTermCount; ++t) sum += hueTermMembership(t, i * 0.1);
    ASSERT_NEAR(sum, 1.0, 1e-12) << i * 0.1;
  }
}

TEST(FuzzyHueHistogram, AchromaticThresholds) {
  EXPECT_TRUE(isAchromatic({100.0, 0.11, 0.5}));
  EXPECT_FALSE(isAchromatic({100.0, 0.12, 0.5}));
  EXPECT_TRUE(isAchromatic({100.0, 0.8, 0.07}));
  EXPECT_TRUE(isAchromatic({100.0, 0.8, 0.96}));
  EXPECT_FALSE(isAchromatic({100.0, 0.8, 0.5}));
}

TEST(FuzzyHueHistogram, MassesSumToOneOnRandomImages) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int n = 0; n < 10; ++n) {
    StandardImage img;
    for (int y = 0; y < 200; ++y) {
      for (int x = 0; x < 200; ++x) img.set(x, y, {std::uint8_t(byte(rng)), std::uint8_t(byte(rng)), std::uint8_t(byte(rng))});
    }
    const auto h = fuzzyHueHistogram(img);
    EXPECT_NEAR(h.total(), 1.0, 1e-9);
    for (double m : h.chromatic) EXPECT_GE(m, 0.0);
  }
}

}  // namespace
}  // namespace aesthetic::color
