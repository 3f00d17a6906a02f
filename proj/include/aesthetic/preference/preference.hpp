#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "aesthetic/color/basic_color.hpp"
#include "aesthetic/fuzzy/mamdani.hpp"

namespace aesthetic::preference {

inline constexpr std::string_view kAestheticScoreVariable = "aesthetic_score";
inline constexpr std::string_view kColorPreferenceVariable = "color_preference";
inline constexpr std::string_view kTotalPreferenceVariable = "total_preference";

/// Ratings on the participant-facing slider run from 0 to 10.
inline constexpr double kRatingScaleMax = 10.0;

/// A user's rating in [0, 1] for every basic color.
class ColorRatingProfile {
 public:
  ColorRatingProfile(std::string userId, std::array<double, color::kBasicColorCount> ratings);

  /// Builds a profile from 0..10 slider values; all twelve colors are required.
  static ColorRatingProfile fromSliderScale(std::string userId, const std::map<color::BasicColor, double>& sliders);

  const std::string& userId() const noexcept { return userId_; }
  double rating(color::BasicColor c) const noexcept { return ratings_[color::index(c)]; }
  const std::array<double, color::kBasicColorCount>& ratings() const noexcept { return ratings_; }

  bool operator==(const ColorRatingProfile&) const = default;

 private:
  std::string userId_;
  std::array<double, color::kBasicColorCount> ratings_;
};

/// Pixel-count weighted mean of the user's ratings over the dominant colors.
/// Throws ArgumentError for an empty summary.
double colorSchemePreference(const color::DominantColorSummary& summary, const ColorRatingProfile& profile);

/// Table-driven engine: aesthetic score and color preference (both on
/// [0, 100], terms Low/Medium/High) to total preference (Weak, Neutral,
/// Strong, VeryStrong) through nine AND rules.
fuzzy::MamdaniEngine makeTotalPreferenceEngine();

struct PreferenceResult {
  std::string imageId;
  std::string userId;
  double aestheticScore = 0.0;          // [0, 1]
  double colorSchemePreference = 0.0;   // [0, 1]
  double totalPreference = 0.0;         // [0, 100]
};

class PreferenceModel {
 public:
  PreferenceModel();
  explicit PreferenceModel(fuzzy::MamdaniEngine engine);

  /// Both inputs on [0, 1]; they are scaled by 100 before inference.
  double totalPreference(double aestheticScore, double colorSchemePreference) const;

  PreferenceResult evaluate(const std::string& imageId, double aestheticScore, const color::DominantColorSummary& summary,
                            const ColorRatingProfile& profile) const;

  const fuzzy::MamdaniEngine& engine() const noexcept { return engine_; }

 private:
  fuzzy::MamdaniEngine engine_;
};

}  // namespace aesthetic::preference
