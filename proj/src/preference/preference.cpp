#include "aesthetic/preference/preference.hpp"

#include <cmath>

#include "aesthetic/errors.hpp"

namespace aesthetic::preference {

using fuzzy::FuzzyRule;
using fuzzy::FuzzyTerm;
using fuzzy::LinguisticVariable;
using fuzzy::TriangularMF;
using fuzzy::Universe;

ColorRatingProfile::ColorRatingProfile(std::string userId, std::array<double, color::kBasicColorCount> ratings)
    : userId_(std::move(userId)), ratings_(ratings) {
  for (auto c : color::kAllBasicColors) {
    const double r = ratings_[color::index(c)];
    if (!(r >= 0.0 && r <= 1.0)) {
      throw ArgumentError("rating for " + std::string(color::name(c)) + " must lie in [0, 1]");
    }
  }
}

ColorRatingProfile ColorRatingProfile::fromSliderScale(std::string userId,
                                                       const std::map<color::BasicColor, double>& sliders) {
  std::array<double, color::kBasicColorCount> ratings{};
  for (auto c : color::kAllBasicColors) {
    auto it = sliders.find(c);
    if (it == sliders.end()) throw ArgumentError("missing rating for " + std::string(color::name(c)));
    if (!(it->second >= 0.0 && it->second <= kRatingScaleMax)) {
      throw ArgumentError("rating for " + std::string(color::name(c)) + " must lie in [0, 10]");
    }
    ratings[color::index(c)] = it->second / kRatingScaleMax;
  }
  return ColorRatingProfile(std::move(userId), ratings);
}

double colorSchemePreference(const color::DominantColorSummary& summary, const ColorRatingProfile& profile) {
  if (summary.empty()) throw ArgumentError("color-scheme preference needs at least one dominant color");
  double weighted = 0.0;
  double pixels = 0.0;
  for (const auto& entry : summary.entries()) {
    weighted += profile.rating(entry.color) * static_cast<double>(entry.pixels);
    pixels += static_cast<double>(entry.pixels);
  }
  return weighted / pixels;
}

fuzzy::MamdaniEngine makeTotalPreferenceEngine() {
  const Universe percent{0.0, 100.0};
  auto input = [&](std::string_view name) {
    return LinguisticVariable(std::string(name), percent,
                              {FuzzyTerm{"Low", TriangularMF(0, 0, 50)}, FuzzyTerm{"Medium", TriangularMF(20, 50, 80)},
                               FuzzyTerm{"High", TriangularMF(50, 100, 100)}});
  };
  LinguisticVariable output(std::string(kTotalPreferenceVariable), percent,
                            {FuzzyTerm{"Weak", TriangularMF(0, 0, 30)}, FuzzyTerm{"Neutral", TriangularMF(10, 35, 60)},
                             FuzzyTerm{"Strong", TriangularMF(35, 60, 85)},
                             FuzzyTerm{"VeryStrong", TriangularMF(65, 100, 100)}});

  // Antecedents: aesthetic score, color preference.
  std::vector<FuzzyRule> rules{
      {{"Low", "Low"}, "Weak"},          {{"Low", "Medium"}, "Weak"},     {{"Low", "High"}, "Neutral"},
      {{"Medium", "Low"}, "Neutral"},    {{"Medium", "Medium"}, "Neutral"}, {{"High", "Low"}, "Neutral"},
      {{"Medium", "High"}, "Strong"},    {{"High", "Medium"}, "Strong"},  {{"High", "High"}, "VeryStrong"},
  };
  return fuzzy::MamdaniEngine({input(kAestheticScoreVariable), input(kColorPreferenceVariable)}, std::move(output),
                              std::move(rules));
}

PreferenceModel::PreferenceModel() : engine_(makeTotalPreferenceEngine()) {}

PreferenceModel::PreferenceModel(fuzzy::MamdaniEngine engine) : engine_(std::move(engine)) {
  if (engine_.inputs().size() != 2) throw ArgumentError("preference engine must take exactly two inputs");
}

double PreferenceModel::totalPreference(double aestheticScore, double colorSchemePreference) const {
  if (!(aestheticScore >= 0.0 && aestheticScore <= 1.0)) throw ArgumentError("aesthetic score must lie in [0, 1]");
  if (!(colorSchemePreference >= 0.0 && colorSchemePreference <= 1.0)) {
    throw ArgumentError("color-scheme preference must lie in [0, 1]");
  }
  const double inputs[] = {aestheticScore * 100.0, colorSchemePreference * 100.0};
  return engine_.infer(inputs).value;
}

PreferenceResult PreferenceModel::evaluate(const std::string& imageId, double aestheticScore,
                                           const color::DominantColorSummary& summary,
                                           const ColorRatingProfile& profile) const {
  PreferenceResult result;
  result.imageId = imageId;
  result.userId = profile.userId();
  result.aestheticScore = aestheticScore;
  result.colorSchemePreference = colorSchemePreference(summary, profile);
  result.totalPreference = totalPreference(aestheticScore, result.colorSchemePreference);
  return result;
}

}  // namespace aesthetic::preference
