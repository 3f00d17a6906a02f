#include "aesthetic/scoring/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "aesthetic/errors.hpp"

namespace aesthetic::scoring {

namespace {

FeatureRange widen(FeatureRange r, double x) { return {std::min(r.min, x), std::max(r.max, x)}; }

void requireUnit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

DatasetStats DatasetStats::fromFeatures(std::span<const features::FeatureVector> corpus) {
  if (corpus.empty()) throw ArgumentError("cannot compute statistics of an empty corpus");
  const auto& first = corpus.front();
  DatasetStats stats{{first.colorHarmony, first.colorHarmony},
                     {double(first.lightness), double(first.lightness)},
                     {double(first.complexity), double(first.complexity)}};
  for (const auto& f : corpus) {
    stats.colorHarmony = widen(stats.colorHarmony, f.colorHarmony);
    stats.lightness = widen(stats.lightness, f.lightness);
    stats.complexity = widen(stats.complexity, double(f.complexity));
  }
  return stats;
}

void DatasetStats::validate() const {
  for (const auto* r : {&colorHarmony, &lightness, &complexity}) {
    if (!(r->min <= r->max)) throw ArgumentError("dataset stats require min <= max");
  }
}

double minMaxNormalize(double x, const FeatureRange& range) {
  if (range.max == range.min) return 0.5;
  return std::clamp((x - range.min) / (range.max - range.min), 0.0, 1.0);
}

double denormalize(double normalized, const FeatureRange& range) {
  if (!(range.max > range.min)) throw ArgumentError("cannot denormalize over a degenerate range");
  return range.min + normalized * (range.max - range.min);
}

double aestheticScore(double colorHarmonyNorm, double lightnessNorm, double simplicityNorm,
                      const AestheticWeights& weights) {
  requireUnit(colorHarmonyNorm, "normalized color harmony");
  requireUnit(lightnessNorm, "normalized lightness");
  requireUnit(simplicityNorm, "normalized simplicity");
  const double total = weights.colorHarmony + weights.lightness + weights.simplicity;
  if (!(total > 0.0)) throw ArgumentError("weights must have a positive sum");
  return (weights.colorHarmony * colorHarmonyNorm + weights.lightness * lightnessNorm +
          weights.simplicity * simplicityNorm) /
         total;
}

NormalizedFeatures normalize(const features::FeatureVector& raw, const DatasetStats& stats) {
  NormalizedFeatures n;
  n.colorHarmony = minMaxNormalize(raw.colorHarmony, stats.colorHarmony);
  n.lightness = minMaxNormalize(raw.lightness, stats.lightness);
  n.complexity = minMaxNormalize(double(raw.complexity), stats.complexity);
  n.simplicity = 1.0 - n.complexity;
  return n;
}

ScoredRow scoreImage(std::string imageId, std::uint64_t likes, const features::FeatureVector& raw,
                     const DatasetStats& stats) {
  ScoredRow row;
  row.imageId = std::move(imageId);
  row.likes = likes;
  row.raw = raw;
  row.normalized = normalize(raw, stats);
  row.aestheticScore = aestheticScore(row.normalized.colorHarmony, row.normalized.lightness, row.normalized.simplicity);
  return row;
}

double pearsonCorrelation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("correlation inputs must have equal length");
  if (a.size() < 2) throw ArgumentError("correlation needs at least two samples");

  const double n = static_cast<double>(a.size());
  double meanA = 0.0;
  double meanB = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    meanA += a[i];
    meanB += b[i];
  }
  meanA /= n;
  meanB /= n;

  double cov = 0.0;
  double varA = 0.0;
  double varB = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - meanA;
    const double db = b[i] - meanB;
    cov += da * db;
    varA += da * da;
    varB += db * db;
  }
  if (varA == 0.0 || varB == 0.0) throw UndefinedCorrelationError("correlation undefined for a constant series");
  return std::clamp(cov / std::sqrt(varA * varB), -1.0, 1.0);
}

}  // namespace aesthetic::scoring
