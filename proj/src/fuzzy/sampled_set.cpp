#include "aesthetic/fuzzy/sampled_set.hpp"

#include <algorithm>
#include <cmath>

#include "aesthetic/errors.hpp"

namespace aesthetic::fuzzy {

namespace {

// Absorbs representation error in (hi - lo) / step, e.g. 100 / 0.1.
constexpr double kGridSlack = 1e-9;

void requireSameGrid(const SampledFuzzySet& a, const SampledFuzzySet& b) {
  if (!a.sameGrid(b)) throw ArgumentError("fuzzy sets are sampled on different grids");
}

}  // namespace

std::size_t sampleCount(const Universe& universe, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ArgumentError("sampling step must be positive");
  if (!(universe.lo <= universe.hi)) throw ArgumentError("universe must satisfy lo <= hi");
  return static_cast<std::size_t>(std::floor((universe.hi - universe.lo) / step + kGridSlack)) + 1;
}

SampledFuzzySet::SampledFuzzySet(Universe universe, double step)
    : universe_(universe), step_(step), degrees_(sampleCount(universe, step), 0.0) {}

SampledFuzzySet::SampledFuzzySet(Universe universe, double step, std::vector<double> degrees)
    : universe_(universe), step_(step), degrees_(std::move(degrees)) {
  if (degrees_.size() != sampleCount(universe_, step_)) {
    throw ArgumentError("degree count does not match the sampling grid");
  }
  for (double d : degrees_) {
    if (!(d >= 0.0 && d <= 1.0)) throw ArgumentError("membership degrees must lie in [0, 1]");
  }
}

SampledFuzzySet SampledFuzzySet::fromMembership(Universe universe, double step, const TriangularMF& mf) {
  SampledFuzzySet set(universe, step);
  for (std::size_t i = 0; i < set.size(); ++i) set.degrees_[i] = mf(set.point(i));
  return set;
}

SampledFuzzySet SampledFuzzySet::clipped(double height) const {
  SampledFuzzySet out = *this;
  for (double& d : out.degrees_) d = std::min(d, height);
  return out;
}

void SampledFuzzySet::accumulateMax(const SampledFuzzySet& other) {
  requireSameGrid(*this, other);
  for (std::size_t i = 0; i < degrees_.size(); ++i) degrees_[i] = std::max(degrees_[i], other.degrees_[i]);
}

bool SampledFuzzySet::sameGrid(const SampledFuzzySet& other) const noexcept {
  return universe_ == other.universe_ && step_ == other.step_;
}

bool SampledFuzzySet::isEmpty() const noexcept {
  return std::all_of(degrees_.begin(), degrees_.end(), [](double d) { return d == 0.0; });
}

std::optional<double> SampledFuzzySet::centroid() const {
  double moment = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    moment += point(i) * degrees_[i];
    mass += degrees_[i];
  }
  if (mass == 0.0) return std::nullopt;
  return moment / mass;
}

SampledFuzzySet unionOf(const SampledFuzzySet& a, const SampledFuzzySet& b) {
  SampledFuzzySet out = a;
  out.accumulateMax(b);
  return out;
}

SampledFuzzySet intersectionOf(const SampledFuzzySet& a, const SampledFuzzySet& b) {
  requireSameGrid(a, b);
  std::vector<double> degrees(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) degrees[i] = std::min(a.degree(i), b.degree(i));
  return SampledFuzzySet(a.universe(), a.step(), std::move(degrees));
}

std::vector<double> alphaCut(const SampledFuzzySet& set, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in (0, 1]");
  std::vector<double> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.degree(i) >= alpha) out.push_back(set.point(i));
  }
  return out;
}

}  // namespace aesthetic::fuzzy
