#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aesthetic/fuzzy/linguistic_variable.hpp"
#include "aesthetic/fuzzy/membership.hpp"

namespace aesthetic::fuzzy {

/// Number of grid points lo, lo+step, ... not exceeding hi.
std::size_t sampleCount(const Universe& universe, double step);

/// A fuzzy set over a uniformly sampled universe.
class SampledFuzzySet {
 public:
  /// All degrees zero.
  SampledFuzzySet(Universe universe, double step);
  /// Throws ArgumentError if the degree count does not match the grid or any
  /// degree lies outside [0, 1].
  SampledFuzzySet(Universe universe, double step, std::vector<double> degrees);

  static SampledFuzzySet fromMembership(Universe universe, double step, const TriangularMF& mf);

  const Universe& universe() const noexcept { return universe_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  double point(std::size_t i) const noexcept { return universe_.lo + static_cast<double>(i) * step_; }
  double degree(std::size_t i) const { return degrees_.at(i); }
  std::span<const double> degrees() const noexcept { return degrees_; }

  /// Pointwise min(mu, height).
  SampledFuzzySet clipped(double height) const;
  /// Pointwise max with another set on the same grid.
  void accumulateMax(const SampledFuzzySet& other);

  bool sameGrid(const SampledFuzzySet& other) const noexcept;
  bool isEmpty() const noexcept;

  /// Discrete centre of mass sum(x*mu)/sum(mu); nullopt when all degrees are 0.
  std::optional<double> centroid() const;

  bool operator==(const SampledFuzzySet&) const = default;

 private:
  Universe universe_;
  double step_;
  std::vector<double> degrees_;
};

SampledFuzzySet unionOf(const SampledFuzzySet& a, const SampledFuzzySet& b);
SampledFuzzySet intersectionOf(const SampledFuzzySet& a, const SampledFuzzySet& b);

/// Sample points whose degree is at least alpha, in ascending order.
/// Throws ArgumentError unless 0 < alpha <= 1.
std::vector<double> alphaCut(const SampledFuzzySet& set, double alpha);

}  // namespace aesthetic::fuzzy
