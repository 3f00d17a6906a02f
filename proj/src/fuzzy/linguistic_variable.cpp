#include "aesthetic/fuzzy/linguistic_variable.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "aesthetic/errors.hpp"

namespace aesthetic::fuzzy {

double Universe::clamp(double x) const noexcept { return std::clamp(x, lo, hi); }

namespace {

// Memberships are linear between consecutive breakpoints, so positivity is
// decided exactly by probing every breakpoint and every midpoint between them.
bool coversUniverse(const Universe& universe, const std::vector<FuzzyTerm>& terms) {
  std::vector<double> points{universe.lo, universe.hi};
  for (const auto& term : terms) {
    for (double p : {term.mf.left(), term.mf.peak(), term.mf.right()}) {
      if (universe.contains(p)) points.push_back(p);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto covered = [&](double x) {
    return std::any_of(terms.begin(), terms.end(), [x](const FuzzyTerm& t) { return t.mf(x) > 0.0; });
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!covered(points[i])) return false;
    if (i + 1 < points.size() && !covered(0.5 * (points[i] + points[i + 1]))) return false;
  }
  return true;
}

}  // namespace

LinguisticVariable::LinguisticVariable(std::string name, Universe universe, std::vector<FuzzyTerm> terms)
    : name_(std::move(name)), universe_(universe), terms_(std::move(terms)) {
  if (!std::isfinite(universe_.lo) || !std::isfinite(universe_.hi) || !(universe_.lo < universe_.hi)) {
    throw ArgumentError("variable '" + name_ + "': universe must satisfy lo < hi");
  }
  if (terms_.empty()) throw ArgumentError("variable '" + name_ + "' has no terms");

  std::set<std::string> labels;
  for (const auto& term : terms_) {
    if (!labels.insert(term.label).second) {
      throw ArgumentError("variable '" + name_ + "': duplicate term label '" + term.label + "'");
    }
    if (term.mf.left() < universe_.lo || term.mf.right() > universe_.hi) {
      throw ArgumentError("variable '" + name_ + "': term '" + term.label + "' extends outside the universe");
    }
  }
  if (!coversUniverse(universe_, terms_)) {
    throw ArgumentError("variable '" + name_ + "': terms leave part of the universe uncovered");
  }
}

std::optional<std::size_t> LinguisticVariable::termIndex(const std::string& label) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<double> LinguisticVariable::degrees(double x) const {
  if (std::isnan(x)) throw ArgumentError("variable '" + name_ + "': input is NaN");
  const double clamped = universe_.clamp(x);
  std::vector<double> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(term.mf(clamped));
  return out;
}

std::map<std::string, double> LinguisticVariable::fuzzify(double x) const {
  const auto values = degrees(x);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < terms_.size(); ++i) out.emplace(terms_[i].label, values[i]);
  return out;
}

}  // namespace aesthetic::fuzzy
