#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aesthetic/fuzzy/membership.hpp"

namespace aesthetic::fuzzy {

/// Closed real interval [lo, hi].
struct Universe {
  double lo = 0.0;
  double hi = 0.0;

  double clamp(double x) const noexcept;
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  bool operator==(const Universe&) const = default;
};

struct FuzzyTerm {
  std::string label;
  TriangularMF mf;

  bool operator==(const FuzzyTerm&) const = default;
};

/// A named universe partitioned by labelled triangular terms.
///
/// Construction enforces that every term's support lies inside the universe,
/// labels are unique, and every point of the universe has positive membership
/// in at least one term.
class LinguisticVariable {
 public:
  LinguisticVariable(std::string name, Universe universe, std::vector<FuzzyTerm> terms);

  const std::string& name() const noexcept { return name_; }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<FuzzyTerm>& terms() const noexcept { return terms_; }

  std::optional<std::size_t> termIndex(const std::string& label) const;

  /// Degrees in term order; the input is clamped to the universe first.
  std::vector<double> degrees(double x) const;

  /// Degree per term label; the input is clamped to the universe first.
  std::map<std::string, double> fuzzify(double x) const;

  bool operator==(const LinguisticVariable&) const = default;

 private:
  std::string name_;
  Universe universe_;
  std::vector<FuzzyTerm> terms_;
};

}  // namespace aesthetic::fuzzy
