#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "aesthetic/fuzzy/linguistic_variable.hpp"
#include "aesthetic/fuzzy/sampled_set.hpp"

namespace aesthetic::fuzzy {

/// IF in_0 is antecedent[0] AND in_1 is antecedent[1] ... THEN out is consequent.
/// Antecedent labels are listed in the engine's input-variable order.
struct FuzzyRule {
  std::vector<std::string> antecedent;
  std::string consequent;

  bool operator==(const FuzzyRule&) const = default;
};

struct InferenceResult {
  double value = 0.0;
  // Set when every rule fired at strength 0; value is then the universe midpoint.
  bool noRuleFired = false;
  // One entry per rule, in rule order.
  std::vector<double> firingStrengths;
  SampledFuzzySet aggregate;
};

/// Mamdani inference: min for AND, clipping for implication, max aggregation
/// and discrete centroid defuzzification over the sampled output universe.
///
/// Immutable after construction; infer() is a pure function of its inputs and
/// safe to call concurrently.
class MamdaniEngine {
 public:
  static constexpr double kDefaultStep = 0.1;

  MamdaniEngine(std::vector<LinguisticVariable> inputs, LinguisticVariable output, std::vector<FuzzyRule> rules,
                double outputStep = kDefaultStep);

  /// One crisp value per input variable, keyed by variable name.
  InferenceResult infer(const std::map<std::string, double>& inputs) const;
  /// Crisp values in input-variable order.
  InferenceResult infer(std::span<const double> inputs) const;

  const std::vector<LinguisticVariable>& inputs() const noexcept { return inputs_; }
  const LinguisticVariable& output() const noexcept { return output_; }
  const std::vector<FuzzyRule>& rules() const noexcept { return rules_; }
  double outputStep() const noexcept { return step_; }

 private:
  struct ResolvedRule {
    std::vector<std::size_t> antecedentTerms;
    std::size_t consequentTerm;
  };

  std::vector<LinguisticVariable> inputs_;
  LinguisticVariable output_;
  std::vector<FuzzyRule> rules_;
  double step_;
  std::vector<ResolvedRule> resolved_;
  std::vector<SampledFuzzySet> sampledOutputTerms_;
};

}  // namespace aesthetic::fuzzy
