#include "aesthetic/fuzzy/mamdani.hpp"

#include <algorithm>
#include <set>

#include "aesthetic/errors.hpp"

namespace aesthetic::fuzzy {

MamdaniEngine::MamdaniEngine(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                             std::vector<FuzzyRule> rules, double outputStep)
    : inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)), step_(outputStep) {
  if (inputs_.empty()) throw ArgumentError("engine needs at least one input variable");
  if (rules_.empty()) throw ArgumentError("engine needs at least one rule");

  std::set<std::string> names;
  for (const auto& var : inputs_) {
    if (!names.insert(var.name()).second) throw ArgumentError("duplicate input variable '" + var.name() + "'");
  }

  resolved_.reserve(rules_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    if (rule.antecedent.size() != inputs_.size()) {
      throw ArgumentError("rule " + std::to_string(r + 1) + " must name one term per input variable");
    }
    ResolvedRule resolved{};
    for (std::size_t v = 0; v < inputs_.size(); ++v) {
      auto idx = inputs_[v].termIndex(rule.antecedent[v]);
      if (!idx) {
        throw ArgumentError("rule " + std::to_string(r + 1) + ": variable '" + inputs_[v].name() +
                            "' has no term '" + rule.antecedent[v] + "'");
      }
      resolved.antecedentTerms.push_back(*idx);
    }
    auto out = output_.termIndex(rule.consequent);
    if (!out) {
      throw ArgumentError("rule " + std::to_string(r + 1) + ": output '" + output_.name() + "' has no term '" +
                          rule.consequent + "'");
    }
    resolved.consequentTerm = *out;
    resolved_.push_back(std::move(resolved));
  }

  for (const auto& term : output_.terms()) {
    sampledOutputTerms_.push_back(SampledFuzzySet::fromMembership(output_.universe(), step_, term.mf));
  }
}

InferenceResult MamdaniEngine::infer(const std::map<std::string, double>& inputs) const {
  if (inputs.size() != inputs_.size()) {
    throw ArgumentError("expected " + std::to_string(inputs_.size()) + " crisp inputs, got " +
                        std::to_string(inputs.size()));
  }
  std::vector<double> ordered;
  ordered.reserve(inputs_.size());
  for (const auto& var : inputs_) {
    auto it = inputs.find(var.name());
    if (it == inputs.end()) throw ArgumentError("missing crisp input for '" + var.name() + "'");
    ordered.push_back(it->second);
  }
  return infer(ordered);
}

InferenceResult MamdaniEngine::infer(std::span<const double> inputs) const {
  if (inputs.size() != inputs_.size()) {
    throw ArgumentError("expected " + std::to_string(inputs_.size()) + " crisp inputs, got " +
                        std::to_string(inputs.size()));
  }

  std::vector<std::vector<double>> fuzzified;
  fuzzified.reserve(inputs_.size());
  for (std::size_t v = 0; v < inputs_.size(); ++v) fuzzified.push_back(inputs_[v].degrees(inputs[v]));

  InferenceResult result{0.0, false, {}, SampledFuzzySet(output_.universe(), step_)};
  result.firingStrengths.reserve(resolved_.size());
  for (const auto& rule : resolved_) {
    double strength = 1.0;
    for (std::size_t v = 0; v < rule.antecedentTerms.size(); ++v) {
      strength = std::min(strength, fuzzified[v][rule.antecedentTerms[v]]);
    }
    result.firingStrengths.push_back(strength);
    if (strength > 0.0) result.aggregate.accumulateMax(sampledOutputTerms_[rule.consequentTerm].clipped(strength));
  }

  if (auto centre = result.aggregate.centroid()) {
    result.value = *centre;
  } else {
    result.noRuleFired = true;
    result.value = 0.5 * (output_.universe().lo + output_.universe().hi);
  }
  return result;
}

}  // namespace aesthetic::fuzzy
