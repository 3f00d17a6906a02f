#include "aesthetic/fuzzy/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aesthetic/errors.hpp"

namespace aesthetic::fuzzy {

using nlohmann::json;

namespace {

LinguisticVariable variableFromJson(const json& doc) {
  const auto& universe = doc.at("universe");
  if (!universe.is_array() || universe.size() != 2) throw FormatError("universe must be [lo, hi]");

  std::vector<FuzzyTerm> terms;
  for (const auto& term : doc.at("terms")) {
    const auto& mf = term.at("mf");
    if (!mf.is_array() || mf.size() != 3) throw FormatError("term mf must be [left, peak, right]");
    terms.push_back({term.at("label").get<std::string>(),
                     TriangularMF(mf[0].get<double>(), mf[1].get<double>(), mf[2].get<double>())});
  }
  return LinguisticVariable(doc.at("name").get<std::string>(),
                            Universe{universe[0].get<double>(), universe[1].get<double>()}, std::move(terms));
}

json variableToJson(const LinguisticVariable& var) {
  json terms = json::array();
  for (const auto& term : var.terms()) {
    terms.push_back({{"label", term.label}, {"mf", {term.mf.left(), term.mf.peak(), term.mf.right()}}});
  }
  return {{"name", var.name()}, {"universe", {var.universe().lo, var.universe().hi}}, {"terms", terms}};
}

}  // namespace

MamdaniEngine parseEngineConfig(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("engine config is not valid JSON: ") + e.what());
  }

  try {
    std::vector<LinguisticVariable> inputs;
    for (const auto& var : doc.at("inputs")) inputs.push_back(variableFromJson(var));
    LinguisticVariable output = variableFromJson(doc.at("output"));

    std::vector<FuzzyRule> rules;
    for (const auto& rule : doc.at("rules")) {
      const auto& conditions = rule.at("if");
      if (!conditions.is_object() || conditions.size() != inputs.size()) {
        throw FormatError("each rule must name every input variable exactly once");
      }
      FuzzyRule parsed;
      for (const auto& var : inputs) {
        auto it = conditions.find(var.name());
        if (it == conditions.end()) throw FormatError("rule is missing input '" + var.name() + "'");
        parsed.antecedent.push_back(it->get<std::string>());
      }
      parsed.consequent = rule.at("then").get<std::string>();
      rules.push_back(std::move(parsed));
    }
    return MamdaniEngine(std::move(inputs), std::move(output), std::move(rules),
                         doc.value("step", MamdaniEngine::kDefaultStep));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed engine config: ") + e.what());
  }
}

MamdaniEngine loadEngineConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open engine config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseEngineConfig(buffer.str());
}

std::string dumpEngineConfig(const MamdaniEngine& engine) {
  json inputs = json::array();
  for (const auto& var : engine.inputs()) inputs.push_back(variableToJson(var));

  json rules = json::array();
  for (const auto& rule : engine.rules()) {
    json conditions = json::object();
    for (std::size_t v = 0; v < engine.inputs().size(); ++v) conditions[engine.inputs()[v].name()] = rule.antecedent[v];
    rules.push_back({{"if", conditions}, {"then", rule.consequent}});
  }

  json doc = {{"step", engine.outputStep()},
              {"inputs", inputs},
              {"output", variableToJson(engine.output())},
              {"rules", rules}};
  return doc.dump(2);
}

}  // namespace aesthetic::fuzzy
