#include "aesthetic/study/service.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "aesthetic/errors.hpp"

namespace aesthetic::study {

using nlohmann::json;
namespace kind = store::event_kind;

StudyService::StudyService(store::Corpus corpus, store::EventLog& log, preference::PreferenceModel model)
    : corpus_(std::move(corpus)), log_(log), model_(std::move(model)) {
  const auto records = log_.snapshot();
  ledger_ = StudyLedger::replay(records);
}

std::string StudyService::createUser(const std::string& name) {
  if (name.empty()) throw ArgumentError("user name must not be empty");
  std::unique_lock lock(mutex_);
  std::size_t n = ledger_.users().size() + 1;
  while (ledger_.users().count("u" + std::to_string(n)) != 0) ++n;
  const auto userId = "u" + std::to_string(n);
  ledger_.apply(log_.append(kind::kUserCreated, {{"userId", userId}, {"name", name}}));
  return userId;
}

void StudyService::createUserWithId(const std::string& userId, const std::string& name) {
  if (userId.empty() || name.empty()) throw ArgumentError("user id and name must not be empty");
  std::unique_lock lock(mutex_);
  if (ledger_.users().count(userId) != 0) throw ConflictError("user '" + userId + "' already exists");
  ledger_.apply(log_.append(kind::kUserCreated, {{"userId", userId}, {"name", name}}));
}

void StudyService::submitRatings(const std::string& userId, const std::map<std::string, double>& sliders) {
  std::map<color::BasicColor, double> parsed;
  for (const auto& [name, value] : sliders) {
    const auto c = color::parseBasicColor(name);
    if (!c) throw ArgumentError("unknown color '" + name + "'");
    parsed.emplace(*c, value);
  }
  const auto profile = preference::ColorRatingProfile::fromSliderScale(userId, parsed);

  json ratings = json::object();
  for (auto c : color::kAllBasicColors) ratings[std::string(color::name(c))] = profile.rating(c);

  std::unique_lock lock(mutex_);
  ledger_.user(userId);
  ledger_.apply(log_.append(kind::kColorRatingSubmitted, {{"userId", userId}, {"ratings", ratings}}));
}

StudyRecord StudyService::createStudy(const std::vector<std::string>& imageIds, const std::vector<std::string>& userIds,
                                      std::optional<std::uint64_t> seed) {
  if (imageIds.size() < 2) throw ArgumentError("a study needs at least two images");
  if (userIds.empty()) throw ArgumentError("a study needs at least one participant");
  if (std::set<std::string>(imageIds.begin(), imageIds.end()).size() != imageIds.size()) {
    throw ArgumentError("study images must be distinct");
  }
  if (std::set<std::string>(userIds.begin(), userIds.end()).size() != userIds.size()) {
    throw ArgumentError("study participants must be distinct");
  }
  for (const auto& id : imageIds) {
    corpus_.table.at(id);
    corpus_.colorsOf(id);
  }

  StudyRecord study;
  study.imageIds = imageIds;
  study.userIds = userIds;
  study.seed = seed ? *seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();

  auto ordered = imageIds;
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return store::imageIdLess(a, b); });
  const auto pairs = generatePairs(ordered.size());

  std::unique_lock lock(mutex_);
  // mt19937_64 output is specified by the standard; taking the top bit keeps
  // the side assignment identical across standard libraries.
  std::mt19937_64 rng(study.seed);
  for (const auto& userId : userIds) {
    const auto& profile = ledger_.profile(userId);
    auto& plan = study.plan[userId];
    for (const auto& [i, j] : pairs) {
      PlannedTrial t;
      t.pair = {ordered[i], ordered[j]};
      t.prediction = predictChoice(t.pair, profile, corpus_, model_);
      const bool swapSides = (rng() >> 63) != 0;
      t.left = swapSides ? t.pair.second : t.pair.first;
      t.right = swapSides ? t.pair.first : t.pair.second;
      plan.push_back(std::move(t));
    }
  }
  std::size_t n = ledger_.studies().size() + 1;
  while (ledger_.studies().count("s" + std::to_string(n)) != 0) ++n;
  study.studyId = "s" + std::to_string(n);
  ledger_.apply(log_.append(kind::kStudyCreated, toJson(study, true)));
  return study;
}

std::optional<NextTrial> StudyService::nextTrial(const std::string& studyId, const std::string& userId) const {
  std::shared_lock lock(mutex_);
  const auto next = ledger_.nextTrial(studyId, userId);
  if (!next) return std::nullopt;
  const auto& planned = *next->second;
  return NextTrial{next->first, ledger_.study(studyId).plan.at(userId).size(), planned.pair, planned.left,
                   planned.right};
}

Trial StudyService::recordTrial(const std::string& studyId, const std::string& userId, const ImagePair& pair,
                                const std::string& choice) {
  std::unique_lock lock(mutex_);
  const auto& s = ledger_.study(studyId);
  auto planIt = s.plan.find(userId);
  if (planIt == s.plan.end()) throw LookupError("user '" + userId + "' is not part of study " + studyId);
  auto planned = std::find_if(planIt->second.begin(), planIt->second.end(),
                              [&](const PlannedTrial& t) { return t.pair == pair; });
  if (planned == planIt->second.end()) throw LookupError("pair is not part of the study plan");
  if (!pair.contains(choice)) throw ArgumentError("choice must be one of the paired images");
  if (ledger_.hasTrial(studyId, userId, pair)) throw ConflictError("trial already recorded for this user and pair");

  const json payload = {{"studyId", studyId},
                        {"userId", userId},
                        {"pair", {pair.first, pair.second}},
                        {"choice", choice},
                        {"predicted", planned->prediction.winner},
                        {"hit", planned->prediction.winner == choice},
                        {"tie", planned->prediction.tie}};
  ledger_.apply(log_.append(kind::kTrialRecorded, payload));
  return ledger_.trials(studyId).back();
}

StudyReport StudyService::report(const std::string& studyId) const {
  std::shared_lock lock(mutex_);
  return ledger_.report(studyId);
}

preference::PreferenceResult StudyService::predict(const std::string& userId, const std::string& imageId) const {
  std::shared_lock lock(mutex_);
  const auto& profile = ledger_.profile(userId);
  const auto& row = corpus_.table.at(imageId);
  return model_.evaluate(imageId, row.aestheticScore, corpus_.colorsOf(imageId), profile);
}

std::optional<preference::ColorRatingProfile> StudyService::profile(const std::string& userId) const {
  std::shared_lock lock(mutex_);
  return ledger_.user(userId).profile;
}

StudyLedger StudyService::ledgerSnapshot() const {
  std::shared_lock lock(mutex_);
  return ledger_;
}

}  // namespace aesthetic::study
