#include "aesthetic/study/ledger.hpp"

#include <algorithm>

#include "aesthetic/errors.hpp"

namespace aesthetic::study {

using nlohmann::json;
namespace kind = store::event_kind;

namespace {

json pairToJson(const ImagePair& pair) { return json::array({pair.first, pair.second}); }

ImagePair pairFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("pair must be a two-element array");
  return makePair(j[0].get<std::string>(), j[1].get<std::string>());
}

json summaryToJson(const HitSummary& s) {
  return {{"hits", s.hits}, {"trials", s.trials}, {"hitRate", s.hitRate ? json(*s.hitRate) : json(nullptr)}};
}

HitSummary summarize(std::span<const Trial> trials) {
  HitSummary s;
  s.trials = trials.size();
  s.hits = static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const Trial& t) { return t.hit; }));
  if (!trials.empty()) s.hitRate = hitRate(trials);
  return s;
}

}  // namespace

json toJson(const StudyReport& report) {
  json perUser = json::object();
  for (const auto& [user, summary] : report.perUser) perUser[user] = summaryToJson(summary);
  return {{"studyId", report.studyId},
          {"perUser", perUser},
          {"overall", summaryToJson(report.overall)},
          {"meanPerUserHitRate", report.meanPerUserHitRate ? json(*report.meanPerUserHitRate) : json(nullptr)},
          {"complete", report.complete}};
}

json toJson(const StudyRecord& study, bool includePredictions) {
  json plan = json::object();
  for (const auto& [user, trials] : study.plan) {
    json list = json::array();
    for (const auto& t : trials) {
      json entry = {{"pair", pairToJson(t.pair)}, {"left", t.left}, {"right", t.right}};
      if (includePredictions) {
        entry["predicted"] = t.prediction.winner;
        entry["tie"] = t.prediction.tie;
        entry["totals"] = {t.prediction.firstTotal, t.prediction.secondTotal};
      }
      list.push_back(std::move(entry));
    }
    plan[user] = std::move(list);
  }
  return {{"studyId", study.studyId},
          {"imageIds", study.imageIds},
          {"userIds", study.userIds},
          {"seed", study.seed},
          {"plan", plan}};
}

StudyRecord studyFromJson(const json& payload) {
  StudyRecord study;
  study.studyId = payload.at("studyId").get<std::string>();
  study.imageIds = payload.at("imageIds").get<std::vector<std::string>>();
  study.userIds = payload.at("userIds").get<std::vector<std::string>>();
  study.seed = payload.at("seed").get<std::uint64_t>();
  for (const auto& [user, list] : payload.at("plan").items()) {
    auto& trials = study.plan[user];
    for (const auto& entry : list) {
      PlannedTrial t;
      t.pair = pairFromJson(entry.at("pair"));
      t.left = entry.at("left").get<std::string>();
      t.right = entry.at("right").get<std::string>();
      t.prediction.winner = entry.at("predicted").get<std::string>();
      t.prediction.tie = entry.at("tie").get<bool>();
      const auto& totals = entry.at("totals");
      t.prediction.firstTotal = totals.at(0).get<double>();
      t.prediction.secondTotal = totals.at(1).get<double>();
      trials.push_back(std::move(t));
    }
  }
  return study;
}

StudyLedger StudyLedger::replay(std::span<const store::EventRecord> records) {
  StudyLedger ledger;
  for (const auto& record : records) ledger.apply(record);
  return ledger;
}

void StudyLedger::apply(const store::EventRecord& record) {
  const auto& p = record.payload;
  try {
    if (record.kind == kind::kUserCreated) {
      UserRecord user{p.at("userId").get<std::string>(), p.at("name").get<std::string>(), std::nullopt};
      if (users_.count(user.userId) != 0) throw ConflictError("user '" + user.userId + "' already exists");
      users_.emplace(user.userId, std::move(user));

    } else if (record.kind == kind::kColorRatingSubmitted) {
      const auto userId = p.at("userId").get<std::string>();
      auto it = users_.find(userId);
      if (it == users_.end()) throw LookupError("unknown user '" + userId + "'");
      std::array<double, color::kBasicColorCount> ratings{};
      const auto& map = p.at("ratings");
      if (map.size() != color::kBasicColorCount) throw ArgumentError("ratings must cover all twelve colors");
      for (auto c : color::kAllBasicColors) ratings[color::index(c)] = map.at(std::string(color::name(c))).get<double>();
      it->second.profile = preference::ColorRatingProfile(userId, ratings);

    } else if (record.kind == kind::kStudyCreated) {
      auto study = studyFromJson(p);
      if (studies_.count(study.studyId) != 0) throw ConflictError("study '" + study.studyId + "' already exists");
      for (const auto& u : study.userIds) user(u);
      trials_[study.studyId];
      studies_.emplace(study.studyId, std::move(study));

    } else if (record.kind == kind::kTrialRecorded) {
      Trial trial;
      trial.studyId = p.at("studyId").get<std::string>();
      trial.userId = p.at("userId").get<std::string>();
      trial.pair = pairFromJson(p.at("pair"));
      trial.humanChoice = p.at("choice").get<std::string>();

      const auto& s = study(trial.studyId);
      auto planIt = s.plan.find(trial.userId);
      if (planIt == s.plan.end()) throw LookupError("user '" + trial.userId + "' is not part of study " + s.studyId);
      auto planned = std::find_if(planIt->second.begin(), planIt->second.end(),
                                  [&](const PlannedTrial& t) { return t.pair == trial.pair; });
      if (planned == planIt->second.end()) throw LookupError("pair is not part of the study plan");
      if (!trial.pair.contains(trial.humanChoice)) throw ArgumentError("choice must be one of the paired images");
      if (hasTrial(trial.studyId, trial.userId, trial.pair)) {
        throw ConflictError("trial already recorded for this user and pair");
      }

      trial.predictedWinner = planned->prediction.winner;
      trial.tie = planned->prediction.tie;
      trial.hit = trial.predictedWinner == trial.humanChoice;
      if (p.contains("predicted") && p.at("predicted").get<std::string>() != trial.predictedWinner) {
        throw ArgumentError("recorded prediction disagrees with the frozen study plan");
      }
      trials_[trial.studyId].push_back(std::move(trial));
    }
    // Unknown kinds are ignored so newer logs remain readable.
  } catch (const json::exception& e) {
    throw ArgumentError("record " + std::to_string(record.seq) + " (" + record.kind + "): " + e.what());
  }
}

const UserRecord& StudyLedger::user(const std::string& userId) const {
  auto it = users_.find(userId);
  if (it == users_.end()) throw LookupError("unknown user '" + userId + "'");
  return it->second;
}

const StudyRecord& StudyLedger::study(const std::string& studyId) const {
  auto it = studies_.find(studyId);
  if (it == studies_.end()) throw LookupError("unknown study '" + studyId + "'");
  return it->second;
}

const preference::ColorRatingProfile& StudyLedger::profile(const std::string& userId) const {
  const auto& u = user(userId);
  if (!u.profile) throw LookupError("user '" + userId + "' has not submitted color ratings");
  return *u.profile;
}

std::vector<Trial> StudyLedger::trials(const std::string& studyId) const {
  study(studyId);
  auto it = trials_.find(studyId);
  return it == trials_.end() ? std::vector<Trial>{} : it->second;
}

std::vector<Trial> StudyLedger::trials(const std::string& studyId, const std::string& userId) const {
  std::vector<Trial> out;
  for (auto& t : trials(studyId)) {
    if (t.userId == userId) out.push_back(std::move(t));
  }
  return out;
}

bool StudyLedger::hasTrial(const std::string& studyId, const std::string& userId, const ImagePair& pair) const {
  auto it = trials_.find(studyId);
  if (it == trials_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const Trial& t) { return t.userId == userId && t.pair == pair; });
}

std::optional<std::pair<std::size_t, const PlannedTrial*>> StudyLedger::nextTrial(const std::string& studyId,
                                                                                  const std::string& userId) const {
  const auto& s = study(studyId);
  auto planIt = s.plan.find(userId);
  if (planIt == s.plan.end()) throw LookupError("user '" + userId + "' is not part of study " + studyId);
  for (std::size_t i = 0; i < planIt->second.size(); ++i) {
    const auto& planned = planIt->second[i];
    if (!hasTrial(studyId, userId, planned.pair)) return std::make_pair(i, &planned);
  }
  return std::nullopt;
}

StudyReport StudyLedger::report(const std::string& studyId) const {
  const auto& s = study(studyId);
  const auto all = trials(studyId);

  StudyReport report;
  report.studyId = studyId;
  report.overall = summarize(all);
  report.complete = true;

  double rateSum = 0.0;
  std::size_t rated = 0;
  for (const auto& userId : s.userIds) {
    const auto mine = trials(studyId, userId);
    auto summary = summarize(mine);
    if (summary.hitRate) {
      rateSum += *summary.hitRate;
      ++rated;
    }
    if (mine.size() != s.plan.at(userId).size()) report.complete = false;
    report.perUser.emplace(userId, summary);
  }
  if (rated > 0) report.meanPerUserHitRate = rateSum / static_cast<double>(rated);
  return report;
}

}  // namespace aesthetic::study
