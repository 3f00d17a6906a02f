#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aesthetic/preference/preference.hpp"
#include "aesthetic/store/event_log.hpp"
#include "aesthetic/study/study.hpp"

namespace aesthetic::study {

struct UserRecord {
  std::string userId;
  std::string name;
  std::optional<preference::ColorRatingProfile> profile;
};

/// One planned comparison with its presentation order and frozen prediction.
struct PlannedTrial {
  ImagePair pair;
  std::string left;
  std::string right;
  Prediction prediction;
};

struct StudyRecord {
  std::string studyId;
  std::vector<std::string> imageIds;
  std::vector<std::string> userIds;
  std::uint64_t seed = 0;
  std::map<std::string, std::vector<PlannedTrial>> plan;  // per user
};

struct HitSummary {
  std::size_t hits = 0;
  std::size_t trials = 0;
  std::optional<double> hitRate;  // absent without trials
};

struct StudyReport {
  std::string studyId;
  std::map<std::string, HitSummary> perUser;
  HitSummary overall;                        // pooled over every trial
  std::optional<double> meanPerUserHitRate;  // over users with trials
  bool complete = false;
};

nlohmann::json toJson(const StudyReport& report);
nlohmann::json toJson(const StudyRecord& study, bool includePredictions);
StudyRecord studyFromJson(const nlohmann::json& payload);

/// Study state rebuilt purely from event records.
class StudyLedger {
 public:
  static StudyLedger replay(std::span<const store::EventRecord> records);

  /// Applies one record. Throws ArgumentError / LookupError on records that
  /// are inconsistent with the current state, ConflictError on a duplicate
  /// (study, user, pair) trial.
  void apply(const store::EventRecord& record);

  const std::map<std::string, UserRecord>& users() const noexcept { return users_; }
  const std::map<std::string, StudyRecord>& studies() const noexcept { return studies_; }

  const UserRecord& user(const std::string& userId) const;
  const StudyRecord& study(const std::string& studyId) const;
  /// Throws LookupError when the user has not submitted ratings.
  const preference::ColorRatingProfile& profile(const std::string& userId) const;

  /// Trials in recording order.
  std::vector<Trial> trials(const std::string& studyId) const;
  std::vector<Trial> trials(const std::string& studyId, const std::string& userId) const;
  bool hasTrial(const std::string& studyId, const std::string& userId, const ImagePair& pair) const;

  /// Next unrecorded planned trial for the user, in plan order.
  std::optional<std::pair<std::size_t, const PlannedTrial*>> nextTrial(const std::string& studyId,
                                                                       const std::string& userId) const;

  StudyReport report(const std::string& studyId) const;

 private:
  std::map<std::string, UserRecord> users_;
  std::map<std::string, StudyRecord> studies_;
  std::map<std::string, std::vector<Trial>> trials_;  // per study
};

}  // namespace aesthetic::study
