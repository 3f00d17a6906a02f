#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "aesthetic/preference/preference.hpp"
#include "aesthetic/store/corpus.hpp"
#include "aesthetic/store/event_log.hpp"
#include "aesthetic/study/ledger.hpp"

namespace aesthetic::study {

struct NextTrial {
  std::size_t index = 0;
  std::size_t total = 0;
  ImagePair pair;
  std::string left;
  std::string right;
};

/// Study operations over a scored corpus, persisted through an event log.
///
/// Every mutation is appended to the log and applied to the in-memory ledger
/// under one exclusive lock, so the log order is the application order.
/// Queries take a shared lock.
class StudyService {
 public:
  /// Replays the log's existing records.
  StudyService(store::Corpus corpus, store::EventLog& log, preference::PreferenceModel model = {});

  /// Returns the generated id ("u1", "u2", ...).
  std::string createUser(const std::string& name);
  /// Throws ConflictError if the id is taken.
  void createUserWithId(const std::string& userId, const std::string& name);

  /// `sliders` maps every basic-color name to a value on 0..10.
  void submitRatings(const std::string& userId, const std::map<std::string, double>& sliders);

  /// Freezes predictions and the left/right presentation order. A missing
  /// seed is drawn from std::random_device and stored with the study.
  StudyRecord createStudy(const std::vector<std::string>& imageIds, const std::vector<std::string>& userIds,
                          std::optional<std::uint64_t> seed = std::nullopt);

  std::optional<NextTrial> nextTrial(const std::string& studyId, const std::string& userId) const;

  /// Throws ConflictError when the (study, user, pair) was already recorded.
  Trial recordTrial(const std::string& studyId, const std::string& userId, const ImagePair& pair,
                    const std::string& choice);

  StudyReport report(const std::string& studyId) const;

  preference::PreferenceResult predict(const std::string& userId, const std::string& imageId) const;

  const store::Corpus& corpus() const noexcept { return corpus_; }
  std::optional<preference::ColorRatingProfile> profile(const std::string& userId) const;
  StudyLedger ledgerSnapshot() const;

 private:
  store::Corpus corpus_;
  store::EventLog& log_;
  preference::PreferenceModel model_;
  mutable std::shared_mutex mutex_;
  StudyLedger ledger_;
};

}  // namespace aesthetic::study
