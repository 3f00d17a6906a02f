#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace aesthetic::store {

namespace event_kind {
inline constexpr std::string_view kUserCreated = "user-created";
inline constexpr std::string_view kColorRatingSubmitted = "color-rating-submitted";
inline constexpr std::string_view kStudyCreated = "study-created";
inline constexpr std::string_view kTrialRecorded = "trial-recorded";
}  // namespace event_kind

struct EventRecord {
  std::uint64_t seq = 0;
  std::string timestamp;
  std::string kind;
  nlohmann::json payload;

  bool operator==(const EventRecord&) const = default;
};

/// `seq<TAB>timestamp<TAB>kind<TAB>compact-json`
std::string formatEventLine(const EventRecord& record);
EventRecord parseEventLine(std::string_view line, std::size_t lineNumber);

/// Parses a whole log; sequence numbers must be strictly increasing.
std::vector<EventRecord> parseEventLog(std::string_view text);

/// ISO-8601 UTC with millisecond precision.
std::string utcTimestamp();

/// Append-only event log with a single writer.
///
/// Appends are serialized by an internal mutex and flushed before returning;
/// snapshot() returns a consistent prefix. Records are never rewritten.
class EventLog {
 public:
  using Clock = std::function<std::string()>;

  /// In-memory log (nothing persisted).
  explicit EventLog(Clock clock = utcTimestamp);
  /// File-backed log; existing records are loaded and validated, the file is
  /// created when missing. Throws IoError / ParseError.
  explicit EventLog(const std::filesystem::path& path, Clock clock = utcTimestamp);

  EventLog(const EventLog&) = delete;
  EventLog& operator=(const EventLog&) = delete;

  EventRecord append(std::string_view kind, nlohmann::json payload);

  std::vector<EventRecord> snapshot() const;
  std::size_t size() const;
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

 private:
  mutable std::mutex mutex_;
  Clock clock_;
  std::optional<std::filesystem::path> path_;
  std::ofstream out_;
  std::vector<EventRecord> records_;
};

}  // namespace aesthetic::store
