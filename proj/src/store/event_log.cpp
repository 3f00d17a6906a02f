#include "aesthetic/store/event_log.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "aesthetic/errors.hpp"
#include "aesthetic/store/text.hpp"

namespace aesthetic::store {

namespace {

bool hasSeparator(std::string_view s) {
  return s.find('\t') != std::string_view::npos || s.find('\n') != std::string_view::npos ||
         s.find('\r') != std::string_view::npos;
}

}  // namespace

std::string formatEventLine(const EventRecord& record) {
  return std::to_string(record.seq) + '\t' + record.timestamp + '\t' + record.kind + '\t' + record.payload.dump();
}

EventRecord parseEventLine(std::string_view line, std::size_t lineNumber) {
  std::string_view fields[3];
  std::size_t start = 0;
  for (auto& field : fields) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) throw ParseError(lineNumber, "expected 4 tab-separated fields");
    field = line.substr(start, tab - start);
    start = tab + 1;
  }

  EventRecord record;
  record.seq = parseUnsigned(fields[0], lineNumber, "seq");
  record.timestamp = std::string(fields[1]);
  record.kind = std::string(fields[2]);
  if (record.kind.empty()) throw ParseError(lineNumber, "empty record kind");
  try {
    record.payload = nlohmann::json::parse(line.substr(start));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(lineNumber, std::string("payload is not valid JSON: ") + e.what());
  }
  return record;
}

std::vector<EventRecord> parseEventLog(std::string_view text) {
  std::vector<EventRecord> records;
  const auto lines = splitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto record = parseEventLine(lines[i], i + 1);
    if (!records.empty() && record.seq <= records.back().seq) {
      throw ParseError(i + 1, "sequence numbers must be strictly increasing");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string utcTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::system_clock::to_time_t(now);
  const auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(millis));
  return buf;
}

EventLog::EventLog(Clock clock) : clock_(std::move(clock)) {}

EventLog::EventLog(const std::filesystem::path& path, Clock clock) : clock_(std::move(clock)), path_(path) {
  if (std::filesystem::exists(path)) records_ = parseEventLog(readTextFile(path));
  out_.open(path, std::ios::binary | std::ios::app);
  if (!out_) throw IoError("cannot open event log " + path.string());
}

EventRecord EventLog::append(std::string_view kind, nlohmann::json payload) {
  if (kind.empty() || hasSeparator(kind)) throw ArgumentError("invalid record kind");

  std::lock_guard lock(mutex_);
  EventRecord record;
  record.seq = records_.empty() ? 1 : records_.back().seq + 1;
  record.timestamp = clock_();
  if (hasSeparator(record.timestamp)) throw ArgumentError("timestamp must not contain separators");
  record.kind = std::string(kind);
  record.payload = std::move(payload);

  if (path_) {
    out_ << formatEventLine(record) << '\n';
    out_.flush();
    if (!out_) throw IoError("append failed for " + path_->string());
  }
  records_.push_back(record);
  return record;
}

std::vector<EventRecord> EventLog::snapshot() const {
  std::lock_guard lock(mutex_);
  return records_;
}

std::size_t EventLog::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

}  // namespace aesthetic::store
