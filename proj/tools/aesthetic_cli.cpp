// Command-line front end: corpus ingestion, scoring, color ratings,
// per-user predictions and the 2AFC study server.

#include <cmath>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aesthetic/color/basic_color.hpp"
#include "aesthetic/errors.hpp"
#include "aesthetic/fuzzy/config.hpp"
#include "aesthetic/image/standard_image.hpp"
#include "aesthetic/preference/preference.hpp"
#include "aesthetic/scoring/scoring.hpp"
#include "aesthetic/store/corpus.hpp"
#include "aesthetic/store/event_log.hpp"
#include "aesthetic/store/text.hpp"
#include "aesthetic/study/http_api.hpp"
#include "aesthetic/study/service.hpp"

namespace fs = std::filesystem;
using namespace aesthetic;

namespace {

preference::PreferenceModel loadModel(const std::string& configPath) {
  if (configPath.empty()) return preference::PreferenceModel();
  return preference::PreferenceModel(fuzzy::loadEngineConfig(configPath));
}

void printCorrelation(const store::FeatureTable& table) {
  std::vector<double> likes;
  std::vector<double> scores;
  for (const auto& row : table.rows()) {
    likes.push_back(static_cast<double>(row.likes));
    scores.push_back(row.aestheticScore);
  }
  try {
    std::printf("likes/score pearson r: %.4f\n", scoring::pearsonCorrelation(likes, scores));
  } catch (const std::exception& e) {
    std::printf("likes/score pearson r: undefined (%s)\n", e.what());
  }
}

int runIngest(const std::string& dir, const std::string& likes, const std::string& out, std::string imagesOut,
              unsigned threads) {
  store::IngestOptions options;
  if (!likes.empty()) options.likesFile = likes;
  options.threads = threads;
  const auto result = store::ingest(dir, options);

  const fs::path tablePath(out);
  if (tablePath.has_parent_path()) fs::create_directories(tablePath.parent_path());
  store::saveCorpus(result.corpus, tablePath);

  if (imagesOut.empty()) imagesOut = (tablePath.parent_path() / "images").string();
  fs::create_directories(imagesOut);
  for (const auto& [id, img] : result.images) image::savePng(img, fs::path(imagesOut) / (id + ".png"));

  for (const auto& skipped : result.skipped) {
    std::fprintf(stderr, "skipped %s: %s\n", skipped.path.string().c_str(), skipped.reason.c_str());
  }
  const auto& stats = *result.corpus.stats;
  std::printf("ingested %zu images (%zu skipped) -> %s\n", result.corpus.table.size(), result.skipped.size(),
              tablePath.string().c_str());
  std::printf("stats: CH [%s, %s]  L [%s, %s]  C [%s, %s]\n", store::formatNumber(stats.colorHarmony.min).c_str(),
              store::formatNumber(stats.colorHarmony.max).c_str(), store::formatNumber(stats.lightness.min).c_str(),
              store::formatNumber(stats.lightness.max).c_str(), store::formatNumber(stats.complexity.min).c_str(),
              store::formatNumber(stats.complexity.max).c_str());
  printCorrelation(result.corpus.table);
  return 0;
}

int runScore(const std::string& tablePath) {
  const auto table = store::loadTable(tablePath);
  std::printf("%-10s %7s %8s %3s %6s %7s %7s %7s %7s %8s %8s\n", "image_id", "likes", "CH", "L", "C", "CH_n", "L_n",
              "C_n", "S_n", "stored", "score");
  double worst = 0.0;
  for (const auto& row : table.rows()) {
    const double score =
        scoring::aestheticScore(row.normalized.colorHarmony, row.normalized.lightness, row.normalized.simplicity);
    worst = std::max(worst, std::abs(score - row.aestheticScore));
    std::printf("%-10s %7llu %8.2f %3d %6zu %7.2f %7.2f %7.2f %7.2f %8.4f %8.4f\n", row.imageId.c_str(),
                static_cast<unsigned long long>(row.likes), row.raw.colorHarmony, row.raw.lightness,
                row.raw.complexity, row.normalized.colorHarmony, row.normalized.lightness, row.normalized.complexity,
                row.normalized.simplicity, row.aestheticScore, score);
  }
  std::printf("rows: %zu  max |stored - recomputed|: %.6f\n", table.size(), worst);
  if (table.size() >= 2) printCorrelation(table);
  return 0;
}

int runRateColors(const std::string& userId, const std::string& name, const std::string& eventsPath) {
  store::EventLog log{fs::path(eventsPath)};
  study::StudyService service(store::Corpus{}, log);
  if (!service.ledgerSnapshot().users().count(userId)) service.createUserWithId(userId, name.empty() ? userId : name);

  std::map<std::string, double> sliders;
  for (auto c : color::kAllBasicColors) {
    const std::string colorName(color::name(c));
    while (true) {
      std::fprintf(stderr, "%s [0-10]: ", colorName.c_str());
      std::string line;
      if (!std::getline(std::cin, line)) throw ArgumentError("input ended before all twelve colors were rated");
      try {
        std::size_t used = 0;
        const double v = std::stod(line, &used);
        if (v >= 0.0 && v <= 10.0) {
          sliders[colorName] = v;
          break;
        }
      } catch (const std::exception&) {
      }
      std::fprintf(stderr, "  enter a number between 0 and 10\n");
    }
  }
  service.submitRatings(userId, sliders);
  std::printf("stored ratings for %s in %s\n", userId.c_str(), eventsPath.c_str());
  return 0;
}

int runPredict(const std::string& userId, const std::string& imageId, const std::string& tablePath,
               const std::string& eventsPath, const std::string& configPath) {
  store::EventLog log{fs::path(eventsPath)};
  study::StudyService service(store::loadCorpus(tablePath), log, loadModel(configPath));
  const auto result = service.predict(userId, imageId);
  std::printf("user %s, image %s\n", result.userId.c_str(), result.imageId.c_str());
  std::printf("aesthetic score:          %.4f\n", result.aestheticScore);
  std::printf("color-scheme preference:  %.4f\n", result.colorSchemePreference);
  std::printf("total preference:         %.2f\n", result.totalPreference);
  return 0;
}

study::StudyHttpServer* g_server = nullptr;

void onSignal(int) {
  if (g_server) g_server->stop();
}

int runServe(const std::string& host, int port, const std::string& tablePath, const std::string& eventsPath,
             std::string imagesDir, const std::string& configPath) {
  store::EventLog log{fs::path(eventsPath)};
  study::StudyService service(store::loadCorpus(tablePath), log, loadModel(configPath));
  if (imagesDir.empty()) imagesDir = (fs::path(tablePath).parent_path() / "images").string();
  study::StudyHttpServer server(service, study::ImageDirectory(imagesDir));
  if (!server.bind(host, port)) throw IoError("cannot bind " + host + ":" + std::to_string(port));

  g_server = &server;
  std::signal(SIGINT, onSignal);
  std::signal(SIGTERM, onSignal);
  std::printf("serving %zu images on http://%s:%d (events: %s)\n", service.corpus().table.size(), host.c_str(), port,
              eventsPath.c_str());
  std::fflush(stdout);
  server.listenAfterBind();
  g_server = nullptr;
  return 0;
}

int runReport(const std::string& studyId, const std::string& eventsPath) {
  const auto records = store::parseEventLog(store::readTextFile(eventsPath));
  const auto ledger = study::StudyLedger::replay(records);
  std::printf("%s\n", study::toJson(ledger.report(studyId)).dump(2).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Personalized aesthetic preference for interior images"};
  app.require_subcommand(1);

  std::string dir, likes, out = "features.csv", imagesOut;
  unsigned threads = 0;
  auto* ingest = app.add_subcommand("ingest", "Standardize a directory of images and write the feature table");
  ingest->add_option("dir", dir, "Directory of PNG/JPEG images")->required();
  ingest->add_option("--likes", likes, "CSV sidecar with image_id,likes");
  ingest->add_option("--out", out, "Feature table to write")->capture_default_str();
  ingest->add_option("--images-out", imagesOut, "Where standardized PNGs go (default: <out dir>/images)");
  ingest->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string table = "features.csv";
  auto* score = app.add_subcommand("score", "Print a feature table with recomputed aesthetic scores");
  score->add_option("--table", table, "Feature table")->required();

  std::string user, name, events = "events.log";
  auto* rate = app.add_subcommand("rate-colors", "Rate the twelve basic colors on 0-10 from the terminal");
  rate->add_option("--user", user, "User id (created if unknown)")->required();
  rate->add_option("--name", name, "Display name for a new user");
  rate->add_option("--events", events, "Event log")->capture_default_str();

  std::string imageId, config;
  auto* predict = app.add_subcommand("predict", "Personalized total preference of one image for one user");
  predict->add_option("--user", user, "User id")->required();
  predict->add_option("--image", imageId, "Image id")->required();
  predict->add_option("--table", table, "Feature table")->capture_default_str();
  predict->add_option("--events", events, "Event log")->capture_default_str();
  predict->add_option("--config", config, "Fuzzy engine config (JSON); default is the built-in rule base");

  auto* studyCmd = app.add_subcommand("study", "2AFC study server and reports");
  studyCmd->require_subcommand(1);
  std::string host = "127.0.0.1", imagesDir;
  int port = 8080;
  auto* serve = studyCmd->add_subcommand("serve", "Serve the study HTTP API");
  serve->add_option("--port", port, "TCP port")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--table", table, "Feature table")->required();
  serve->add_option("--events", events, "Event log")->capture_default_str();
  serve->add_option("--images", imagesDir, "Image directory (default: <table dir>/images)");
  serve->add_option("--config", config, "Fuzzy engine config (JSON)");

  std::string studyId;
  auto* report = studyCmd->add_subcommand("report", "Hit-rate report of a study");
  report->add_option("--id", studyId, "Study id")->required();
  report->add_option("--events", events, "Event log")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) return runIngest(dir, likes, out, imagesOut, threads);
    if (*score) return runScore(table);
    if (*rate) return runRateColors(user, name, events);
    if (*predict) return runPredict(user, imageId, table, events, config);
    if (*serve) return runServe(host, port, table, events, imagesDir, config);
    if (*report) return runReport(studyId, events);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
