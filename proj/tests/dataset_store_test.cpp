#include <gtest/gtest.h>

#include <fstream>
#include <thread>

#include "aesthetic/errors.hpp"
#include "aesthetic/store/corpus.hpp"
#include "aesthetic/store/event_log.hpp"
#include "aesthetic/store/feature_table.hpp"
#include "aesthetic/store/text.hpp"
#include "support/test_support.hpp"

namespace aesthetic::store {
namespace {

using image::Rgb;
using test_support::TempDir;

scoring::ScoredRow sampleRow(std::string id, double ch, int l, std::size_t c) {
  const scoring::DatasetStats stats{{90, 100}, {1, 10}, {0, 400}};
  return scoring::scoreImage(std::move(id), 42, {ch, l, c}, stats);
}

TEST(FeatureTable, CsvRoundTrip) {
  const FeatureTable table({sampleRow("1", 97.41, 5, 149), sampleRow("kitchen_2", 99.625, 9, 0), sampleRow("3", 90, 1, 400)});
  const auto text = formatTable(table);
  EXPECT_EQ(text.substr(0, text.find('\n')), kFeatureTableHeader);
  const auto parsed = parseTable(text);
  ASSERT_EQ(parsed.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& a = table.rows()[i];
    const auto& b = parsed.rows()[i];
    EXPECT_EQ(a.imageId, b.imageId);
    EXPECT_EQ(a.likes, b.likes);
    EXPECT_EQ(a.raw.lightness, b.raw.lightness);
    EXPECT_EQ(a.raw.complexity, b.raw.complexity);
    EXPECT_NEAR(a.raw.colorHarmony, b.raw.colorHarmony, 1e-6);
    EXPECT_NEAR(a.normalized.colorHarmony, b.normalized.colorHarmony, 1e-6);
    EXPECT_NEAR(a.aestheticScore, b.aestheticScore, 1e-6);
  }
  EXPECT_EQ(formatTable(parsed), text);
}

TEST(FeatureTable, HeaderMismatchIsAParseError) {
  auto text = formatTable(FeatureTable({sampleRow("1", 95, 5, 100)}));
  text.replace(0, 8, "image-id");
  EXPECT_THROW(parseTable(text), ParseError);
  EXPECT_THROW(parseTable(""), ParseError);
}

TEST(FeatureTable, ParseErrorsCarryLineNumbers) {
  const std::string header(kFeatureTableHeader);
  const auto good = "1,807,97.41,5,149,0.86,0.5,0.15,0.85,0.68";
  auto lineOf = [](const std::string& text) {
    try {
      parseTable(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(lineOf(header + "\n" + good + "\n2,1,x,5,149,0.86,0.5,0.15,0.85,0.68\n"), 3u);
  EXPECT_EQ(lineOf(header + "\n" + good + "\n" + good + "\n"), 3u);                        // duplicate id
  EXPECT_EQ(lineOf(header + "\n2,1,97,5,149,0.86,0.5,0.15\n"), 2u);                         // column count
  EXPECT_EQ(lineOf(header + "\n2,1,97,11,149,0.86,0.5,0.15,0.85,0.68\n"), 2u);             // lightness range
  EXPECT_EQ(lineOf(header + "\n2,1,97,5,149,0.86,0.5,0.15,0.5,0.68\n"), 2u);               // simplicity
  EXPECT_EQ(lineOf(header + "\n2,-1,97,5,149,0.86,0.5,0.15,0.85,0.68\n"), 2u);             // likes
}

TEST(FeatureTable, ReferenceFixtureParses) {
  const auto table = loadTable(test_support::fixture("reference_scores.csv"));
  ASSERT_EQ(table.size(), 10u);
  EXPECT_EQ(table.rows().front().imageId, "1");
  EXPECT_EQ(table.at("2").likes, 2558u);
  EXPECT_EQ(table.at("10").raw.complexity, 346u);
  EXPECT_THROW(table.at("11"), LookupError);
}

TEST(FeatureTable, IdRules) {
  EXPECT_TRUE(isValidImageId("living-room_01"));
  EXPECT_FALSE(isValidImageId(""));
  EXPECT_FALSE(isValidImageId("a,b"));
  EXPECT_FALSE(isValidImageId("a/b"));
  EXPECT_FALSE(isValidImageId("tab\there"));
  EXPECT_TRUE(imageIdLess("2", "10"));
  EXPECT_TRUE(imageIdLess("10", "a"));
  EXPECT_TRUE(imageIdLess("a10", "a2"));
  EXPECT_FALSE(imageIdLess("7", "7"));
  EXPECT_THROW(FeatureTable({sampleRow("x", 95, 5, 1), sampleRow("x", 95, 5, 1)}), ArgumentError);
}

TEST(FeatureTable, NumberFormatting) {
  EXPECT_EQ(formatNumber(0.5), "0.5");
  EXPECT_EQ(formatNumber(100.0), "100");
  EXPECT_EQ(formatNumber(0.6775), "0.6775");
  EXPECT_EQ(formatNumber(1.0 / 3.0), "0.333333");
  EXPECT_EQ(formatNumber(-0.0), "0");
}

void writeUniform(const std::filesystem::path& path, Rgb c) { image::savePng(test_support::uniform(c), path); }

TEST(Ingest, LightnessLevelsFromDisk) {
  TempDir dir;
  writeUniform(dir / "black.png", {0, 0, 0});
  writeUniform(dir / "white.png", {255, 255, 255});
  writeUniform(dir / "gray.png", {128, 128, 128});
  const auto result = ingest(dir.path());
  const auto& t = result.corpus.table;
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.at("black").raw.lightness, 1);
  EXPECT_EQ(t.at("white").raw.lightness, 10);
  EXPECT_EQ(t.at("gray").raw.lightness, 6);
  EXPECT_DOUBLE_EQ(t.at("black").normalized.lightness, 0.0);
  EXPECT_DOUBLE_EQ(t.at("white").normalized.lightness, 1.0);
  EXPECT_EQ(result.corpus.colorsOf("white").entries().front().color, color::BasicColor::White);
  ASSERT_TRUE(result.corpus.stats.has_value());
  EXPECT_EQ(result.corpus.stats->lightness, (scoring::FeatureRange{1, 10}));
}

TEST(Ingest, SingleImageNormalizesToHalf) {
  TempDir dir;
  image::savePng(test_support::interiorScene(4), dir / "only.png");
  const auto& row = ingest(dir.path()).corpus.table.at("only");
  EXPECT_DOUBLE_EQ(row.normalized.colorHarmony, 0.5);
  EXPECT_DOUBLE_EQ(row.normalized.lightness, 0.5);
  EXPECT_DOUBLE_EQ(row.normalized.complexity, 0.5);
  EXPECT_DOUBLE_EQ(row.normalized.simplicity, 0.5);
  EXPECT_DOUBLE_EQ(row.aestheticScore, 0.5);
}

TEST(Ingest, IdempotentAndOrderIndependentOfThreads) {
  TempDir dir;
  for (int i = 0; i < 12; ++i) image::savePng(test_support::interiorScene(i), dir / (std::to_string(i + 1) + ".png"));
  const auto a = ingest(dir.path(), {std::nullopt, 1});
  const auto b = ingest(dir.path(), {std::nullopt, 4});
  EXPECT_EQ(formatTable(a.corpus.table), formatTable(b.corpus.table));
  EXPECT_EQ(formatColors(a.corpus.colors), formatColors(b.corpus.colors));
  EXPECT_EQ(a.corpus.table.rows()[1].imageId, "2");  // natural, not lexicographic, order
  EXPECT_EQ(a.corpus.table.rows()[9].imageId, "10");
}

TEST(Ingest, LikesSidecar) {
  TempDir dir;
  writeUniform(dir / "a.png", {10, 10, 10});
  writeUniform(dir / "b.jpg", {200, 200, 200});
  writeTextFile(dir / "likes.csv", "image_id,likes\na,807\nb,2558\nc,4\n");
  const auto result = ingest(dir.path(), {dir / "likes.csv", 0});
  EXPECT_EQ(result.corpus.table.at("a").likes, 807u);
  EXPECT_EQ(result.corpus.table.at("b").likes, 2558u);

  writeTextFile(dir / "bad.csv", "image_id,likes\na,lots\n");
  EXPECT_THROW(loadLikes(dir / "bad.csv"), ParseError);
}

TEST(Ingest, SkipsUndecodableAndIgnoresOtherFiles) {
  TempDir dir;
  writeUniform(dir / "ok.png", {10, 10, 10});
  std::ofstream(dir / "broken.jpg") << "not a jpeg";
  std::ofstream(dir / "notes.txt") << "hello";
  const auto result = ingest(dir.path());
  EXPECT_EQ(result.corpus.table.size(), 1u);
  ASSERT_EQ(result.skipped.size(), 1u);
  EXPECT_EQ(result.skipped[0].path.filename(), "broken.jpg");
}

TEST(Ingest, EmptyOrMissingDirectory) {
  TempDir dir;
  EXPECT_THROW(ingest(dir.path()), ArgumentError);
  EXPECT_THROW(ingest(dir / "nope"), IoError);
}

TEST(Corpus, SaveLoadRoundTrip) {
  TempDir dir;
  std::map<std::string, image::StandardImage> images;
  for (int i = 0; i < 4; ++i) images.emplace("img" + std::to_string(i), test_support::interiorScene(i * 3));
  const auto corpus = ingestImages(images).corpus;
  saveCorpus(corpus, dir / "features.csv");
  EXPECT_TRUE(std::filesystem::exists(dir / "features.colors.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "features.stats.json"));
  const auto loaded = loadCorpus(dir / "features.csv");
  EXPECT_EQ(loaded.colors, corpus.colors);
  EXPECT_EQ(loaded.stats, corpus.stats);
  EXPECT_EQ(formatTable(loaded.table), formatTable(corpus.table));
  EXPECT_THROW(loaded.colorsOf("missing"), LookupError);
}

TEST(EventLog, LineFormat) {
  const EventRecord r{7, "2024-01-01T00:00:00.000Z", "user-created", {{"userId", "u1"}, {"name", "Ada"}}};
  const auto line = formatEventLine(r);
  EXPECT_EQ(line, "7\t2024-01-01T00:00:00.000Z\tuser-created\t{\"name\":\"Ada\",\"userId\":\"u1\"}");
  EXPECT_EQ(parseEventLine(line, 1), r);
  EXPECT_THROW(parseEventLine("7\tts\tkind", 4), ParseError);
  EXPECT_THROW(parseEventLine("x\tts\tkind\t{}", 4), ParseError);
  EXPECT_THROW(parseEventLine("1\tts\tkind\t{broken", 4), ParseError);
}

TEST(EventLog, SequenceMustIncrease) {
  EXPECT_EQ(parseEventLog("1\tt\tk\t{}\n2\tt\tk\t{}\n").size(), 2u);
  try {
    parseEventLog("1\tt\tk\t{}\n3\tt\tk\t{}\n2\tt\tk\t{}\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EventLog, FileBackedAppendAndReload) {
  TempDir dir;
  int tick = 0;
  auto clock = [&tick] { return "t" + std::to_string(++tick); };
  {
    EventLog log(dir / "events.log", clock);
    EXPECT_EQ(log.append("a", {{"x", 1}}).seq, 1u);
    EXPECT_EQ(log.append("b", {{"x", 2}}).seq, 2u);
  }
  EventLog reopened(dir / "events.log", clock);
  ASSERT_EQ(reopened.size(), 2u);
  EXPECT_EQ(reopened.snapshot()[1].payload.at("x"), 2);
  EXPECT_EQ(reopened.append("c", nlohmann::json::object()).seq, 3u);
  const auto text = readTextFile(dir / "events.log");
  EXPECT_EQ(parseEventLog(text).size(), 3u);
}

TEST(EventLog, ConcurrentAppendsStayOrdered) {
  EventLog log;
  std::vector<std::jthread> writers;
  for (int w = 0; w < 8; ++w) {
    writers.emplace_back([&log, w] {
      for (int i = 0; i < 100; ++i) log.append("k", {{"w", w}, {"i", i}});
    });
  }
  writers.clear();
  const auto records = log.snapshot();
  ASSERT_EQ(records.size(), 800u);
  for (std::size_t i = 0; i < records.size(); ++i) ASSERT_EQ(records[i].seq, i + 1);
}

TEST(TextHelpers, Basics) {
  EXPECT_EQ(splitLines("a\r\nb\n"), (std::vector<std::string_view>{"a", "b"}));
  EXPECT_EQ(splitCsvLine("a,,b"), (std::vector<std::string_view>{"a", "", "b"}));
  EXPECT_THROW(parseDouble("1.5x", 3, "col"), ParseError);
  EXPECT_THROW(parseUnsigned("-2", 3, "col"), ParseError);
  EXPECT_EQ(parseUnsigned("2558", 3, "col"), 2558u);
  EXPECT_THROW(readTextFile("/nonexistent/file"), IoError);
}

}  // namespace
}  // namespace aesthetic::store
