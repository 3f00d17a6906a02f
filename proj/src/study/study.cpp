#include "aesthetic/study/study.hpp"

#include <algorithm>

#include "aesthetic/errors.hpp"

namespace aesthetic::study {

ImagePair makePair(std::string a, std::string b) {
  if (a == b) throw ArgumentError("a pair needs two different images");
  if (store::imageIdLess(b, a)) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::size_t trialCount(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<std::pair<std::size_t, std::size_t>> generatePairs(std::size_t n) {
  if (n < 2) throw ArgumentError("a 2AFC study needs at least two stimuli");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(trialCount(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

double hitRate(std::span<const Trial> trials) {
  if (trials.empty()) throw ArgumentError("hit rate is undefined without trials");
  const auto hits = std::count_if(trials.begin(), trials.end(), [](const Trial& t) { return t.hit; });
  return static_cast<double>(hits) / static_cast<double>(trials.size());
}

Prediction predictChoice(const ImagePair& pair, const preference::ColorRatingProfile& profile,
                         const store::Corpus& corpus, const preference::PreferenceModel& model) {
  auto total = [&](const std::string& id) {
    const auto& row = corpus.table.at(id);
    return model.evaluate(id, row.aestheticScore, corpus.colorsOf(id), profile).totalPreference;
  };

  Prediction p;
  p.firstTotal = total(pair.first);
  p.secondTotal = total(pair.second);
  p.tie = p.firstTotal == p.secondTotal;
  p.winner = p.secondTotal > p.firstTotal ? pair.second : pair.first;
  return p;
}

}  // namespace aesthetic::study
