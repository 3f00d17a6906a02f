#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aesthetic/preference/preference.hpp"
#include "aesthetic/store/corpus.hpp"

namespace aesthetic::study {

/// Unordered image pair stored with first < second in natural id order.
struct ImagePair {
  std::string first;
  std::string second;

  bool contains(const std::string& id) const noexcept { return id == first || id == second; }
  bool operator==(const ImagePair&) const = default;
};

/// Orders the two ids; throws ArgumentError when they are equal.
ImagePair makePair(std::string a, std::string b);

/// n(n-1)/2.
std::size_t trialCount(std::size_t n);

/// All index pairs (i, j), i < j, in lexicographic order. Throws
/// ArgumentError for n < 2.
std::vector<std::pair<std::size_t, std::size_t>> generatePairs(std::size_t n);

/// One two-alternative forced-choice comparison.
struct Trial {
  std::string studyId;
  std::string userId;
  ImagePair pair;
  std::string predictedWinner;
  std::string humanChoice;
  bool hit = false;
  bool tie = false;  // the prediction was an exact tie

  bool operator==(const Trial&) const = default;
};

/// hits / total. Throws ArgumentError for an empty list.
double hitRate(std::span<const Trial> trials);

struct Prediction {
  std::string winner;
  bool tie = false;
  double firstTotal = 0.0;
  double secondTotal = 0.0;
};

/// Image with the higher total preference for this user; an exact tie goes
/// to the lower id and is flagged. Throws LookupError for unknown images or
/// images without a dominant-color summary.
Prediction predictChoice(const ImagePair& pair, const preference::ColorRatingProfile& profile,
                         const store::Corpus& corpus, const preference::PreferenceModel& model);

}  // namespace aesthetic::study
