#pragma once

#include <array>
#include <cstdint>

namespace scenic {

inline constexpr int kNumRatings = 10;  // integer scenicness levels 1..10

// Per-image counts of integer ratings. counts[i] holds the number of
// (i+1)-star ratings.
struct RatingHistogram {
  std::array<std::int64_t, kNumRatings> counts{};

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

// Probability vector over the 10 rating levels.
struct ScoreDistribution {
  std::array<double, kNumRatings> probs{};
};

enum class PartitionLabel { Scenic, NonScenic, Neutral };

// Build a histogram from a list of raw 1..10 ratings.
RatingHistogram histogram_from_ratings(const std::vector<int>& ratings);

ScoreDistribution normalize(const RatingHistogram& hist);
double mean_rating(const RatingHistogram& hist);
int rounded_mean(const RatingHistogram& hist);  // half-up, clamped to 1..10
double entropy(const RatingHistogram& hist);    // nats
PartitionLabel partition_label(double mean);

// Half-up rounding of a mean rating, clamped to 1..10.
int round_rating(double mean);

}  // namespace scenic
