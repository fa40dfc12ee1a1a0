#include "scenic/ratings.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "scenic/error.hpp"

namespace scenic {

RatingHistogram histogram_from_ratings(const std::vector<int>& ratings) {
  RatingHistogram h;
  for (int r : ratings) {
    require(r >= 1 && r <= kNumRatings, ErrorKind::InvalidInput,
            "rating out of range 1..10: " + std::to_string(r));
    h.counts[r - 1]++;
  }
  return h;
}

static void require_nonempty(const RatingHistogram& hist) {
  require(hist.total() >= 1, ErrorKind::InvalidInput, "empty rating histogram");
  for (auto c : hist.counts)
    require(c >= 0, ErrorKind::InvalidInput, "negative rating count");
}

ScoreDistribution normalize(const RatingHistogram& hist) {
  require_nonempty(hist);
  const double total = static_cast<double>(hist.total());
  ScoreDistribution d;
  for (int i = 0; i < kNumRatings; ++i)
    d.probs[i] = static_cast<double>(hist.counts[i]) / total;
  return d;
}

double mean_rating(const RatingHistogram& hist) {
  require_nonempty(hist);
  double sum = 0.0;
  for (int i = 0; i < kNumRatings; ++i)
    sum += static_cast<double>(i + 1) * static_cast<double>(hist.counts[i]);
  return sum / static_cast<double>(hist.total());
}

int round_rating(double mean) {
  int r = static_cast<int>(std::floor(mean + 0.5));
  return std::min(std::max(r, 1), kNumRatings);
}

int rounded_mean(const RatingHistogram& hist) {
  return round_rating(mean_rating(hist));
}

double entropy(const RatingHistogram& hist) {
  ScoreDistribution d = normalize(hist);
  double h = 0.0;
  for (double p : d.probs)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

PartitionLabel partition_label(double mean) {
  require(mean >= 1.0 && mean <= 10.0, ErrorKind::InvalidInput,
          "mean rating out of range [1,10]");
  if (mean > 7.0) return PartitionLabel::Scenic;
  if (mean < 3.0) return PartitionLabel::NonScenic;
  return PartitionLabel::Neutral;
}

}  // namespace scenic
