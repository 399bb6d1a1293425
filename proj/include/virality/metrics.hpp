#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "virality/corpus.hpp"
#include "virality/rational.hpp"

namespace virality {

// Per-story aggregates over its comments.
struct CommentStats {
  std::int64_t nc_total = 0;  // all comments
  std::int64_t nc_low = 0;    // comments with a parent
  std::int64_t nuc = 0;       // distinct commenting users
  std::int64_t max_up = 0;    // largest diggs_up over the comments
  std::int64_t max_down = 0;  // largest diggs_down over the comments
  std::int64_t n_pos = 0;
  std::int64_t n_neu = 0;
  std::int64_t n_neg = 0;

  bool operator==(const CommentStats&) const = default;
};

enum class Polarity { white, black, neither };

std::string_view to_string(Polarity polarity) noexcept;

struct StoryMetrics {
  std::string story_id;
  std::int64_t appreciation = 0;    // digg count
  std::int64_t buzz_spreading = 0;  // distinct commenters
  Rational raising_discussion;
  std::optional<Rational> controversiality;  // empty when no comment votes
  Polarity polarity = Polarity::neither;
  CommentStats stats;

  bool operator==(const StoryMetrics&) const = default;
};

using MetricsMap = std::map<std::string, StoryMetrics, std::less<>>;

// Throws LookupError for an unknown story id.
CommentStats comment_stats(std::string_view story_id, const Corpus& corpus);

// (nc_low / nc_total) * nuc, defined as 0 when there are no comments.
// Throws ParameterError unless 0 <= nc_low <= nc_total and nuc >= 0.
Rational raising_discussion_score(std::int64_t nc_low, std::int64_t nc_total,
                                  std::int64_t nuc);

// min / max of the two vote maxima; empty when both are zero.
std::optional<Rational> controversiality_score(std::int64_t max_up,
                                               std::int64_t max_down);

// White when positives outnumber neutral + negative, black when negatives
// outnumber neutral + positive.
Polarity buzz_polarity(std::int64_t n_pos, std::int64_t n_neu,
                       std::int64_t n_neg);

StoryMetrics story_metrics(const Story& story, const Corpus& corpus);

MetricsMap compute_all_metrics(const Corpus& corpus, unsigned jobs = 1);

// metrics.csv: one row per story in story-id order. RD and C carry six
// decimals; C is blank when undefined.
void write_metrics_csv(const MetricsMap& metrics, std::ostream& out);

}  // namespace virality
