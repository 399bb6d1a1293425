#include "virality/metrics.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "virality/error.hpp"
#include "virality/parallel.hpp"
#include "csv.hpp"

namespace virality {

std::string_view to_string(Polarity polarity) noexcept {
  switch (polarity) {
    case Polarity::white: return "white";
    case Polarity::black: return "black";
    case Polarity::neither: return "neither";
  }
  return "neither";
}

namespace {

CommentStats stats_over(std::span<const std::size_t> positions,
                        const Corpus& corpus) {
  CommentStats stats;
  std::unordered_set<std::string_view> users;
  for (const std::size_t i : positions) {
    const Comment& c = corpus.comments()[i];
    ++stats.nc_total;
    if (c.parent_id) ++stats.nc_low;
    users.insert(c.user_id);
    stats.max_up = std::max(stats.max_up, c.diggs_up);
    stats.max_down = std::max(stats.max_down, c.diggs_down);
    switch (c.emotion) {
      case Emotion::positive: ++stats.n_pos; break;
      case Emotion::neutral: ++stats.n_neu; break;
      case Emotion::negative: ++stats.n_neg; break;
      case Emotion::unknown: break;
    }
  }
  stats.nuc = static_cast<std::int64_t>(users.size());
  return stats;
}

}  // namespace

CommentStats comment_stats(std::string_view story_id, const Corpus& corpus) {
  if (corpus.find_story(story_id) == nullptr)
    throw LookupError("unknown story id '" + std::string(story_id) + "'");
  return stats_over(corpus.comments_of(story_id), corpus);
}

Rational raising_discussion_score(std::int64_t nc_low, std::int64_t nc_total,
                                  std::int64_t nuc) {
  if (nc_low < 0 || nc_low > nc_total)
    throw ParameterError("nc_low", "must satisfy 0 <= nc_low <= nc_total");
  if (nuc < 0) throw ParameterError("nuc", "must be >= 0");
  if (nc_total == 0) return Rational(0);
  return Rational(nc_low * nuc, nc_total);
}

std::optional<Rational> controversiality_score(std::int64_t max_up,
                                               std::int64_t max_down) {
  if (max_up < 0) throw ParameterError("max_up", "must be >= 0");
  if (max_down < 0) throw ParameterError("max_down", "must be >= 0");
  const auto [lo, hi] = std::minmax(max_up, max_down);
  if (hi == 0) return std::nullopt;
  return Rational(lo, hi);
}

Polarity buzz_polarity(std::int64_t n_pos, std::int64_t n_neu,
                       std::int64_t n_neg) {
  if (n_pos > n_neu + n_neg) return Polarity::white;
  if (n_neg > n_neu + n_pos) return Polarity::black;
  return Polarity::neither;
}

StoryMetrics story_metrics(const Story& story, const Corpus& corpus) {
  StoryMetrics m;
  m.story_id = story.id;
  m.stats = stats_over(corpus.comments_of(story.id), corpus);
  m.appreciation = story.digg_count;
  m.buzz_spreading = m.stats.nuc;
  m.raising_discussion =
      raising_discussion_score(m.stats.nc_low, m.stats.nc_total, m.stats.nuc);
  m.controversiality = controversiality_score(m.stats.max_up, m.stats.max_down);
  m.polarity = buzz_polarity(m.stats.n_pos, m.stats.n_neu, m.stats.n_neg);
  return m;
}

MetricsMap compute_all_metrics(const Corpus& corpus, unsigned jobs) {
  const auto& stories = corpus.stories();
  std::vector<StoryMetrics> rows(stories.size());
  parallel_for(stories.size(), jobs, [&](std::size_t i) {
    rows[i] = story_metrics(stories[i], corpus);
  });
  MetricsMap out;
  for (auto& row : rows) {
    std::string key = row.story_id;
    out.emplace(std::move(key), std::move(row));
  }
  return out;
}

void write_metrics_csv(const MetricsMap& metrics, std::ostream& out) {
  out << "story_id,A,BS,RD,C,polarity,NC_T,NC_L,NUC,max_up,max_down,n_pos,"
         "n_neu,n_neg\n";
  for (const auto& [id, m] : metrics) {
    const auto& s = m.stats;
    out << detail::csv_field(id) << ',' << m.appreciation << ',' << m.buzz_spreading << ','
        << m.raising_discussion.to_decimal(6) << ','
        << (m.controversiality ? m.controversiality->to_decimal(6) : "") << ','
        << to_string(m.polarity) << ',' << s.nc_total << ',' << s.nc_low << ','
        << s.nuc << ',' << s.max_up << ',' << s.max_down << ',' << s.n_pos
        << ',' << s.n_neu << ',' << s.n_neg << '\n';
  }
}

}  // namespace virality
