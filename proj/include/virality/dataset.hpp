#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "virality/metric_kind.hpp"
#include "virality/metrics.hpp"
#include "virality/rational.hpp"

namespace virality {

using IdSet = std::set<std::string, std::less<>>;

// Class boundaries for labeling. Defaults follow the published dataset
// constructions; the negative margins for discussion and controversiality
// are our own clear-margin choice.
struct Thresholds {
  std::int64_t appreciation_min = 100;  // positive: A >= this
  std::int64_t unappreciated_max = 1;   // negative: A <= this
  std::int64_t buzz_min = 100;          // positive: BS >= this
  Rational discussion_min{50};          // positive: RD > this
  Rational controversy_min{9, 10};      // positive: C >= this
  Rational agreement_max{1, 10};        // preferred negative: C <= this
  std::int64_t white_min_nuc = 100;     // white buzz universe: NUC >= this
  std::int64_t black_min_nuc = 100;     // black buzz universe: NUC >= this

  // Throws ParameterError naming the first inconsistent field.
  void validate() const;
};

// Negative eligibility comes in tiers: the sampler drains `preferred`
// before touching `fallback`.
enum class NegativeTier { none, preferred, fallback };

struct LabelRule {
  MetricKind metric;
  std::function<bool(const StoryMetrics&)> positive;
  std::function<NegativeTier(const StoryMetrics&)> negative;
};

std::map<MetricKind, LabelRule> default_rules(const Thresholds& t = {});

struct NegativePool {
  IdSet preferred;
  IdSet fallback;
  std::size_t size() const noexcept { return preferred.size() + fallback.size(); }
};

struct Labeling {
  IdSet positives;
  NegativePool negatives;
};

Labeling label_metric(const MetricsMap& metrics, const LabelRule& rule);

struct LabeledDataset {
  MetricKind metric = MetricKind::appreciation;
  IdSet positives;
  IdSet negatives;
  std::uint64_t seed = 0;
};

// Draws |positives| negatives without replacement. Each tier is sorted, then
// shuffled with Rng(seed) (descending Fisher-Yates) and its first k ids are
// taken; `preferred` is exhausted before `fallback` is sampled with the same
// generator. Throws CapacityError when the pool is too small.
LabeledDataset build_balanced(MetricKind metric, const IdSet& positives,
                              const NegativePool& pool, std::uint64_t seed);
LabeledDataset build_balanced(MetricKind metric, const IdSet& positives,
                              const IdSet& pool, std::uint64_t seed);

struct LabeledId {
  std::string id;
  int label = 0;  // +1 or -1
};

// Positives (sorted) followed by negatives (sorted).
std::vector<LabeledId> labeled_ids(const LabeledDataset& dataset);

// Percentage of each class's positives that are also positives of another
// class, over the four table metrics (App, Buzz, Cont, Rais).
struct OverlapMatrix {
  std::array<MetricKind, 4> kinds = kTableMetrics;
  std::array<std::size_t, 4> positives{};
  std::array<std::array<std::size_t, 4>, 4> intersections{};

  // 100 * |pos(row) & pos(col)| / |pos(row)|, exact. Empty on the diagonal
  // and for a row class without positives.
  std::optional<Rational> cell(std::size_t row, std::size_t col) const;
  // One decimal, or "" where the cell is undefined.
  std::string render(std::size_t row, std::size_t col) const;
};

// Throws ParameterError if one of the four table metrics is missing.
OverlapMatrix overlap_matrix(const std::map<MetricKind, LabeledDataset>& datasets);

// dataset_<metric>.csv: "story_id,label" with label 1 or -1.
void write_dataset_csv(const LabeledDataset& dataset, std::ostream& out);
void write_overlap_csv(const OverlapMatrix& matrix, std::ostream& out);

std::string_view short_name(MetricKind kind) noexcept;

}  // namespace virality
