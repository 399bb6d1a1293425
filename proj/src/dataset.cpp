#include "virality/dataset.hpp"

#include <algorithm>
#include <ostream>

#include "csv.hpp"
#include "virality/error.hpp"
#include "virality/random.hpp"

namespace virality {

void Thresholds::validate() const {
  if (unappreciated_max < 0)
    throw ParameterError("unappreciated_max", "must be >= 0");
  if (appreciation_min <= unappreciated_max)
    throw ParameterError("threshold-appreciation",
                         "must exceed the unappreciated maximum");
  if (buzz_min <= 0) throw ParameterError("threshold-buzz", "must be positive");
  if (discussion_min <= Rational(0))
    throw ParameterError("threshold-raising_discussion", "must be positive");
  if (controversy_min <= Rational(0) || controversy_min > Rational(1))
    throw ParameterError("threshold-controversiality", "must lie in (0, 1]");
  if (agreement_max < Rational(0) || agreement_max >= controversy_min)
    throw ParameterError("agreement_max",
                         "must lie in [0, controversiality threshold)");
  if (white_min_nuc <= 0)
    throw ParameterError("threshold-white_buzz", "must be positive");
  if (black_min_nuc <= 0)
    throw ParameterError("threshold-black_buzz", "must be positive");
}

std::map<MetricKind, LabelRule> default_rules(const Thresholds& t) {
  t.validate();
  std::map<MetricKind, LabelRule> rules;
  auto add = [&](MetricKind kind, auto positive, auto negative) {
    rules.emplace(kind, LabelRule{kind, positive, negative});
  };
  auto only = [](bool eligible) {
    return eligible ? NegativeTier::preferred : NegativeTier::none;
  };

  add(MetricKind::appreciation,
      [t](const StoryMetrics& m) { return m.appreciation >= t.appreciation_min; },
      [t, only](const StoryMetrics& m) {
        return only(m.appreciation >= 0 && m.appreciation <= t.unappreciated_max);
      });

  add(MetricKind::buzz,
      [t](const StoryMetrics& m) { return m.buzz_spreading >= t.buzz_min; },
      [only](const StoryMetrics& m) { return only(m.stats.nc_total == 0); });

  add(MetricKind::raising_discussion,
      [t](const StoryMetrics& m) { return m.raising_discussion > t.discussion_min; },
      [](const StoryMetrics& m) {
        if (m.raising_discussion != Rational(0)) return NegativeTier::none;
        return m.stats.nc_total >= 1 ? NegativeTier::preferred
                                     : NegativeTier::fallback;
      });

  add(MetricKind::controversiality,
      [t](const StoryMetrics& m) {
        return m.controversiality && *m.controversiality >= t.controversy_min;
      },
      [t](const StoryMetrics& m) {
        if (!m.controversiality) return NegativeTier::fallback;
        return *m.controversiality <= t.agreement_max ? NegativeTier::preferred
                                                      : NegativeTier::none;
      });

  add(MetricKind::white_buzz,
      [t](const StoryMetrics& m) {
        return m.polarity == Polarity::white && m.stats.nuc >= t.white_min_nuc;
      },
      [t, only](const StoryMetrics& m) {
        return only(m.polarity != Polarity::white &&
                    m.stats.nuc >= t.white_min_nuc);
      });

  add(MetricKind::black_buzz,
      [t](const StoryMetrics& m) {
        return m.polarity == Polarity::black && m.stats.nuc >= t.black_min_nuc;
      },
      [t, only](const StoryMetrics& m) {
        return only(m.polarity != Polarity::black &&
                    m.stats.nuc >= t.black_min_nuc);
      });
  return rules;
}

Labeling label_metric(const MetricsMap& metrics, const LabelRule& rule) {
  Labeling out;
  for (const auto& [id, m] : metrics) {
    if (rule.positive(m)) {
      out.positives.insert(id);
      continue;
    }
    switch (rule.negative(m)) {
      case NegativeTier::preferred: out.negatives.preferred.insert(id); break;
      case NegativeTier::fallback: out.negatives.fallback.insert(id); break;
      case NegativeTier::none: break;
    }
  }
  return out;
}

namespace {

void take_shuffled(const IdSet& tier, std::size_t k, Rng& rng, IdSet& out) {
  std::vector<std::string> ids(tier.begin(), tier.end());
  rng.shuffle(ids);
  for (std::size_t i = 0; i < k; ++i) out.insert(std::move(ids[i]));
}

}  // namespace

LabeledDataset build_balanced(MetricKind metric, const IdSet& positives,
                              const NegativePool& pool, std::uint64_t seed) {
  const std::size_t k = positives.size();
  if (pool.size() < k) throw CapacityError(k, pool.size());

  LabeledDataset out;
  out.metric = metric;
  out.positives = positives;
  out.seed = seed;
  Rng rng(seed);
  const std::size_t from_preferred = std::min(k, pool.preferred.size());
  take_shuffled(pool.preferred, from_preferred, rng, out.negatives);
  if (from_preferred < k)
    take_shuffled(pool.fallback, k - from_preferred, rng, out.negatives);
  return out;
}

LabeledDataset build_balanced(MetricKind metric, const IdSet& positives,
                              const IdSet& pool, std::uint64_t seed) {
  return build_balanced(metric, positives, NegativePool{pool, {}}, seed);
}

std::vector<LabeledId> labeled_ids(const LabeledDataset& dataset) {
  std::vector<LabeledId> out;
  out.reserve(dataset.positives.size() + dataset.negatives.size());
  for (const auto& id : dataset.positives) out.push_back({id, 1});
  for (const auto& id : dataset.negatives) out.push_back({id, -1});
  return out;
}

std::optional<Rational> OverlapMatrix::cell(std::size_t row,
                                            std::size_t col) const {
  if (row == col || positives[row] == 0) return std::nullopt;
  return Rational(100 * static_cast<std::int64_t>(intersections[row][col]),
                  static_cast<std::int64_t>(positives[row]));
}

std::string OverlapMatrix::render(std::size_t row, std::size_t col) const {
  const auto value = cell(row, col);
  return value ? value->to_decimal(1) : std::string();
}

OverlapMatrix overlap_matrix(
    const std::map<MetricKind, LabeledDataset>& datasets) {
  OverlapMatrix m;
  std::array<const IdSet*, 4> sets{};
  for (std::size_t i = 0; i < m.kinds.size(); ++i) {
    const auto it = datasets.find(m.kinds[i]);
    if (it == datasets.end())
      throw ParameterError(std::string(to_string(m.kinds[i])),
                           "dataset required for the overlap matrix");
    sets[i] = &it->second.positives;
    m.positives[i] = sets[i]->size();
  }
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      std::size_t shared = 0;
      for (const auto& id : *sets[r]) shared += sets[c]->count(id);
      m.intersections[r][c] = shared;
    }
  }
  return m;
}

std::string_view short_name(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::appreciation: return "App";
    case MetricKind::buzz: return "Buzz";
    case MetricKind::controversiality: return "Cont";
    case MetricKind::raising_discussion: return "Rais";
    case MetricKind::white_buzz: return "WB";
    case MetricKind::black_buzz: return "BB";
  }
  return "?";
}

void write_dataset_csv(const LabeledDataset& dataset, std::ostream& out) {
  out << "story_id,label\n";
  for (const auto& item : labeled_ids(dataset))
    out << detail::csv_field(item.id) << ',' << item.label << '\n';
}

void write_overlap_csv(const OverlapMatrix& matrix, std::ostream& out) {
  out << "class";
  for (const MetricKind kind : matrix.kinds) out << ',' << short_name(kind);
  out << '\n';
  for (std::size_t r = 0; r < 4; ++r) {
    out << short_name(matrix.kinds[r]);
    for (std::size_t c = 0; c < 4; ++c) out << ',' << matrix.render(r, c);
    out << '\n';
  }
}

}  // namespace virality
