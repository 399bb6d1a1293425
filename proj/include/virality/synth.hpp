#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "virality/corpus.hpp"
#include "virality/metric_kind.hpp"

namespace virality {

// Shape of the generated comment threads. Each story independently draws a
// role per metric; roles are realized so that the computed metrics land
// clearly inside (or clearly outside) the default class boundaries.
struct CommentModel {
  // Volume tiers: silent (no comments), small (1-25 users), medium (60-95
  // users), large (100-180 users). Large takes the remaining probability.
  double p_silent = 0.35;
  double p_small = 0.35;
  double p_medium = 0.15;

  double p_appreciated = 0.15;    // 100-800 diggs
  double p_unappreciated = 0.50;  // 0 or 1 digg

  double p_discussion = 0.5;  // medium/large: reply share pushes RD above 50
  double p_flat = 0.35;       // commented: no replies at all (RD = 0)

  double p_controversial = 0.25;  // vote maxima within 10% of each other
  double p_agreement = 0.45;      // smaller maximum at most 10% of the larger

  double p_white = 0.2;  // large only: positive comments in the majority
  double p_black = 0.35;
  double p_unknown_emotion = 0.05;

  std::int64_t user_pool = 20000;
};

struct SynthConfig {
  std::int64_t n_stories = 1000;
  std::map<MetricKind, std::vector<std::string>> lexicons;  // planted words
  double signal_strength = 0.9;
  // Chance that any background word position holds a random lexicon word.
  double background_lexicon_rate = 0.01;
  CommentModel comments;
  std::uint64_t seed = 42;

  SynthConfig();
  // Throws ParameterError naming the offending field.
  void validate() const;
};

std::map<MetricKind, std::vector<std::string>> default_lexicons();
const std::vector<std::string>& background_words();

struct TruthRecord {
  std::string story_id;
  std::vector<MetricKind> planted;  // metrics the story is positive for
  std::vector<MetricKind> signal;   // planted metrics whose lexicon was injected
};

struct SyntheticCorpus {
  Corpus corpus;
  std::vector<TruthRecord> truth;
};

// Deterministic for a fixed config (including seed) on every platform.
SyntheticCorpus generate_synthetic(const SynthConfig& config);

// truth.jsonl: {"story_id": ..., "planted": [...], "signal": [...]}
void write_truth(const std::vector<TruthRecord>& truth, std::ostream& out);

}  // namespace virality
