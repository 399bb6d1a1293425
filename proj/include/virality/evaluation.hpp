#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "virality/corpus.hpp"
#include "virality/dataset.hpp"
#include "virality/svm.hpp"
#include "virality/text.hpp"

namespace virality {

struct Fold {
  std::vector<LabeledId> train;
  std::vector<LabeledId> test;
};

struct FoldPlan {
  int k = 10;
  std::uint64_t seed = 0;
  std::vector<Fold> folds;
};

// Stratified split. Each class is shuffled with Rng(seed) (positives first,
// then negatives, same generator) and dealt round-robin: positive i goes to
// fold i % k, negative i to fold (n_pos + i) % k. Train lists keep input
// order. Throws ParameterError unless k >= 2, |ids| >= k and both labels occur.
FoldPlan kfold_split(std::span<const LabeledId> ids, int k, std::uint64_t seed);

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Any 0/0 ratio is taken as 0.
Scores f1_score(std::int64_t tp, std::int64_t fp, std::int64_t fn);

enum class F1Average { positive_class, macro };

struct FoldResult {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  Scores positive;  // positive class
  Scores negative;  // negative class, for macro averaging
  double macro_f1 = 0.0;
  std::size_t train_size = 0;
  std::size_t vocabulary_size = 0;
  double c = 0.0;
  double objective = 0.0;
  int epochs = 0;
};

struct EvalReport {
  MetricKind metric = MetricKind::appreciation;
  int k = 10;
  std::uint64_t split_seed = 0;
  std::uint64_t sample_seed = 0;
  HyperParams hyperparams;
  FeatureOptions features;
  F1Average average = F1Average::positive_class;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::vector<FoldResult> folds;

  double mean_f1 = 0.0;  // headline: mean over folds of the selected F1
  double sd_f1 = 0.0;    // sample standard deviation over folds
  double mean_positive_f1 = 0.0;
  double mean_macro_f1 = 0.0;
  double pooled_f1 = 0.0;  // positive-class F1 of the summed confusion
};

// What a fold saw; handed to CvOptions::observer in fold order.
struct FoldView {
  std::size_t index = 0;
  const Fold& fold;
  const Vocabulary& vocabulary;
};

struct CvOptions {
  int k = 10;
  std::uint64_t seed = 0;
  FeatureOptions features;
  unsigned jobs = 1;
  F1Average average = F1Average::positive_class;
  std::function<void(const FoldView&)> observer;
};

// Per fold: vocabulary from the training stories only, presence vectors,
// SVM trained with seed derive_seed(hp.seed, fold), test fold scored.
// Deterministic for fixed seeds, independent of `jobs`.
EvalReport cross_validate(const LabeledDataset& dataset, const Corpus& corpus,
                          const HyperParams& hp, const CvOptions& options);

// Round half up at `decimals` places (0.805 -> "0.81").
std::string format_half_up(double value, int decimals);

// Two-column "metric / F1" table, rows in App, Buzz, Cont, Rais order
// (then any others), F1 to two decimals.
std::string report_table(std::span<const EvalReport> reports);

nlohmann::ordered_json to_json(const EvalReport& report);
nlohmann::ordered_json to_json(const HyperParams& hp);
nlohmann::ordered_json to_json(const FeatureOptions& options);

}  // namespace virality
