#include "virality/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "virality/error.hpp"
#include "virality/parallel.hpp"
#include "virality/random.hpp"

namespace virality {

FoldPlan kfold_split(std::span<const LabeledId> ids, int k, std::uint64_t seed) {
  if (k < 2) throw ParameterError("k", "must be at least 2");
  if (ids.size() < static_cast<std::size_t>(k))
    throw ParameterError("k", "dataset of " + std::to_string(ids.size()) +
                                  " examples is smaller than k=" +
                                  std::to_string(k));
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].label == 1)
      pos.push_back(i);
    else if (ids[i].label == -1)
      neg.push_back(i);
    else
      throw ParameterError("label", "labels must be +1 or -1");
  }
  if (pos.empty() || neg.empty())
    throw ParameterError("ids", "both classes must be present");

  Rng rng(seed);
  rng.shuffle(pos);
  rng.shuffle(neg);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<std::size_t> fold_of(ids.size());
  for (std::size_t i = 0; i < pos.size(); ++i) fold_of[pos[i]] = i % uk;
  for (std::size_t i = 0; i < neg.size(); ++i)
    fold_of[neg[i]] = (pos.size() + i) % uk;

  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.folds.resize(uk);
  // Test folds list positives then negatives in dealing order.
  for (const auto& group : {std::cref(pos), std::cref(neg)})
    for (const std::size_t i : group.get())
      plan.folds[fold_of[i]].test.push_back(ids[i]);
  for (std::size_t f = 0; f < uk; ++f) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (fold_of[i] != f) plan.folds[f].train.push_back(ids[i]);
  }
  return plan;
}

Scores f1_score(std::int64_t tp, std::int64_t fp, std::int64_t fn) {
  auto ratio = [](double num, double den) { return den == 0.0 ? 0.0 : num / den; };
  Scores s;
  s.precision = ratio(static_cast<double>(tp), static_cast<double>(tp + fp));
  s.recall = ratio(static_cast<double>(tp), static_cast<double>(tp + fn));
  s.f1 = ratio(2.0 * s.precision * s.recall, s.precision + s.recall);
  return s;
}

namespace {

struct FoldOutput {
  FoldResult result;
  Vocabulary vocabulary;
};

FoldOutput run_fold(const Fold& fold, std::size_t index,
                    const std::unordered_map<std::string, std::vector<std::string>>& terms,
                    const HyperParams& hp, Weighting weighting, bool keep_vocabulary) {
  std::vector<const std::vector<std::string>*> train_terms;
  train_terms.reserve(fold.train.size());
  for (const auto& item : fold.train) train_terms.push_back(&terms.at(item.id));

  std::vector<std::string> all;
  for (const auto* list : train_terms) all.insert(all.end(), list->begin(), list->end());
  Vocabulary vocab = Vocabulary::from_terms(std::move(all));

  std::vector<LabeledVector> train_set;
  train_set.reserve(fold.train.size());
  for (std::size_t i = 0; i < fold.train.size(); ++i)
    train_set.push_back({vectorize_terms(*train_terms[i], vocab, weighting),
                         fold.train[i].label});

  HyperParams fold_hp = hp;
  fold_hp.seed = derive_seed(hp.seed, index);
  const SvmModel model = train(train_set, vocab.size(), fold_hp);

  FoldOutput out;
  FoldResult& r = out.result;
  for (const auto& item : fold.test) {
    const int predicted =
        predict(model, vectorize_terms(terms.at(item.id), vocab, weighting)).label;
    if (predicted == 1 && item.label == 1) ++r.tp;
    if (predicted == 1 && item.label == -1) ++r.fp;
    if (predicted == -1 && item.label == 1) ++r.fn;
    if (predicted == -1 && item.label == -1) ++r.tn;
  }
  r.positive = f1_score(r.tp, r.fp, r.fn);
  r.negative = f1_score(r.tn, r.fn, r.fp);
  r.macro_f1 = 0.5 * (r.positive.f1 + r.negative.f1);
  r.train_size = fold.train.size();
  r.vocabulary_size = vocab.size();
  r.c = model.c;
  r.objective = model.objective;
  r.epochs = model.epochs;
  if (keep_vocabulary) out.vocabulary = std::move(vocab);
  return out;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = mean_of(xs);
  double acc = 0.0;
  for (const double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

EvalReport cross_validate(const LabeledDataset& dataset, const Corpus& corpus,
                          const HyperParams& hp, const CvOptions& options) {
  hp.validate();
  if (dataset.positives.empty() ||
      dataset.positives.size() != dataset.negatives.size())
    throw ParameterError("dataset", "must be balanced and nonempty");

  const std::vector<LabeledId> ids = labeled_ids(dataset);
  const FoldPlan plan = kfold_split(ids, options.k, options.seed);

  std::unordered_map<std::string, std::vector<std::string>> terms;
  std::vector<const Story*> stories(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    stories[i] = corpus.find_story(ids[i].id);
    if (stories[i] == nullptr)
      throw LookupError("dataset references unknown story '" + ids[i].id + "'");
  }
  std::vector<std::vector<std::string>> bags(ids.size());
  parallel_for(ids.size(), options.jobs, [&](std::size_t i) {
    bags[i] = story_terms(*stories[i], options.features);
  });
  for (std::size_t i = 0; i < ids.size(); ++i)
    terms.emplace(ids[i].id, std::move(bags[i]));

  const bool keep = static_cast<bool>(options.observer);
  std::vector<FoldOutput> outputs(plan.folds.size());
  parallel_for(plan.folds.size(), options.jobs, [&](std::size_t f) {
    outputs[f] = run_fold(plan.folds[f], f, terms, hp, options.features.weighting, keep);
  });

  EvalReport report;
  report.metric = dataset.metric;
  report.k = options.k;
  report.split_seed = options.seed;
  report.sample_seed = dataset.seed;
  report.hyperparams = hp;
  report.features = options.features;
  report.average = options.average;
  report.positives = dataset.positives.size();
  report.negatives = dataset.negatives.size();

  std::vector<double> positive_f1, macro_f1;
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (std::size_t f = 0; f < outputs.size(); ++f) {
    if (options.observer)
      options.observer(FoldView{f, plan.folds[f], outputs[f].vocabulary});
    const FoldResult& r = outputs[f].result;
    report.folds.push_back(r);
    positive_f1.push_back(r.positive.f1);
    macro_f1.push_back(r.macro_f1);
    tp += r.tp;
    fp += r.fp;
    fn += r.fn;
  }
  report.mean_positive_f1 = mean_of(positive_f1);
  report.mean_macro_f1 = mean_of(macro_f1);
  report.pooled_f1 = f1_score(tp, fp, fn).f1;
  const auto& headline =
      options.average == F1Average::macro ? macro_f1 : positive_f1;
  report.mean_f1 = mean_of(headline);
  report.sd_f1 = sample_sd(headline);
  return report;
}

std::string format_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The nudge keeps decimal ties such as 0.805 from rounding down because
  // their binary representation sits just below the tie.
  const double scaled = std::floor(value * scale + 0.5 + 1e-9);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(decimals);
  out << scaled / scale;
  return out.str();
}

std::string report_table(std::span<const EvalReport> reports) {
  std::vector<const EvalReport*> rows;
  for (const auto& r : reports) rows.push_back(&r);
  auto rank = [](MetricKind kind) {
    for (std::size_t i = 0; i < kTableMetrics.size(); ++i)
      if (kTableMetrics[i] == kind) return i;
    return kTableMetrics.size() + static_cast<std::size_t>(kind);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto* a, const auto* b) {
    return rank(a->metric) < rank(b->metric);
  });

  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-22s%s\n", "", "F1 measure");
  out << line;
  for (const auto* r : rows) {
    std::snprintf(line, sizeof line, "%-22s%s\n",
                  std::string(display_name(r->metric)).c_str(),
                  format_half_up(r->mean_f1, 2).c_str());
    out << line;
  }
  return out.str();
}

nlohmann::ordered_json to_json(const HyperParams& hp) {
  nlohmann::ordered_json j;
  j["c_mode"] = hp.c_mode == CMode::fixed ? "fixed" : "auto";
  j["c_value"] = hp.c_value;
  j["epochs"] = hp.epochs;
  j["tolerance"] = hp.tolerance;
  j["seed"] = hp.seed;
  j["solver"] = hp.solver == Solver::stochastic ? "stochastic" : "full_batch";
  return j;
}

nlohmann::ordered_json to_json(const FeatureOptions& options) {
  nlohmann::ordered_json j;
  j["weighting"] = options.weighting == Weighting::presence ? "presence" : "count";
  j["field_prefix"] = options.field_prefix;
  j["content_words_only"] = options.content_words_only;
  return j;
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["metric"] = std::string(to_string(report.metric));
  j["k"] = report.k;
  j["split_seed"] = report.split_seed;
  j["sample_seed"] = report.sample_seed;
  j["positives"] = report.positives;
  j["negatives"] = report.negatives;
  j["average"] = report.average == F1Average::macro ? "macro" : "positive_class";
  j["mean_f1"] = report.mean_f1;
  j["sd_f1"] = report.sd_f1;
  j["mean_positive_f1"] = report.mean_positive_f1;
  j["mean_macro_f1"] = report.mean_macro_f1;
  j["pooled_f1"] = report.pooled_f1;
  j["hyperparams"] = to_json(report.hyperparams);
  j["features"] = to_json(report.features);
  auto folds = nlohmann::ordered_json::array();
  for (const auto& f : report.folds) {
    nlohmann::ordered_json fj;
    fj["tp"] = f.tp;
    fj["fp"] = f.fp;
    fj["fn"] = f.fn;
    fj["tn"] = f.tn;
    fj["precision"] = f.positive.precision;
    fj["recall"] = f.positive.recall;
    fj["f1"] = f.positive.f1;
    fj["macro_f1"] = f.macro_f1;
    fj["train_size"] = f.train_size;
    fj["vocabulary_size"] = f.vocabulary_size;
    fj["c"] = f.c;
    fj["objective"] = f.objective;
    fj["epochs"] = f.epochs;
    folds.push_back(std::move(fj));
  }
  j["folds"] = std::move(folds);
  return j;
}

}  // namespace virality
