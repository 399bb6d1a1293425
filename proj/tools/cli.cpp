#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "virality/corpus.hpp"
#include "virality/dataset.hpp"
#include "virality/error.hpp"
#include "virality/evaluation.hpp"
#include "virality/metrics.hpp"
#include "virality/random.hpp"
#include "virality/synth.hpp"

namespace virality::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string stories_path;
  std::string comments_path;
  std::string out_dir = ".";
  std::vector<std::string> metrics;
  std::uint64_t seed = 42;
  int k = 10;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  std::string c_mode = "auto";
  double c = 1.0;
  int epochs = 100;
  double tolerance = 1e-3;
  std::string solver = "stochastic";

  std::string weighting = "presence";
  bool field_prefix = false;
  bool content_only = false;
  std::string f1_average = "positive";

  std::string threshold_appreciation = "100";
  std::string threshold_buzz = "100";
  std::string threshold_discussion = "50";
  std::string threshold_controversiality = "0.9";
  std::string threshold_white = "100";
  std::string threshold_black = "100";
  std::string unappreciated_max = "1";
  std::string agreement_max = "0.1";
};

struct SynthOptions {
  std::int64_t stories = 1000;
  double signal = 0.9;
  double background_rate = 0.01;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
};

std::int64_t parse_count(const std::string& text, const char* field) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError(field, "expected an integer, got '" + text + "'");
  return value;
}

Rational parse_rational(const std::string& text, const char* field) {
  try {
    return Rational::parse(text);
  } catch (const ParameterError&) {
    throw ParameterError(field, "expected a number, got '" + text + "'");
  }
}

Thresholds thresholds_of(const RunConfig& cfg) {
  Thresholds t;
  t.appreciation_min = parse_count(cfg.threshold_appreciation, "threshold-appreciation");
  t.buzz_min = parse_count(cfg.threshold_buzz, "threshold-buzz");
  t.discussion_min = parse_rational(cfg.threshold_discussion, "threshold-raising_discussion");
  t.controversy_min = parse_rational(cfg.threshold_controversiality, "threshold-controversiality");
  t.white_min_nuc = parse_count(cfg.threshold_white, "threshold-white_buzz");
  t.black_min_nuc = parse_count(cfg.threshold_black, "threshold-black_buzz");
  t.unappreciated_max = parse_count(cfg.unappreciated_max, "unappreciated-max");
  t.agreement_max = parse_rational(cfg.agreement_max, "agreement-max");
  t.validate();
  return t;
}

HyperParams hyperparams_of(const RunConfig& cfg) {
  HyperParams hp;
  hp.c_mode = cfg.c_mode == "fixed" ? CMode::fixed : CMode::auto_recip_mean_sq_norm;
  hp.c_value = cfg.c;
  hp.epochs = cfg.epochs;
  hp.tolerance = cfg.tolerance;
  hp.solver = cfg.solver == "full_batch" ? Solver::full_batch : Solver::stochastic;
  hp.seed = derive_seed(cfg.seed, 300);
  hp.validate();
  return hp;
}

FeatureOptions features_of(const RunConfig& cfg) {
  FeatureOptions f;
  f.weighting = cfg.weighting == "count" ? Weighting::count : Weighting::presence;
  f.field_prefix = cfg.field_prefix;
  f.content_words_only = cfg.content_only;
  return f;
}

std::vector<MetricKind> metrics_of(const RunConfig& cfg,
                                   std::span<const MetricKind> fallback) {
  std::vector<MetricKind> out;
  for (const auto& name : cfg.metrics) {
    const auto kind = parse_metric_kind(name);
    if (!kind) throw ParameterError("metric", "unknown metric '" + name + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  if (out.empty()) out.assign(fallback.begin(), fallback.end());
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, MetricKind kind) {
  return derive_seed(seed, 100 + static_cast<std::uint64_t>(kind));
}
std::uint64_t split_seed(std::uint64_t seed, MetricKind kind) {
  return derive_seed(seed, 200 + static_cast<std::uint64_t>(kind));
}

// FNV-1a, 64-bit.
class Fingerprint {
 public:
  void add(std::string_view bytes) {
    for (const char ch : bytes) {
      hash_ ^= static_cast<unsigned char>(ch);
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash_));
    return buffer;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string file_fingerprint(const std::vector<std::string>& paths) {
  Fingerprint fp;
  std::vector<char> buffer(1 << 16);
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    while (in) {
      in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      fp.add(std::string_view(buffer.data(), static_cast<std::size_t>(in.gcount())));
    }
    fp.add(std::string_view("\0", 1));
  }
  return fp.hex();
}

ojson thresholds_json(const Thresholds& t) {
  ojson j;
  j["appreciation_min"] = t.appreciation_min;
  j["unappreciated_max"] = t.unappreciated_max;
  j["buzz_min"] = t.buzz_min;
  j["discussion_min"] = t.discussion_min.to_decimal(6);
  j["controversy_min"] = t.controversy_min.to_decimal(6);
  j["agreement_max"] = t.agreement_max.to_decimal(6);
  j["white_min_nuc"] = t.white_min_nuc;
  j["black_min_nuc"] = t.black_min_nuc;
  return j;
}

// Everything that determines the outputs apart from the input files.
ojson canonical_config(const RunConfig& cfg, std::span<const MetricKind> metrics) {
  ojson j;
  j["seed"] = cfg.seed;
  j["k"] = cfg.k;
  auto names = ojson::array();
  for (const MetricKind m : metrics) names.push_back(std::string(to_string(m)));
  j["metrics"] = names;
  j["thresholds"] = thresholds_json(thresholds_of(cfg));
  j["hyperparams"] = to_json(hyperparams_of(cfg));
  j["features"] = to_json(features_of(cfg));
  j["f1_average"] = cfg.f1_average;
  return j;
}

std::string config_hash(const ojson& config) {
  Fingerprint fp;
  fp.add(config.dump());
  return fp.hex();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Error("cannot create output directory '" + dir + "'");
}

template <class Fn>
void write_file(const fs::path& path, Fn&& fill) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  fill(out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

void write_manifest(const fs::path& dir, const ojson& manifest) {
  write_file(dir / "manifest.json", [&](std::ostream& o) { o << manifest.dump(2) << '\n'; });
}

Corpus load_inputs(const RunConfig& cfg) {
  if (cfg.stories_path.empty()) throw ParameterError("stories", "path required");
  if (cfg.comments_path.empty()) throw ParameterError("comments", "path required");
  return load_corpus(cfg.stories_path, cfg.comments_path);
}

struct Labeled {
  std::map<MetricKind, LabeledDataset> datasets;
  std::vector<std::pair<MetricKind, std::string>> skipped;
};

Labeled build_datasets(const MetricsMap& metrics, const Thresholds& t,
                       std::span<const MetricKind> kinds, std::uint64_t seed,
                       std::ostream& err) {
  Labeled out;
  const auto rules = default_rules(t);
  for (const MetricKind kind : kinds) {
    const Labeling labeling = label_metric(metrics, rules.at(kind));
    try {
      out.datasets.emplace(kind, build_balanced(kind, labeling.positives,
                                                labeling.negatives,
                                                sample_seed(seed, kind)));
    } catch (const CapacityError& e) {
      err << "warning: skipping " << to_string(kind) << ": " << e.what() << '\n';
      out.skipped.emplace_back(kind, e.what());
    }
  }
  return out;
}

int cmd_synth(const SynthOptions& opt, std::ostream& out) {
  SynthConfig cfg;
  cfg.n_stories = opt.stories;
  cfg.signal_strength = opt.signal;
  cfg.background_lexicon_rate = opt.background_rate;
  cfg.seed = opt.seed;
  cfg.validate();
  ensure_dir(opt.out_dir);
  const auto synthetic = generate_synthetic(cfg);
  const fs::path dir(opt.out_dir);
  write_file(dir / "stories.jsonl", [&](std::ostream& o) { write_stories(synthetic.corpus, o); });
  write_file(dir / "comments.jsonl", [&](std::ostream& o) { write_comments(synthetic.corpus, o); });
  write_file(dir / "truth.jsonl", [&](std::ostream& o) { write_truth(synthetic.truth, o); });

  ojson config;
  config["stories"] = opt.stories;
  config["signal"] = opt.signal;
  config["background_rate"] = opt.background_rate;
  config["seed"] = opt.seed;
  ojson manifest;
  manifest["tool"] = "virality";
  manifest["version"] = kVersion;
  manifest["command"] = "synth";
  manifest["seed"] = opt.seed;
  manifest["config_hash"] = config_hash(config);
  manifest["config"] = config;
  manifest["files"] = {"stories.jsonl", "comments.jsonl", "truth.jsonl"};
  write_manifest(dir, manifest);
  out << "wrote " << synthetic.corpus.stories().size() << " stories and "
      << synthetic.corpus.comments().size() << " comments to " << opt.out_dir << '\n';
  return kOk;
}

void print_polarity_summary(const MetricsMap& metrics, const Thresholds& t,
                            std::ostream& out) {
  const auto rules = default_rules(t);
  const auto white = label_metric(metrics, rules.at(MetricKind::white_buzz)).positives.size();
  const auto black = label_metric(metrics, rules.at(MetricKind::black_buzz)).positives.size();
  out << "stories=" << metrics.size() << " white_buzz=" << white
      << " black_buzz=" << black << '\n';
}

ojson base_manifest(const RunConfig& cfg, const char* command,
                    std::span<const MetricKind> kinds);

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
  const Thresholds t = thresholds_of(cfg);
  const Corpus corpus = load_inputs(cfg);
  ensure_dir(cfg.out_dir);
  const MetricsMap metrics = compute_all_metrics(corpus, cfg.jobs);
  const fs::path dir(cfg.out_dir);
  write_file(dir / "metrics.csv", [&](std::ostream& o) { write_metrics_csv(metrics, o); });
  ojson manifest = base_manifest(cfg, "metrics", {});
  manifest["files"] = ojson::object({{"metrics.csv", ojson::object()}});
  write_manifest(dir, manifest);
  print_polarity_summary(metrics, t, out);
  return kOk;
}

ojson base_manifest(const RunConfig& cfg, const char* command,
                    std::span<const MetricKind> kinds) {
  const ojson config = canonical_config(cfg, kinds);
  ojson manifest;
  manifest["tool"] = "virality";
  manifest["version"] = kVersion;
  manifest["command"] = command;
  manifest["seed"] = cfg.seed;
  manifest["config_hash"] = config_hash(config);
  manifest["input_fingerprint"] = file_fingerprint({cfg.stories_path, cfg.comments_path});
  manifest["config"] = config;
  return manifest;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Thresholds t = thresholds_of(cfg);
  const auto kinds = metrics_of(cfg, kAllMetrics);
  const Corpus corpus = load_inputs(cfg);
  ensure_dir(cfg.out_dir);
  const MetricsMap metrics = compute_all_metrics(corpus, cfg.jobs);
  const Labeled labeled = build_datasets(metrics, t, kinds, cfg.seed, err);
  const fs::path dir(cfg.out_dir);
  ojson manifest = base_manifest(cfg, "build", kinds);
  ojson files = ojson::object();
  for (const auto& [kind, dataset] : labeled.datasets) {
    const std::string name = "dataset_" + std::string(to_string(kind)) + ".csv";
    write_file(dir / name, [&](std::ostream& o) { write_dataset_csv(dataset, o); });
    files[name] = {{"metric", std::string(to_string(kind))},
                   {"sample_seed", dataset.seed},
                   {"positives", dataset.positives.size()}};
    out << to_string(kind) << ": " << dataset.positives.size() << " positives, "
        << dataset.negatives.size() << " negatives\n";
  }
  manifest["files"] = files;
  write_manifest(dir, manifest);
  return kOk;
}

int cmd_overlap(const RunConfig& cfg, std::ostream& out) {
  const Thresholds t = thresholds_of(cfg);
  const Corpus corpus = load_inputs(cfg);
  ensure_dir(cfg.out_dir);
  const MetricsMap metrics = compute_all_metrics(corpus, cfg.jobs);
  // Positives only; a metric whose negatives ran short still counts.
  std::map<MetricKind, LabeledDataset> positives;
  const auto rules = default_rules(t);
  for (const MetricKind kind : kTableMetrics) {
    LabeledDataset d;
    d.metric = kind;
    d.positives = label_metric(metrics, rules.at(kind)).positives;
    positives.emplace(kind, std::move(d));
  }
  const OverlapMatrix matrix = overlap_matrix(positives);
  const fs::path dir(cfg.out_dir);
  write_file(dir / "overlap.csv", [&](std::ostream& o) { write_overlap_csv(matrix, o); });
  ojson manifest = base_manifest(cfg, "overlap", kTableMetrics);
  manifest["files"] = ojson::object({{"overlap.csv", ojson::object()}});
  write_manifest(dir, manifest);
  write_overlap_csv(matrix, out);
  return kOk;
}

int cmd_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Thresholds t = thresholds_of(cfg);
  const HyperParams hp = hyperparams_of(cfg);
  const FeatureOptions features = features_of(cfg);
  if (cfg.k < 2) throw ParameterError("k", "must be at least 2");
  if (cfg.f1_average != "positive" && cfg.f1_average != "macro")
    throw ParameterError("f1", "expected 'positive' or 'macro'");
  const auto kinds = metrics_of(cfg, kTableMetrics);

  const Corpus corpus = load_inputs(cfg);
  ensure_dir(cfg.out_dir);
  const fs::path dir(cfg.out_dir);
  const MetricsMap metrics = compute_all_metrics(corpus, cfg.jobs);
  write_file(dir / "metrics.csv", [&](std::ostream& o) { write_metrics_csv(metrics, o); });

  Labeled labeled = build_datasets(metrics, t, kinds, cfg.seed, err);
  ojson manifest = base_manifest(cfg, "experiment", kinds);
  const std::string hash = manifest["config_hash"];
  ojson files = ojson::object();
  files["metrics.csv"] = ojson::object();

  std::vector<EvalReport> reports;
  for (const MetricKind kind : kinds) {
    const auto it = labeled.datasets.find(kind);
    if (it == labeled.datasets.end()) continue;
    const LabeledDataset& dataset = it->second;
    const std::string name = "dataset_" + std::string(to_string(kind)) + ".csv";
    write_file(dir / name, [&](std::ostream& o) { write_dataset_csv(dataset, o); });
    files[name] = {{"metric", std::string(to_string(kind))}, {"sample_seed", dataset.seed}};

    if (dataset.positives.size() < static_cast<std::size_t>(cfg.k)) {
      const std::string reason = "insufficient positives (" +
                                 std::to_string(dataset.positives.size()) +
                                 ") for " + std::to_string(cfg.k) + "-fold CV";
      err << "warning: skipping " << to_string(kind) << ": " << reason << '\n';
      labeled.skipped.emplace_back(kind, reason);
      continue;
    }
    CvOptions options;
    options.k = cfg.k;
    options.seed = split_seed(cfg.seed, kind);
    options.features = features;
    options.jobs = cfg.jobs;
    options.average = cfg.f1_average == "macro" ? F1Average::macro : F1Average::positive_class;
    reports.push_back(cross_validate(dataset, corpus, hp, options));
  }

  ojson report;
  report["tool"] = "virality";
  report["version"] = kVersion;
  report["config_hash"] = hash;
  report["input_fingerprint"] = manifest["input_fingerprint"];
  report["seed"] = cfg.seed;
  report["config"] = manifest["config"];
  auto results = ojson::array();
  for (const auto& r : reports) results.push_back(to_json(r));
  report["results"] = results;
  auto skipped = ojson::array();
  for (const auto& [kind, reason] : labeled.skipped)
    skipped.push_back({{"metric", std::string(to_string(kind))}, {"reason", reason}});
  report["skipped"] = skipped;

  const bool all_table_metrics = std::all_of(
      kTableMetrics.begin(), kTableMetrics.end(), [&](MetricKind kind) {
        return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
      });
  if (all_table_metrics) {
    const auto rules = default_rules(t);
    std::map<MetricKind, LabeledDataset> positives;
    for (const MetricKind kind : kTableMetrics) {
      LabeledDataset d;
      d.metric = kind;
      d.positives = label_metric(metrics, rules.at(kind)).positives;
      positives.emplace(kind, std::move(d));
    }
    const OverlapMatrix matrix = overlap_matrix(positives);
    write_file(dir / "overlap.csv", [&](std::ostream& o) { write_overlap_csv(matrix, o); });
    files["overlap.csv"] = ojson::object();
    ojson overlap;
    for (std::size_t r = 0; r < 4; ++r) {
      ojson row;
      for (std::size_t c = 0; c < 4; ++c)
        row[std::string(short_name(matrix.kinds[c]))] = matrix.render(r, c);
      overlap[std::string(short_name(matrix.kinds[r]))] = row;
    }
    report["overlap"] = overlap;
  }

  write_file(dir / "report.json", [&](std::ostream& o) { o << report.dump(2) << '\n'; });
  const std::string table = report_table(reports);
  write_file(dir / "table1.txt", [&](std::ostream& o) {
    o << table << "# seed=" << cfg.seed << " config=" << hash << '\n';
  });
  files["report.json"] = ojson::object();
  files["table1.txt"] = ojson::object();
  manifest["files"] = files;
  write_manifest(dir, manifest);
  out << table;
  print_polarity_summary(metrics, t, out);
  return kOk;
}

void add_input_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--stories", cfg.stories_path, "stories.jsonl path")->required();
  sub.add_option("--comments", cfg.comments_path, "comments.jsonl path")->required();
  sub.add_option("--out", cfg.out_dir, "output directory");
  sub.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void add_threshold_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--threshold-appreciation", cfg.threshold_appreciation,
                 "appreciation positives: A >= value");
  sub.add_option("--threshold-buzz", cfg.threshold_buzz, "buzz positives: BS >= value");
  sub.add_option("--threshold-raising_discussion,--threshold-raising-discussion",
                 cfg.threshold_discussion, "raising-discussion positives: RD > value");
  sub.add_option("--threshold-controversiality", cfg.threshold_controversiality,
                 "controversial positives: C >= value");
  sub.add_option("--threshold-white_buzz,--threshold-white-buzz", cfg.threshold_white,
                 "white buzz universe: NUC >= value");
  sub.add_option("--threshold-black_buzz,--threshold-black-buzz", cfg.threshold_black,
                 "black buzz universe: NUC >= value");
  sub.add_option("--unappreciated-max", cfg.unappreciated_max,
                 "appreciation negatives: A <= value");
  sub.add_option("--agreement-max", cfg.agreement_max,
                 "preferred controversiality negatives: C <= value");
}

void add_metric_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--metric", cfg.metrics, "metric names")->delimiter(',');
  sub.add_option("--seed", cfg.seed, "base seed for sampling, folds and training");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Text virality metrics, datasets and classification experiments", "virality"};
  app.set_config("--config", "", "read options from a TOML/INI file; flags override it");
  app.require_subcommand(1);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
  synth_cmd->add_option("--stories", synth.stories, "number of stories");
  synth_cmd->add_option("--signal", synth.signal, "planted-lexicon probability in [0,1]");
  synth_cmd->add_option("--background-rate", synth.background_rate,
                        "per-word chance of a stray lexicon word");
  synth_cmd->add_option("--seed", synth.seed, "generator seed");
  synth_cmd->add_option("--out", synth.out_dir, "output directory");

  RunConfig cfg;
  auto* metrics_cmd = app.add_subcommand("metrics", "compute per-story metrics");
  add_input_options(*metrics_cmd, cfg);
  add_threshold_options(*metrics_cmd, cfg);

  auto* build_cmd = app.add_subcommand("build", "build balanced datasets");
  add_input_options(*build_cmd, cfg);
  add_threshold_options(*build_cmd, cfg);
  add_metric_options(*build_cmd, cfg);

  auto* overlap_cmd = app.add_subcommand("overlap", "class-overlap matrix");
  add_input_options(*overlap_cmd, cfg);
  add_threshold_options(*overlap_cmd, cfg);
  overlap_cmd->add_option("--seed", cfg.seed, "base seed");

  auto* experiment_cmd = app.add_subcommand("experiment", "datasets, cross-validation and reports");
  add_input_options(*experiment_cmd, cfg);
  add_threshold_options(*experiment_cmd, cfg);
  add_metric_options(*experiment_cmd, cfg);
  experiment_cmd->add_option("--k", cfg.k, "number of folds");
  experiment_cmd->add_option("--c-mode", cfg.c_mode, "auto|fixed")
      ->check(CLI::IsMember({"auto", "fixed"}));
  experiment_cmd->add_option("--c", cfg.c, "C when --c-mode fixed");
  experiment_cmd->add_option("--epochs", cfg.epochs, "epoch budget");
  experiment_cmd->add_option("--tolerance", cfg.tolerance, "relative objective tolerance");
  experiment_cmd->add_option("--solver", cfg.solver, "stochastic|full_batch")
      ->check(CLI::IsMember({"stochastic", "full_batch"}));
  experiment_cmd->add_option("--weighting", cfg.weighting, "presence|count")
      ->check(CLI::IsMember({"presence", "count"}));
  experiment_cmd->add_flag("--field-prefix", cfg.field_prefix, "separate title/snippet features");
  experiment_cmd->add_flag("--content-only", cfg.content_only, "drop closed-class words");
  experiment_cmd->add_option("--f1", cfg.f1_average, "positive|macro")
      ->check(CLI::IsMember({"positive", "macro"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*synth_cmd) return cmd_synth(synth, out);
    if (*metrics_cmd) return cmd_metrics(cfg, out);
    if (*build_cmd) return cmd_build(cfg, out, err);
    if (*overlap_cmd) return cmd_overlap(cfg, out);
    if (*experiment_cmd) return cmd_experiment(cfg, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace virality::cli
