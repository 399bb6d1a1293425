// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero when any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "virality/dataset.hpp"
#include "virality/error.hpp"
#include "virality/evaluation.hpp"
#include "virality/metrics.hpp"
#include "virality/svm.hpp"
#include "virality/synth.hpp"
#include "virality/text.hpp"

namespace fs = std::filesystem;
using namespace virality;

namespace {

// Tolerances and limits.
constexpr int kOracleCorpora = 100;
constexpr int kOracleMaxStories = 50;
constexpr int kOracleMaxComments = 300;
constexpr double kOracleSeconds = 10.0;

constexpr std::int64_t kAlgebraMax = 50;
constexpr std::int64_t kAlgebraScales[] = {2, 3, 5};
constexpr double kAlgebraSeconds = 1.0;

constexpr double kBoundarySeconds = 1.0;

constexpr int kNullPermutations = 10;
constexpr double kNullCenter = 0.5;
constexpr double kNullTolerance = 0.05;
constexpr double kBalanceSeconds = 60.0;

constexpr int kOverlapConfigurations = 50;
constexpr double kOverlapSeconds = 5.0;

constexpr int kFiniteDifferenceProblems = 20;
constexpr int kSolverMaxDim = 10;
constexpr int kSolverMaxN = 30;
constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kFiniteDifferenceRelTol = 1e-4;
constexpr double kFlipTolerance = 1e-6;
constexpr double kSolverSeconds = 30.0;

constexpr std::int64_t kEndToEndStories = 4000;
constexpr std::uint64_t kEndToEndSeed = 42;
constexpr double kMinF1Signal09 = 0.85;
constexpr double kMinF1Signal10 = 0.95;
constexpr double kEndToEndSeconds = 300.0;

constexpr int kLeakageRuns = 20;
constexpr double kLeakageSeconds = 60.0;

// Reference values for the original crawl, checked only when it is supplied.
constexpr double kCrawlF1[] = {0.78, 0.81, 0.70, 0.68};  // App, Buzz, Cont, Rais
constexpr std::size_t kCrawlPositives[] = {16660, 3270, 3786, 3315};
constexpr double kCrawlOverlap[4][4] = {{0, 15.1, 4.2, 14.8},
                                        {77.0, 0, 3.1, 51.7},
                                        {21.4, 3.0, 0, 48.6},
                                        {65.0, 44.6, 42.5, 0}};
constexpr std::size_t kCrawlWhite = 254;
constexpr std::size_t kCrawlBlack = 1499;
constexpr double kCrawlF1Tolerance = 0.05;
constexpr double kCrawlOverlapTolerance = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.pass && seconds > limit_seconds) {
    out.pass = false;
    out.detail = "over time limit";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, limit_seconds);
  std::cout << (out.pass ? "PASS " : "FAIL ") << name << " [" << timing << "]";
  if (!out.detail.empty()) std::cout << " " << out.detail;
  std::cout << std::endl;
  if (!out.pass) ++failures;
}

StoryMetrics with(std::int64_t a, Rational rd, std::optional<Rational> c) {
  StoryMetrics m;
  m.story_id = "x";
  m.appreciation = a;
  m.raising_discussion = rd;
  m.controversiality = c;
  return m;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int shell(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

// Runs synth then experiment into `dir`; returns the per-metric mean F1.
std::map<std::string, double> pipeline(const fs::path& dir, double signal, Outcome& out) {
  const std::string cli = VIRALITY_CLI_PATH;
  std::map<std::string, double> f1;
  char signal_text[32];
  std::snprintf(signal_text, sizeof signal_text, "%.2f", signal);
  const int synth = shell(cli + " synth --stories " + std::to_string(kEndToEndStories) +
                          " --signal " + signal_text + " --seed " +
                          std::to_string(kEndToEndSeed) + " --out " + quote(dir));
  out.require(synth == 0, "synth exited with " + std::to_string(synth));
  const int experiment =
      shell(cli + " experiment --stories " + quote(dir / "stories.jsonl") + " --comments " +
            quote(dir / "comments.jsonl") + " --out " + quote(dir / "exp"));
  out.require(experiment == 0, "experiment exited with " + std::to_string(experiment));
  if (!out.pass) return f1;
  const auto report = nlohmann::json::parse(slurp(dir / "exp" / "report.json"));
  for (const auto& r : report["results"]) f1[r["metric"]] = r["mean_f1"];
  return f1;
}

std::string describe(const std::map<std::string, double>& f1) {
  std::string s;
  char buffer[64];
  for (const auto& [name, value] : f1) {
    std::snprintf(buffer, sizeof buffer, "%s%s=%.3f", s.empty() ? "" : " ", name.c_str(), value);
    s += buffer;
  }
  return s;
}

Outcome metric_oracle() {
  Outcome out;
  Rng rng(20240601);
  for (int i = 0; i < kOracleCorpora && out.pass; ++i) {
    const Corpus c = testing::random_corpus(rng, kOracleMaxStories, kOracleMaxComments);
    out.require(compute_all_metrics(c, 4) == testing::oracle_metrics(c),
                "mismatch on corpus " + std::to_string(i));
  }
  out.detail = out.pass ? std::to_string(kOracleCorpora) + " corpora identical" : out.detail;
  return out;
}

Outcome controversiality_algebra() {
  Outcome out;
  std::size_t pairs = 0;
  for (std::int64_t a = 0; a <= kAlgebraMax; ++a)
    for (std::int64_t b = 0; b <= kAlgebraMax; ++b) {
      ++pairs;
      const auto s = controversiality_score(a, b);
      const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      out.require(s == controversiality_score(b, a), "asymmetric at " + at);
      out.require(s.has_value() == (a > 0 || b > 0), "definedness at " + at);
      for (const auto k : kAlgebraScales)
        out.require(s == controversiality_score(k * a, k * b), "scale variance at " + at);
      if (!s) continue;
      out.require(*s >= Rational(0) && *s <= Rational(1), "out of range at " + at);
      out.require((*s == Rational(1)) == (a == b && a > 0), "unit case at " + at);
      out.require((*s == Rational(0)) == ((a == 0) != (b == 0)), "zero case at " + at);
    }
  if (out.pass) out.detail = std::to_string(pairs) + " pairs";
  return out;
}

Outcome threshold_boundaries() {
  Outcome out;
  const auto rules = default_rules();
  const auto& app = rules.at(MetricKind::appreciation);
  const auto& rd = rules.at(MetricKind::raising_discussion);
  const auto& con = rules.at(MetricKind::controversiality);
  out.require(!app.positive(with(99, 0, std::nullopt)), "A=99 positive");
  out.require(app.positive(with(100, 0, std::nullopt)), "A=100 not positive");
  out.require(!rd.positive(with(0, Rational(50), std::nullopt)), "RD=50 positive");
  out.require(rd.positive(with(0, Rational::parse("50.0001"), std::nullopt)),
              "RD=50.0001 not positive");
  out.require(!con.positive(with(0, 0, Rational::parse("0.8999"))), "C=0.8999 positive");
  out.require(con.positive(with(0, 0, Rational::parse("0.9"))), "C=0.9 not positive");

  // The same boundaries reached through real comment data.
  std::vector<Story> stories{{"a99", "", "", 99}, {"a100", "", "", 100}, {"rd50", "", "", 0},
                             {"rd51", "", "", 0}, {"c8999", "", "", 0}, {"c9", "", "", 0}};
  std::vector<Comment> comments;
  const auto add = [&](const std::string& story, int users, int replies) {
    for (int u = 0; u < users; ++u) {
      Comment c;
      c.id = story + "-" + std::to_string(u);
      c.story_id = story;
      c.user_id = "u" + std::to_string(u);
      if (u > 0 && u <= replies) c.parent_id = story + "-0";
      comments.push_back(c);
    }
  };
  add("rd50", 51, 50);  // RD = 50/51 * 51 = 50
  add("rd51", 52, 51);  // RD = 51/52 * 52 = 51
  Comment v1{"c8999-v", "c8999", "u", std::nullopt, 8999, 10000, Emotion::unknown};
  Comment v2{"c9-v", "c9", "u", std::nullopt, 9, 10, Emotion::unknown};
  comments.push_back(v1);
  comments.push_back(v2);
  const auto metrics = compute_all_metrics(Corpus::assemble(stories, comments));
  const auto positives = [&](MetricKind kind) {
    return label_metric(metrics, rules.at(kind)).positives;
  };
  out.require(positives(MetricKind::appreciation) == IdSet{"a100"}, "corpus A boundary");
  out.require(metrics.at("rd50").raising_discussion == Rational(50), "RD construction");
  out.require(positives(MetricKind::raising_discussion) == IdSet{"rd51"}, "corpus RD boundary");
  out.require(positives(MetricKind::controversiality) == IdSet{"c9"}, "corpus C boundary");
  if (out.pass) out.detail = "A>=100, RD>50, C>=0.9 exact";
  return out;
}

Outcome balance_and_baseline() {
  Outcome out;
  SynthConfig cfg;
  cfg.n_stories = 2000;
  cfg.seed = 7;
  const auto s = generate_synthetic(cfg);
  const auto metrics = compute_all_metrics(s.corpus, 4);
  const auto rules = default_rules();
  std::size_t checked = 0;
  for (const auto& [kind, rule] : rules) {
    const auto labeling = label_metric(metrics, rule);
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
      LabeledDataset d;
      try {
        d = build_balanced(kind, labeling.positives, labeling.negatives, seed);
      } catch (const CapacityError&) {
        continue;
      }
      ++checked;
      out.require(d.positives.size() == d.negatives.size(),
                  std::string("unbalanced ") + std::string(to_string(kind)));
      for (const auto& id : d.negatives)
        out.require(d.positives.count(id) == 0, "overlapping classes");
      // Constant-positive classifier over the whole balanced dataset.
      const auto n = static_cast<std::int64_t>(d.positives.size());
      if (n > 0) {
        const auto score = f1_score(n, n, 0);
        out.require(score.precision == 0.5 && score.recall == 1.0 && score.f1 == 2.0 / 3.0,
                    "constant-positive F1 is not 2/3");
      }
    }
  }
  out.require(checked >= 12, "too few datasets built");

  // Label permutations of a planted dataset.
  const auto labeling = label_metric(metrics, rules.at(MetricKind::appreciation));
  const auto planted = build_balanced(MetricKind::appreciation, labeling.positives,
                                      labeling.negatives, 5);
  std::vector<std::string> all(planted.positives.begin(), planted.positives.end());
  all.insert(all.end(), planted.negatives.begin(), planted.negatives.end());
  std::sort(all.begin(), all.end());
  Rng rng(99);
  double sum = 0.0;
  for (int p = 0; p < kNullPermutations; ++p) {
    auto shuffled = all;
    rng.shuffle(shuffled);
    LabeledDataset permuted;
    permuted.metric = MetricKind::appreciation;
    const auto half = shuffled.size() / 2;
    permuted.positives = IdSet(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(half));
    permuted.negatives = IdSet(shuffled.begin() + static_cast<std::ptrdiff_t>(half), shuffled.end());
    CvOptions opts;
    opts.seed = derive_seed(123, static_cast<std::uint64_t>(p));
    opts.jobs = 4;
    sum += cross_validate(permuted, s.corpus, HyperParams{}, opts).mean_f1;
  }
  const double mean = sum / kNullPermutations;
  out.require(std::abs(mean - kNullCenter) <= kNullTolerance,
              "permutation-null mean F1 " + std::to_string(mean));
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%zu datasets balanced; null mean F1 %.3f", checked, mean);
  if (out.pass) out.detail = buffer;
  return out;
}

Outcome overlap_reciprocity() {
  Outcome out;
  Rng rng(31337);
  for (int round = 0; round < kOverlapConfigurations; ++round) {
    std::map<MetricKind, LabeledDataset> sets;
    const auto universe = rng.between(1, 500);
    for (const MetricKind kind : kTableMetrics) {
      LabeledDataset d;
      d.metric = kind;
      const double density = rng.uniform();
      for (std::int64_t i = 0; i < universe; ++i)
        if (rng.bernoulli(density)) d.positives.insert("s" + std::to_string(i));
      sets.emplace(kind, std::move(d));
    }
    const auto m = overlap_matrix(sets);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        if (r == c || m.positives[r] == 0 || m.positives[c] == 0) continue;
        const Rational x = *m.cell(r, c), y = *m.cell(c, r);
        const auto pr = static_cast<std::int64_t>(m.positives[r]);
        const auto pc = static_cast<std::int64_t>(m.positives[c]);
        out.require(Rational(x.num() * pr, x.den()) == Rational(y.num() * pc, y.den()),
                    "reciprocity broken in configuration " + std::to_string(round));
      }
  }
  std::map<MetricKind, LabeledDataset> same, disjoint;
  for (std::size_t i = 0; i < 4; ++i) {
    LabeledDataset a, b;
    a.metric = b.metric = kTableMetrics[i];
    a.positives = {"p", "q", "r"};
    b.positives = {"d" + std::to_string(i)};
    same.emplace(kTableMetrics[i], a);
    disjoint.emplace(kTableMetrics[i], b);
  }
  const auto ms = overlap_matrix(same), md = overlap_matrix(disjoint);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (r == c) continue;
      out.require(ms.render(r, c) == "100.0", "identity cell not 100.0");
      out.require(md.render(r, c) == "0.0", "disjoint cell not 0.0");
    }
  if (out.pass) out.detail = std::to_string(kOverlapConfigurations) + " configurations exact";
  return out;
}

Outcome solver_correctness() {
  Outcome out;
  Rng rng(777);
  double worst = 0.0;
  for (int p = 0; p < kFiniteDifferenceProblems; ++p) {
    const int dim = static_cast<int>(rng.between(1, kSolverMaxDim));
    const int n = static_cast<int>(rng.between(2, kSolverMaxN));
    const auto data = testing::random_dense_problem(rng, dim, n);
    const double c = 0.1 + 2.0 * rng.uniform();
    // Draw a differentiable point: all margins clear of the hinge.
    std::vector<double> w(static_cast<std::size_t>(dim));
    double b = 0.0;
    for (bool smooth = false; !smooth;) {
      for (double& x : w) x = rng.uniform() * 2.0 - 1.0;
      b = rng.uniform() - 0.5;
      smooth = true;
      for (const auto& ex : data) {
        double m = b;
        for (const auto& f : ex.x.entries) m += w[f.index] * f.value;
        smooth = smooth && std::abs(ex.y * m - 1.0) > 1e-3;
      }
    }
    const auto g = objective_subgradient(w, b, data, c);
    const double h = kFiniteDifferenceStep;
    for (int j = 0; j <= dim; ++j) {
      auto wp = w, wm = w;
      double bp = b, bm = b;
      if (j < dim) {
        wp[static_cast<std::size_t>(j)] += h;
        wm[static_cast<std::size_t>(j)] -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double fd = (primal_objective(wp, bp, data, c) - primal_objective(wm, bm, data, c)) / (2 * h);
      const double an = j < dim ? g.weights[static_cast<std::size_t>(j)] : g.bias;
      const double rel = std::abs(fd - an) / std::max(1.0, std::abs(an));
      worst = std::max(worst, rel);
      out.require(rel <= kFiniteDifferenceRelTol, "finite difference mismatch");
    }

    HyperParams full;
    full.solver = Solver::full_batch;
    full.tolerance = 1e-9;
    full.epochs = 300;
    const SvmModel m = train(data, static_cast<std::size_t>(dim), full);
    const auto& hist = m.objective_history;
    for (std::size_t i = 1; i < hist.size(); ++i)
      out.require(hist[i] <= hist[i - 1], "full-batch objective increased");
    // Every accepted step decreases strictly; only a final stall may repeat.
    for (std::size_t i = 1; i + 1 < hist.size(); ++i)
      out.require(hist[i] < hist[i - 1], "full-batch objective stalled mid-run");

    for (const Solver solver : {Solver::stochastic, Solver::full_batch}) {
      HyperParams hp;
      hp.solver = solver;
      auto flipped = data;
      for (auto& ex : flipped) ex.y = -ex.y;
      const SvmModel a = train(data, static_cast<std::size_t>(dim), hp);
      const SvmModel f = train(flipped, static_cast<std::size_t>(dim), hp);
      for (std::size_t i = 0; i < a.weights.size(); ++i)
        out.require(std::abs(a.weights[i] + f.weights[i]) <=
                        kFlipTolerance * (1.0 + std::abs(a.weights[i])),
                    "label flip not antisymmetric");
      out.require(std::abs(a.bias + f.bias) <= kFlipTolerance * (1.0 + std::abs(a.bias)),
                  "label flip bias not antisymmetric");
    }
  }

  // Separable data, verified against its generating hyperplane.
  std::size_t errors = 0;
  for (int p = 0; p < 5; ++p) {
    const int dim = 2 + p;
    std::vector<double> normal(static_cast<std::size_t>(dim));
    for (double& x : normal) x = rng.uniform() * 2.0 - 1.0;
    std::vector<LabeledVector> data;
    while (data.size() < 200) {
      LabeledVector v;
      double score = 0.05;
      for (int f = 0; f < dim; ++f) {
        const double value = rng.uniform() * 2.0 - 1.0;
        v.x.entries.push_back({static_cast<std::uint32_t>(f), value});
        score += normal[static_cast<std::size_t>(f)] * value;
      }
      if (std::abs(score) < 0.1) continue;
      v.y = score > 0 ? 1 : -1;
      data.push_back(std::move(v));
    }
    for (const auto& ex : data) {
      double score = 0.05;
      for (const auto& f : ex.x.entries) score += normal[f.index] * f.value;
      out.require(ex.y * score >= 0.1, "generated data not separable");
    }
    HyperParams hp;
    hp.c_mode = CMode::fixed;
    hp.c_value = 100.0;
    hp.epochs = 500;
    hp.tolerance = 1e-9;
    const SvmModel m = train(data, static_cast<std::size_t>(dim), hp);
    for (const auto& ex : data) errors += predict(m, ex.x).label != ex.y;
  }
  out.require(errors == 0, std::to_string(errors) + " training errors on separable data");
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "worst finite-difference rel err %.2e", worst);
  if (out.pass) out.detail = buffer;
  return out;
}

Outcome end_to_end() {
  Outcome out;
  const fs::path root =
      fs::temp_directory_path() / ("virality-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(root);
  const auto first = pipeline(root / "run1", 0.9, out);
  const auto second = pipeline(root / "run2", 0.9, out);
  const auto full = pipeline(root / "full", 1.0, out);
  if (out.pass) {
    for (const MetricKind kind : kTableMetrics) {
      const std::string name(to_string(kind));
      out.require(first.count(name) && first.at(name) >= kMinF1Signal09,
                  "signal 0.9 " + name + " below threshold");
      out.require(full.count(name) && full.at(name) >= kMinF1Signal10,
                  "signal 1.0 " + name + " below threshold");
    }
    for (const auto& entry : fs::directory_iterator(root / "run1" / "exp")) {
      const auto name = entry.path().filename();
      out.require(slurp(entry.path()) == slurp(root / "run2" / "exp" / name),
                  name.string() + " differs between runs");
    }
  }
  if (out.pass)
    out.detail = "signal 0.9: " + describe(first) + "; signal 1.0: " + describe(full);
  fs::remove_all(root);
  return out;
}

Outcome no_leakage() {
  Outcome out;
  SynthConfig cfg;
  cfg.n_stories = 1500;
  cfg.seed = 2718;
  const auto s = generate_synthetic(cfg);
  const auto metrics = compute_all_metrics(s.corpus, 4);
  const auto rules = default_rules();
  std::size_t folds = 0, violations = 0;
  for (int run = 0; run < kLeakageRuns; ++run) {
    const MetricKind kind = kTableMetrics[static_cast<std::size_t>(run) % 4];
    const auto labeling = label_metric(metrics, rules.at(kind));
    const auto d = build_balanced(kind, labeling.positives, labeling.negatives,
                                  derive_seed(1, static_cast<std::uint64_t>(run)));
    CvOptions opts;
    opts.seed = derive_seed(2, static_cast<std::uint64_t>(run));
    opts.jobs = 4;
    opts.features.field_prefix = run % 3 == 1;
    opts.observer = [&](const FoldView& view) {
      ++folds;
      std::set<std::string> train;
      std::set<std::string> train_terms;
      for (const auto& x : view.fold.train) {
        train.insert(x.id);
        for (const auto& t : story_terms(*s.corpus.find_story(x.id), opts.features))
          train_terms.insert(t);
      }
      for (const auto& x : view.fold.test) violations += train.count(x.id);
      for (const auto& term : view.vocabulary.terms()) violations += train_terms.count(term) == 0;
    };
    cross_validate(d, s.corpus, HyperParams{}, opts);
  }
  out.require(violations == 0, std::to_string(violations) + " violations");
  out.require(folds == static_cast<std::size_t>(kLeakageRuns) * 10, "observer missed folds");
  if (out.pass) out.detail = std::to_string(folds) + " folds audited, 0 violations";
  return out;
}

void original_crawl() {
  const char* dir = std::getenv("VIRALITY_ORIGINAL_CORPUS");
  if (dir == nullptr || *dir == '\0') {
    std::cout << "SKIP original_crawl_reference (set VIRALITY_ORIGINAL_CORPUS to a directory "
                 "with stories.jsonl and comments.jsonl)"
              << std::endl;
    return;
  }
  criterion("original_crawl_reference", 24 * 3600.0, [&] {
    Outcome out;
    const fs::path in(dir);
    const fs::path out_dir =
        fs::temp_directory_path() / ("virality-crawl-" + std::to_string(::getpid()));
    const int code = shell(std::string(VIRALITY_CLI_PATH) + " experiment --stories " +
                           quote(in / "stories.jsonl") + " --comments " +
                           quote(in / "comments.jsonl") + " --out " + quote(out_dir));
    out.require(code == 0, "experiment exited with " + std::to_string(code));
    if (!out.pass) return out;
    const auto report = nlohmann::json::parse(slurp(out_dir / "report.json"));
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string name(to_string(kTableMetrics[i]));
      bool found = false;
      for (const auto& r : report["results"]) {
        if (r["metric"] != name) continue;
        found = true;
        out.require(std::abs(r["mean_f1"].get<double>() - kCrawlF1[i]) <= kCrawlF1Tolerance,
                    name + " F1 outside tolerance");
        out.require(r["positives"].get<std::size_t>() == kCrawlPositives[i],
                    name + " positive count differs");
      }
      out.require(found, name + " missing from report");
    }
    const auto corpus = load_corpus(in / "stories.jsonl", in / "comments.jsonl");
    const auto metrics = compute_all_metrics(corpus, 8);
    const auto rules = default_rules();
    std::map<MetricKind, LabeledDataset> sets;
    for (const MetricKind kind : kTableMetrics) {
      LabeledDataset d;
      d.positives = label_metric(metrics, rules.at(kind)).positives;
      sets.emplace(kind, d);
    }
    const auto m = overlap_matrix(sets);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (r != c && m.cell(r, c))
          out.require(std::abs(m.cell(r, c)->to_double() - kCrawlOverlap[r][c]) <=
                          kCrawlOverlapTolerance,
                      "overlap cell outside tolerance");
    out.require(label_metric(metrics, rules.at(MetricKind::white_buzz)).positives.size() ==
                    kCrawlWhite,
                "white buzz count differs");
    out.require(label_metric(metrics, rules.at(MetricKind::black_buzz)).positives.size() ==
                    kCrawlBlack,
                "black buzz count differs");
    fs::remove_all(out_dir);
    return out;
  });
}

}  // namespace

int main() {
  criterion("metric_oracle_equivalence", kOracleSeconds, metric_oracle);
  criterion("controversiality_algebra", kAlgebraSeconds, controversiality_algebra);
  criterion("threshold_boundaries", kBoundarySeconds, threshold_boundaries);
  criterion("balance_and_baseline", kBalanceSeconds, balance_and_baseline);
  criterion("overlap_reciprocity", kOverlapSeconds, overlap_reciprocity);
  criterion("solver_correctness", kSolverSeconds, solver_correctness);
  criterion("end_to_end_planted_signal", kEndToEndSeconds, end_to_end);
  criterion("no_leakage_audit", kLeakageSeconds, no_leakage);
  original_crawl();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
