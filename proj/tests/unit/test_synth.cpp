#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "virality/error.hpp"
#include "virality/metrics.hpp"
#include "virality/synth.hpp"
#include "virality/text.hpp"

using namespace virality;

namespace {

std::string dump(const SyntheticCorpus& s) {
  std::ostringstream out;
  write_stories(s.corpus, out);
  write_comments(s.corpus, out);
  write_truth(s.truth, out);
  return out.str();
}

// Share of stories carrying at least one word of `kind`'s lexicon, split by
// whether the story is planted positive for that metric.
std::pair<double, double> lexicon_rates(const SyntheticCorpus& s, MetricKind kind) {
  const auto lexicons = default_lexicons();
  const auto& words = lexicons.at(kind);
  const std::set<std::string> lexicon(words.begin(), words.end());
  std::size_t pos = 0, pos_hit = 0, neg = 0, neg_hit = 0;
  for (std::size_t i = 0; i < s.truth.size(); ++i) {
    const Story& story = s.corpus.stories()[i];
    REQUIRE(story.id == s.truth[i].story_id);
    bool hit = false;
    for (const auto& t : tokenize(story.title + " " + story.snippet))
      hit = hit || lexicon.count(t) > 0;
    const auto& planted = s.truth[i].planted;
    if (std::find(planted.begin(), planted.end(), kind) != planted.end()) {
      ++pos;
      pos_hit += hit;
    } else {
      ++neg;
      neg_hit += hit;
    }
  }
  REQUIRE(pos > 0);
  REQUIRE(neg > 0);
  return {double(pos_hit) / double(pos), double(neg_hit) / double(neg)};
}

}  // namespace

TEST_CASE("same seed gives identical corpora") {
  SynthConfig cfg;
  cfg.n_stories = 300;
  cfg.seed = 9;
  CHECK(dump(generate_synthetic(cfg)) == dump(generate_synthetic(cfg)));
  SynthConfig other = cfg;
  other.seed = 10;
  CHECK(dump(generate_synthetic(cfg)) != dump(generate_synthetic(other)));
}

TEST_CASE("generated corpus is valid") {
  SynthConfig cfg;
  cfg.n_stories = 400;
  const auto s = generate_synthetic(cfg);
  CHECK(s.corpus.stories().size() == 400);
  CHECK(s.truth.size() == 400);
  CHECK(validate_corpus(s.corpus).clean());
}

TEST_CASE("mean title length for 1000 stories, seed 42") {
  SynthConfig cfg;
  cfg.n_stories = 1000;
  cfg.seed = 42;
  const auto s = generate_synthetic(cfg);
  std::size_t words = 0;
  for (const Story& story : s.corpus.stories()) {
    std::istringstream in(story.title);
    std::string w;
    while (in >> w) ++words;
  }
  const double mean = double(words) / 1000.0;
  CHECK(mean >= 6.0);
  CHECK(mean <= 8.0);
}

TEST_CASE("zero signal leaves lexicon words at the background rate") {
  SynthConfig cfg;
  cfg.n_stories = 3000;
  cfg.signal_strength = 0.0;
  cfg.seed = 5;
  const auto s = generate_synthetic(cfg);
  for (const MetricKind kind : kTableMetrics) {
    CAPTURE(to_string(kind));
    const auto [pos, neg] = lexicon_rates(s, kind);
    CHECK(std::abs(pos - neg) < 0.06);
  }
}

TEST_CASE("full signal plants lexicon words in every positive") {
  SynthConfig cfg;
  cfg.n_stories = 1000;
  cfg.signal_strength = 1.0;
  const auto s = generate_synthetic(cfg);
  for (const MetricKind kind : kTableMetrics) {
    const auto [pos, neg] = lexicon_rates(s, kind);
    CHECK(pos == 1.0);
    CHECK(neg < 0.5);
  }
}

TEST_CASE("truth matches the computed metrics") {
  SynthConfig cfg;
  cfg.n_stories = 600;
  const auto s = generate_synthetic(cfg);
  const auto metrics = compute_all_metrics(s.corpus);
  for (const auto& record : s.truth) {
    const auto& m = metrics.at(record.story_id);
    const auto planted = [&](MetricKind k) {
      return std::find(record.planted.begin(), record.planted.end(), k) != record.planted.end();
    };
    CHECK(planted(MetricKind::appreciation) == (m.appreciation >= 100));
    CHECK(planted(MetricKind::buzz) == (m.buzz_spreading >= 100));
    CHECK(planted(MetricKind::raising_discussion) == (m.raising_discussion > Rational(50)));
    CHECK(planted(MetricKind::controversiality) ==
          (m.controversiality && *m.controversiality >= Rational(9, 10)));
  }
}

TEST_CASE("invalid config names the field") {
  const auto field_of = [](SynthConfig cfg) -> std::string {
    try {
      cfg.validate();
    } catch (const ParameterError& e) {
      return e.field();
    }
    return "";
  };
  SynthConfig cfg;
  cfg.n_stories = 0;
  CHECK(field_of(cfg) == "n_stories");
  cfg = SynthConfig();
  cfg.signal_strength = 1.5;
  CHECK(field_of(cfg) == "signal_strength");
  cfg = SynthConfig();
  cfg.background_lexicon_rate = -0.1;
  CHECK(field_of(cfg) == "background_lexicon_rate");
  cfg = SynthConfig();
  CHECK(field_of(cfg).empty());
  cfg.n_stories = -5;
  CHECK_THROWS_AS(generate_synthetic(cfg), ParameterError);
}
