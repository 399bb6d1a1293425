#include "virality/synth.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <span>
#include <unordered_set>

#include "json.hpp"
#include "virality/error.hpp"
#include "virality/random.hpp"

namespace virality {

std::map<MetricKind, std::vector<std::string>> default_lexicons() {
  return {
      {MetricKind::appreciation,
       {"awesome", "brilliant", "gorgeous", "delightful", "hilarious",
        "masterpiece", "inspiring", "adorable", "fantastic", "wonderful",
        "stunning", "legendary", "superb", "charming", "breathtaking"}},
      {MetricKind::buzz,
       {"iphone", "google", "obama", "microsoft", "leaked", "rumor",
        "exclusive", "twitter", "facebook", "apple", "ubuntu", "linux",
        "firefox", "playstation", "youtube"}},
      {MetricKind::controversiality,
       {"abortion", "religion", "gun", "atheist", "torture", "immigration",
        "evolution", "creationism", "scientology", "vaccine", "marijuana",
        "taliban", "execution", "censorship", "feminism"}},
      {MetricKind::raising_discussion,
       {"mystery", "puzzle", "theory", "debate", "riddle", "paradox",
        "conspiracy", "unsolved", "hypothesis", "clue", "secret", "enigma",
        "speculation", "dilemma", "whodunit"}},
      {MetricKind::white_buzz,
       {"kitten", "puppy", "rescue", "hero", "charity", "smile", "gift",
        "kindness", "rainbow", "reunion", "grateful", "volunteer", "miracle",
        "cure", "celebration"}},
      {MetricKind::black_buzz,
       {"scam", "ripoff", "fraud", "lawsuit", "outage", "recall", "hoax",
        "cruelty", "bailout", "spam", "malware", "layoff", "scandal", "bribe",
        "corruption"}},
  };
}

const std::vector<std::string>& background_words() {
  // Roughly frequency-ranked; sampled with Zipf weights.
  static const std::vector<std::string> words = {
      "the", "of", "to", "a", "in", "and", "for", "is", "on", "with", "new",
      "how", "you", "your", "from", "at", "by", "this", "are", "it", "an",
      "be", "about", "more", "that", "has", "can", "will", "after", "its",
      "video", "game", "company", "year", "world", "police", "man", "study",
      "report", "music", "government", "photo", "people", "school", "city",
      "car", "water", "money", "life", "team", "time", "day", "week",
      "market", "price", "phone", "computer", "software", "internet", "web",
      "site", "blog", "article", "story", "review", "guide", "list", "tips",
      "science", "health", "food", "law", "court", "president", "state",
      "country", "war", "army", "election", "vote", "bill", "energy", "oil",
      "space", "nasa", "earth", "planet", "research", "scientist", "doctor",
      "drug", "hospital", "child", "family", "house", "home", "job", "work",
      "office", "business", "bank", "economy", "tax", "budget", "plan",
      "idea", "design", "art", "film", "book", "show", "star", "fan",
      "player", "season", "league", "sport", "ball", "football", "baseball",
      "hockey", "golf", "race", "road", "train", "plane", "airport",
      "travel", "hotel", "beach", "island", "river", "mountain", "park",
      "animal", "dog", "cat", "bird", "fish", "tree", "garden", "weather",
      "storm", "snow", "rain", "fire", "power", "light", "sound", "image",
      "picture", "camera", "screen", "device", "system", "network", "server",
      "code", "program", "developer", "user", "account", "password", "email",
      "message", "update", "version", "release", "feature", "problem",
      "answer", "reason", "way", "part", "place", "says", "makes", "gets",
      "finds", "shows", "reveals", "announces", "reports", "wants", "needs",
      "looks", "takes", "gives", "uses", "runs", "plays", "builds", "buys",
      "sells", "opens", "closes", "starts", "ends", "wins", "loses", "helps",
      "tries", "calls", "tells", "asks", "works", "moves", "kills", "saves",
      "big", "small", "old", "young", "good", "bad", "great", "free", "real",
      "first", "last", "top", "high", "low", "long", "short", "hot", "cold",
      "fast", "slow", "easy", "hard", "cheap", "public", "private", "local",
      "national", "global", "digital", "mobile", "social", "political",
      "economic", "official", "major", "huge", "simple", "strange", "funny",
      "weird", "cool", "important", "possible", "available", "popular",
      "famous", "recent", "latest", "ancient", "modern", "classic",
      "really", "finally", "actually", "quickly", "probably", "nearly",
  };
  return words;
}

SynthConfig::SynthConfig() : lexicons(default_lexicons()) {}

void SynthConfig::validate() const {
  auto probability = [](double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ParameterError(field, "must lie in [0, 1]");
  };
  if (n_stories < 1) throw ParameterError("n_stories", "must be at least 1");
  probability(signal_strength, "signal_strength");
  probability(background_lexicon_rate, "background_lexicon_rate");
  const CommentModel& m = comments;
  probability(m.p_silent, "p_silent");
  probability(m.p_small, "p_small");
  probability(m.p_medium, "p_medium");
  probability(m.p_silent + m.p_small + m.p_medium, "p_silent+p_small+p_medium");
  probability(m.p_appreciated, "p_appreciated");
  probability(m.p_unappreciated, "p_unappreciated");
  probability(m.p_appreciated + m.p_unappreciated, "p_appreciated+p_unappreciated");
  probability(m.p_discussion, "p_discussion");
  probability(m.p_flat, "p_flat");
  probability(m.p_discussion + m.p_flat, "p_discussion+p_flat");
  probability(m.p_controversial, "p_controversial");
  probability(m.p_agreement, "p_agreement");
  probability(m.p_controversial + m.p_agreement, "p_controversial+p_agreement");
  probability(m.p_white, "p_white");
  probability(m.p_black, "p_black");
  probability(m.p_white + m.p_black, "p_white+p_black");
  probability(m.p_unknown_emotion, "p_unknown_emotion");
  if (m.user_pool < 200) throw ParameterError("user_pool", "must be at least 200");

  std::set<std::string> seen;
  for (const auto& [kind, words] : lexicons) {
    if (words.empty())
      throw ParameterError("lexicons." + std::string(to_string(kind)),
                           "must not be empty");
    for (const auto& w : words) {
      if (w.empty() || w.find(' ') != std::string::npos)
        throw ParameterError("lexicons." + std::string(to_string(kind)),
                             "words must be non-empty single tokens");
      if (!seen.insert(w).second)
        throw ParameterError("lexicons." + std::string(to_string(kind)),
                             "lexicons must be disjoint; '" + w + "' repeats");
    }
  }
}

namespace {

class WordSampler {
 public:
  explicit WordSampler(const std::vector<std::string>& words) : words_(words) {
    double total = 0.0;
    for (std::size_t r = 0; r < words.size(); ++r) {
      total += 1.0 / std::pow(static_cast<double>(r + 1), 0.8);
      cumulative_.push_back(total);
    }
    for (double& c : cumulative_) c /= total;
  }

  const std::string& draw(Rng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto index = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative_.begin()), words_.size() - 1);
    return words_[index];
  }

 private:
  const std::vector<std::string>& words_;
  std::vector<double> cumulative_;
};

std::string zero_padded(const char* prefix, std::int64_t value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width)
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  return prefix + digits;
}

struct TextSlots {
  std::vector<std::string> words;
  std::vector<bool> planted;
};

TextSlots background_text(std::int64_t length, const WordSampler& sampler,
                          const std::vector<const std::string*>& lexicon_union,
                          double lexicon_rate, Rng& rng) {
  TextSlots text;
  for (std::int64_t i = 0; i < length; ++i) {
    if (!lexicon_union.empty() && rng.bernoulli(lexicon_rate))
      text.words.push_back(*lexicon_union[rng.below(lexicon_union.size())]);
    else
      text.words.push_back(sampler.draw(rng));
    text.planted.push_back(false);
  }
  return text;
}

void plant(TextSlots& text, std::span<const std::string* const> words, Rng& rng) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < text.words.size(); ++i)
    if (!text.planted[i]) free.push_back(i);
  rng.shuffle(free);
  const auto n = std::min(words.size(), free.size());
  for (std::size_t i = 0; i < n; ++i) {
    text.words[free[i]] = *words[i];
    text.planted[free[i]] = true;
  }
}

std::string join(const TextSlots& text, bool sentence) {
  std::string out;
  for (std::size_t i = 0; i < text.words.size(); ++i) {
    if (i > 0) out += ' ';
    out += text.words[i];
  }
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  if (sentence) out += '.';
  return out;
}

enum class Tier { silent, small, medium, large };

// Number of replies for the requested discussion role.
std::int64_t reply_count(Tier tier, bool discussion, bool flat,
                         std::int64_t nc_total, std::int64_t nuc, Rng& rng) {
  if (nc_total <= 1 || flat) return 0;
  if (tier == Tier::small) return rng.between(1, nc_total - 1);
  // RD = replies * nuc / nc_total, compared against 50.
  const std::int64_t boundary = (50 * nc_total) / nuc;  // largest count with RD <= 50
  if (discussion) {
    const std::int64_t lo = boundary + 1;
    return lo <= nc_total - 1 ? rng.between(lo, nc_total - 1) : nc_total - 1;
  }
  return rng.between(1, std::min(boundary, nc_total - 1));
}

std::vector<Emotion> emotions_for(Tier tier, bool white, bool black,
                                  std::int64_t nc, double p_unknown, Rng& rng) {
  auto random_emotion = [&] {
    if (rng.bernoulli(p_unknown)) return Emotion::unknown;
    const auto r = rng.below(100);
    if (r < 32) return Emotion::positive;
    if (r < 66) return Emotion::negative;
    return Emotion::neutral;
  };
  std::vector<Emotion> out;
  if (tier == Tier::large && (white || black)) {
    const Emotion majority = white ? Emotion::positive : Emotion::negative;
    const Emotion opposite = white ? Emotion::negative : Emotion::positive;
    const std::int64_t lead = rng.between(nc / 2 + 1, std::max(nc / 2 + 1, (3 * nc) / 4));
    for (std::int64_t i = 0; i < lead; ++i) out.push_back(majority);
    while (static_cast<std::int64_t>(out.size()) < nc) {
      const auto r = rng.below(3);
      out.push_back(r == 0 ? opposite : r == 1 ? Emotion::neutral : Emotion::unknown);
    }
  } else {
    for (;;) {
      out.clear();
      std::int64_t pos = 0, neg = 0, neu = 0;
      for (std::int64_t i = 0; i < nc; ++i) {
        const Emotion e = random_emotion();
        pos += e == Emotion::positive;
        neg += e == Emotion::negative;
        neu += e == Emotion::neutral;
        out.push_back(e);
      }
      // Large stories outside the white/black roles must stay "neither".
      if (tier != Tier::large || (pos <= neu + neg && neg <= neu + pos)) break;
    }
  }
  rng.shuffle(out);
  return out;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SynthConfig& cfg) {
  cfg.validate();
  const CommentModel& m = cfg.comments;
  Rng rng(cfg.seed);
  const WordSampler sampler(background_words());
  std::vector<const std::string*> lexicon_union;
  for (const auto& [kind, words] : cfg.lexicons)
    for (const auto& w : words) lexicon_union.push_back(&w);

  std::vector<Story> stories;
  std::vector<Comment> comments;
  std::vector<TruthRecord> truth;
  stories.reserve(static_cast<std::size_t>(cfg.n_stories));
  truth.reserve(static_cast<std::size_t>(cfg.n_stories));

  const int id_width = std::max(6, static_cast<int>(std::to_string(cfg.n_stories).size()));
  const int user_width = static_cast<int>(std::to_string(m.user_pool).size());
  for (std::int64_t s = 0; s < cfg.n_stories; ++s) {
    Story story;
    story.id = zero_padded("s", s + 1, id_width);
    TruthRecord record;
    record.story_id = story.id;

    // Appreciation.
    const double ua = rng.uniform();
    if (ua < m.p_appreciated) {
      story.digg_count = rng.between(100, 800);
      record.planted.push_back(MetricKind::appreciation);
    } else if (ua < m.p_appreciated + m.p_unappreciated) {
      story.digg_count = rng.between(0, 1);
    } else {
      story.digg_count = rng.between(2, 99);
    }

    // Comment volume.
    const double ut = rng.uniform();
    Tier tier = Tier::large;
    if (ut < m.p_silent) tier = Tier::silent;
    else if (ut < m.p_silent + m.p_small) tier = Tier::small;
    else if (ut < m.p_silent + m.p_small + m.p_medium) tier = Tier::medium;

    std::int64_t nuc = 0;
    std::int64_t nc = 0;
    switch (tier) {
      case Tier::silent: break;
      case Tier::small: nuc = rng.between(1, 25); nc = nuc + rng.between(0, 5); break;
      case Tier::medium: nuc = rng.between(60, 95); nc = nuc + rng.between(0, 10); break;
      case Tier::large: nuc = rng.between(100, 180); nc = nuc + rng.between(0, 20); break;
    }
    if (tier == Tier::large) record.planted.push_back(MetricKind::buzz);

    if (nc > 0) {
      const double ud = rng.uniform();
      const bool can_discuss = tier == Tier::medium || tier == Tier::large;
      const bool discussion = can_discuss && ud < m.p_discussion;
      const bool flat = !discussion && ud < m.p_discussion + m.p_flat;
      if (discussion) record.planted.push_back(MetricKind::raising_discussion);
      const std::int64_t replies = reply_count(tier, discussion, flat, nc, nuc, rng);

      // Distinct users, each commenting at least once.
      std::set<std::int64_t> chosen;
      while (static_cast<std::int64_t>(chosen.size()) < nuc)
        chosen.insert(rng.between(1, m.user_pool));
      std::vector<std::int64_t> users(chosen.begin(), chosen.end());
      std::vector<std::int64_t> authors = users;
      while (static_cast<std::int64_t>(authors.size()) < nc)
        authors.push_back(users[rng.below(users.size())]);
      rng.shuffle(authors);

      std::vector<std::size_t> positions(static_cast<std::size_t>(nc - 1));
      for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i + 1;
      rng.shuffle(positions);
      std::vector<bool> is_reply(static_cast<std::size_t>(nc), false);
      for (std::int64_t i = 0; i < replies; ++i) is_reply[positions[static_cast<std::size_t>(i)]] = true;

      // Vote maxima.
      const double uc = rng.uniform();
      std::int64_t top = 0;
      std::int64_t other = 0;
      if (uc < m.p_controversial) {
        top = rng.between(5, 60);
        other = rng.between((9 * top + 9) / 10, top);
        record.planted.push_back(MetricKind::controversiality);
      } else if (uc < m.p_controversial + m.p_agreement) {
        top = rng.between(10, 60);
        other = rng.between(0, top / 10);
      } else {
        top = rng.between(10, 60);
        other = rng.between((2 * top + 4) / 5, (4 * top) / 5);
      }
      const bool up_leads = rng.bernoulli(0.5);
      const std::int64_t max_up = up_leads ? top : other;
      const std::int64_t max_down = up_leads ? other : top;
      const std::size_t up_holder = rng.below(static_cast<std::uint64_t>(nc));
      const std::size_t down_holder = rng.below(static_cast<std::uint64_t>(nc));

      const double up = rng.uniform();
      const bool white = tier == Tier::large && up < m.p_white;
      const bool black = tier == Tier::large && !white && up < m.p_white + m.p_black;
      if (white) record.planted.push_back(MetricKind::white_buzz);
      if (black) record.planted.push_back(MetricKind::black_buzz);
      const auto emotions = emotions_for(tier, white, black, nc, m.p_unknown_emotion, rng);

      const std::size_t first = comments.size();
      for (std::size_t j = 0; j < static_cast<std::size_t>(nc); ++j) {
        Comment c;
        c.id = story.id + "-c" + std::to_string(j + 1);
        c.story_id = story.id;
        c.user_id = zero_padded("u", authors[j], user_width);
        if (is_reply[j]) c.parent_id = comments[first + rng.below(j)].id;
        c.diggs_up = j == up_holder ? max_up : rng.between(0, max_up);
        c.diggs_down = j == down_holder ? max_down : rng.between(0, max_down);
        c.emotion = emotions[j];
        comments.push_back(std::move(c));
      }
    }

    // Text.
    TextSlots title = background_text(rng.between(4, 10), sampler, lexicon_union,
                                      cfg.background_lexicon_rate, rng);
    TextSlots snippet = background_text(rng.between(21, 41), sampler, lexicon_union,
                                        cfg.background_lexicon_rate, rng);
    for (const MetricKind kind : record.planted) {
      const auto it = cfg.lexicons.find(kind);
      if (it == cfg.lexicons.end()) continue;
      if (!rng.bernoulli(cfg.signal_strength)) continue;
      // Four distinct lexicon words: one in the title, three in the snippet.
      std::vector<const std::string*> words;
      for (const auto& w : it->second) words.push_back(&w);
      rng.shuffle(words);
      words.resize(std::min<std::size_t>(words.size(), 4));
      const std::span<const std::string* const> all(words);
      plant(title, all.first(std::min<std::size_t>(1, all.size())), rng);
      plant(snippet, all.subspan(std::min<std::size_t>(1, all.size())), rng);
      record.signal.push_back(kind);
    }
    story.title = join(title, false);
    story.snippet = join(snippet, true);

    stories.push_back(std::move(story));
    truth.push_back(std::move(record));
  }

  return {Corpus::assemble(std::move(stories), std::move(comments)),
          std::move(truth)};
}

void write_truth(const std::vector<TruthRecord>& truth, std::ostream& out) {
  for (const auto& r : truth) {
    nlohmann::ordered_json j;
    j["story_id"] = r.story_id;
    auto planted = nlohmann::json::array();
    for (const MetricKind kind : r.planted) planted.push_back(std::string(to_string(kind)));
    auto signal = nlohmann::json::array();
    for (const MetricKind kind : r.signal) signal.push_back(std::string(to_string(kind)));
    j["planted"] = std::move(planted);
    j["signal"] = std::move(signal);
    out << j.dump() << '\n';
  }
}

}  // namespace virality
