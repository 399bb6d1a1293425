#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "virality/corpus.hpp"

namespace virality {

enum class PartOfSpeech { noun, verb, adjective, adverb, other };

std::string_view to_string(PartOfSpeech pos) noexcept;

inline bool is_content_word(PartOfSpeech pos) noexcept {
  return pos != PartOfSpeech::other;
}

struct Token {
  std::string surface;
  PartOfSpeech pos = PartOfSpeech::other;
  std::string lemma;  // equals surface for non-content words

  bool operator==(const Token&) const = default;
};

// Lowercased word tokens of NFC-normalized UTF-8 text. A token is a maximal
// run of letters, digits and combining marks; an apostrophe (' or U+2019)
// stays inside a token only between two such characters and is emitted as
// '. Everything else separates tokens.
std::vector<std::string> tokenize(std::string_view text);

// Closed-class stop list, exception lexicon, then suffix heuristics.
Token tag_token(std::string_view surface);
std::vector<Token> tag_and_lemmatize(std::span<const std::string> tokens);

enum class Weighting { presence, count };

struct FeatureOptions {
  Weighting weighting = Weighting::presence;
  bool field_prefix = false;        // "t:" / "s:" prefixed terms per field
  bool content_words_only = false;  // drop closed-class words
};

// Terms of title + snippet: lemma for content words, surface otherwise.
// Duplicates are kept (count weighting needs them).
std::vector<std::string> story_terms(const Story& story,
                                     const FeatureOptions& options = {});

// Dense 0-based term index, lexicographic by term. Frozen after build.
class Vocabulary {
 public:
  Vocabulary() = default;

  template <class TermLists>
  static Vocabulary from_term_lists(const TermLists& lists) {
    std::vector<std::string> terms;
    for (const auto& list : lists)
      for (const auto& term : list) terms.push_back(term);
    return from_terms(std::move(terms));
  }
  static Vocabulary from_terms(std::vector<std::string> terms);

  std::optional<std::uint32_t> index_of(std::string_view term) const;
  const std::string& term(std::uint32_t index) const { return terms_.at(index); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }

  // vocab.tsv: "index<TAB>term" per line.
  void write_tsv(std::ostream& out) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Every distinct term of the given training stories; no cutoff.
Vocabulary build_vocabulary(const Corpus& corpus,
                            std::span<const std::string> train_ids,
                            const FeatureOptions& options = {});

struct Feature {
  std::uint32_t index = 0;
  double value = 0.0;

  bool operator==(const Feature&) const = default;
};

// Sparse vector; indices strictly increasing.
struct FeatureVector {
  std::vector<Feature> entries;

  double squared_norm() const noexcept {
    double sum = 0.0;
    for (const auto& f : entries) sum += f.value * f.value;
    return sum;
  }
  bool operator==(const FeatureVector&) const = default;
};

FeatureVector vectorize_terms(std::span<const std::string> terms,
                              const Vocabulary& vocab,
                              Weighting weighting = Weighting::presence);
FeatureVector vectorize(const Story& story, const Vocabulary& vocab,
                        const FeatureOptions& options = {});

// "label index:value ..." with 1-based indices.
void write_sparse_line(std::ostream& out, int label, const FeatureVector& x);

}  // namespace virality
