#include "virality/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/locid.h>

#include <algorithm>
#include <charconv>
#include <ostream>

#include "english_lexicon.hpp"
#include "virality/error.hpp"

namespace virality {

std::string_view to_string(PartOfSpeech pos) noexcept {
  switch (pos) {
    case PartOfSpeech::noun: return "noun";
    case PartOfSpeech::verb: return "verb";
    case PartOfSpeech::adjective: return "adjective";
    case PartOfSpeech::adverb: return "adverb";
    case PartOfSpeech::other: return "other";
  }
  return "other";
}

namespace {

const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || n == nullptr)
      throw Error("ICU NFC normalizer unavailable");
    return n;
  }();
  return *instance;
}

icu::UnicodeString normalized(const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(text, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  return out;
}

bool is_word_char(UChar32 c) {
  return (U_GET_GC_MASK(c) & (U_GC_L_MASK | U_GC_N_MASK | U_GC_M_MASK)) != 0;
}

bool is_apostrophe(UChar32 c) { return c == u'\'' || c == 0x2019; }

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;

  icu::UnicodeString s = normalized(icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))));
  s.toLower(icu::Locale::getRoot());
  s = normalized(s);

  std::vector<UChar32> cps;
  cps.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length(); i = s.moveIndex32(i, 1))
    cps.push_back(s.char32At(i));

  icu::UnicodeString current;
  auto flush = [&] {
    if (current.isEmpty()) return;
    std::string utf8;
    current.toUTF8String(utf8);
    tokens.push_back(std::move(utf8));
    current.remove();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const UChar32 c = cps[i];
    if (is_word_char(c)) {
      current.append(c);
    } else if (is_apostrophe(c) && !current.isEmpty() && i + 1 < cps.size() &&
               is_word_char(cps[i + 1])) {
      current.append(static_cast<UChar32>(u'\''));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

// Restores the base form of a verb from its -ing/-ed stem.
std::string verb_base(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1]) &&
      std::string_view("lsz").find(stem[n - 1]) == std::string_view::npos) {
    stem.pop_back();  // stopp -> stop
    return stem;
  }
  const char last = stem[n - 1];
  const bool final_ok = is_consonant(last) && last != 'w' && last != 'x' &&
                        last != 'y';
  const bool cvc = n == 3 && is_consonant(stem[0]) && is_vowel(stem[1]) &&
                   final_ok;
  const bool ccvc = n == 4 && is_consonant(stem[0]) && is_consonant(stem[1]) &&
                    is_vowel(stem[2]) && final_ok;
  const bool needs_e =
      cvc || ccvc || last == 'v' || last == 'c' ||
      (last == 'z' && stem[n - 2] != 'z') ||
      (last == 'e' && stem[n - 2] != 'e') ||
      (n >= 4 && ends_with(stem, "at") && is_consonant(stem[n - 3]));
  if (needs_e) stem += 'e';
  return stem;
}

std::string noun_singular(std::string_view word) {
  const std::size_t n = word.size();
  if (ends_with(word, "ies") && n > 4)
    return std::string(word.substr(0, n - 3)) + "y";
  for (const std::string_view suffix : {"sses", "shes", "ches", "xes", "zzes", "oes"}) {
    if (ends_with(word, suffix)) return std::string(word.substr(0, n - 2));
  }
  return std::string(word.substr(0, n - 1));
}

bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Token tag_token(std::string_view surface) {
  using P = PartOfSpeech;
  Token token{std::string(surface), P::other, std::string(surface)};
  if (surface.empty() || has_digit(surface)) return token;
  if (detail::closed_class_words().contains(surface)) return token;

  const auto& lexicon = detail::exception_lexicon();
  if (const auto it = lexicon.find(surface); it != lexicon.end()) {
    token.pos = it->second.pos;
    token.lemma = std::string(it->second.lemma);
    return token;
  }

  if (ends_with(surface, "'s") && surface.size() > 2) {
    const Token base = tag_token(surface.substr(0, surface.size() - 2));
    token.pos = base.pos == P::other ? P::noun : base.pos;
    token.lemma = base.lemma;
    return token;
  }
  if (surface.find('\'') != std::string_view::npos) return token;

  const std::size_t n = surface.size();
  auto content = [&](P pos, std::string lemma) {
    token.pos = pos;
    token.lemma = std::move(lemma);
    return token;
  };

  if (n > 4 && ends_with(surface, "ly"))
    return content(P::adverb, std::string(surface));
  if (n >= 6 && ends_with(surface, "ing"))
    return content(P::verb, verb_base(std::string(surface.substr(0, n - 3))));
  if (n >= 5 && ends_with(surface, "ied"))
    return content(P::verb, std::string(surface.substr(0, n - 3)) + "y");
  if (n >= 5 && ends_with(surface, "ed"))
    return content(P::verb, verb_base(std::string(surface.substr(0, n - 2))));
  if (n >= 6) {
    for (const std::string_view suffix :
         {"ous", "ful", "ive", "able", "ible", "less", "ical", "ish"}) {
      if (ends_with(surface, suffix))
        return content(P::adjective, std::string(surface));
    }
  }
  if (n >= 4 && surface.back() == 's' && !ends_with(surface, "ss") &&
      !ends_with(surface, "us") && !ends_with(surface, "is"))
    return content(P::noun, noun_singular(surface));
  return content(P::noun, std::string(surface));
}

std::vector<Token> tag_and_lemmatize(std::span<const std::string> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(tag_token(t));
  return out;
}

std::vector<std::string> story_terms(const Story& story,
                                     const FeatureOptions& options) {
  std::vector<std::string> terms;
  auto add_field = [&](const std::string& text, std::string_view prefix) {
    const auto tokens = tokenize(text);
    for (const Token& t : tag_and_lemmatize(tokens)) {
      const bool content = is_content_word(t.pos);
      if (options.content_words_only && !content) continue;
      std::string term = options.field_prefix ? std::string(prefix) : std::string();
      term += content ? t.lemma : t.surface;
      terms.push_back(std::move(term));
    }
  };
  add_field(story.title, "t:");
  add_field(story.snippet, "s:");
  return terms;
}

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  Vocabulary v;
  v.terms_ = std::move(terms);
  v.index_.reserve(v.terms_.size());
  for (std::size_t i = 0; i < v.terms_.size(); ++i)
    v.index_.emplace(v.terms_[i], static_cast<std::uint32_t>(i));
  return v;
}

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Vocabulary::write_tsv(std::ostream& out) const {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    out << i << '\t' << terms_[i] << '\n';
}

Vocabulary build_vocabulary(const Corpus& corpus,
                            std::span<const std::string> train_ids,
                            const FeatureOptions& options) {
  std::vector<std::string> terms;
  for (const auto& id : train_ids) {
    const Story* story = corpus.find_story(id);
    if (story == nullptr)
      throw LookupError("unknown story id '" + id + "'");
    auto story_bag = story_terms(*story, options);
    std::move(story_bag.begin(), story_bag.end(), std::back_inserter(terms));
  }
  return Vocabulary::from_terms(std::move(terms));
}

FeatureVector vectorize_terms(std::span<const std::string> terms,
                              const Vocabulary& vocab, Weighting weighting) {
  std::vector<std::uint32_t> indices;
  indices.reserve(terms.size());
  for (const auto& term : terms) {
    if (const auto index = vocab.index_of(term)) indices.push_back(*index);
  }
  std::sort(indices.begin(), indices.end());
  FeatureVector x;
  for (std::size_t i = 0; i < indices.size();) {
    std::size_t j = i;
    while (j < indices.size() && indices[j] == indices[i]) ++j;
    const double value =
        weighting == Weighting::presence ? 1.0 : static_cast<double>(j - i);
    x.entries.push_back({indices[i], value});
    i = j;
  }
  return x;
}

FeatureVector vectorize(const Story& story, const Vocabulary& vocab,
                        const FeatureOptions& options) {
  return vectorize_terms(story_terms(story, options), vocab, options.weighting);
}

void write_sparse_line(std::ostream& out, int label, const FeatureVector& x) {
  out << (label > 0 ? "1" : "-1");
  char buffer[64];
  for (const auto& f : x.entries) {
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, f.value);
    out << ' ' << (f.index + 1) << ':' << std::string_view(buffer, end - buffer);
  }
  out << '\n';
}

}  // namespace virality
