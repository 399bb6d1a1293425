#pragma once

#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "virality/text.hpp"

namespace virality::detail {

struct LexiconEntry {
  PartOfSpeech pos;
  std::string_view lemma;
};

// Determiners, pronouns, prepositions, conjunctions, auxiliaries, modals,
// particles and contractions. Tagged `other`.
const std::unordered_set<std::string_view>& closed_class_words();

// Irregular inflections and words the suffix rules would get wrong.
const std::unordered_map<std::string_view, LexiconEntry>& exception_lexicon();

}  // namespace virality::detail
