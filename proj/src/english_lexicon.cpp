#include "english_lexicon.hpp"

namespace virality::detail {

const std::unordered_set<std::string_view>& closed_class_words() {
  static const std::unordered_set<std::string_view> words = {
      // determiners and quantifiers
      "a", "an", "the", "this", "that", "these", "those", "some", "any", "no",
      "every", "each", "either", "neither", "all", "both", "few", "many",
      "much", "more", "most", "several", "such", "other", "another", "own",
      // pronouns
      "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "her", "hers",
      "herself", "it", "its", "itself", "we", "us", "our", "ours",
      "ourselves", "they", "them", "their", "theirs", "themselves", "one",
      "someone", "somebody", "something", "anyone", "anybody", "anything",
      "everyone", "everybody", "everything", "nobody", "nothing", "none",
      "who", "whom", "whose", "which", "what", "whatever", "whoever",
      // prepositions
      "about", "above", "across", "after", "against", "along", "amid",
      "among", "around", "as", "at", "before", "behind", "below", "beneath",
      "beside", "besides", "between", "beyond", "by", "despite", "down",
      "during", "except", "for", "from", "in", "inside", "into", "like",
      "near", "of", "off", "on", "onto", "out", "outside", "over", "past",
      "per", "since", "through", "throughout", "till", "to", "toward",
      "towards", "under", "underneath", "until", "unto", "up", "upon", "via",
      "with", "within", "without", "versus", "vs",
      // conjunctions and wh-adverbs
      "and", "or", "but", "nor", "so", "yet", "if", "then", "than", "because",
      "although", "though", "while", "whereas", "unless", "whether", "when",
      "where", "why", "how", "once", "lest",
      // auxiliaries and modals
      "be", "am", "is", "are", "was", "were", "been", "being", "have", "has",
      "had", "having", "do", "does", "did", "doing", "can", "could", "may",
      "might", "must", "shall", "should", "will", "would", "ought",
      // particles and misc
      "not", "only", "just", "there", "here", "too", "very", "also", "yes",
      "oh", "ok", "okay",
      // contractions
      "don't", "doesn't", "didn't", "can't", "couldn't", "won't", "wouldn't",
      "shouldn't", "isn't", "aren't", "wasn't", "weren't", "haven't",
      "hasn't", "hadn't", "mustn't", "i'm", "i've", "i'll", "i'd", "you're",
      "you've", "you'll", "you'd", "he's", "he'll", "he'd", "she's",
      "she'll", "she'd", "it's", "it'll", "we're", "we've", "we'll", "we'd",
      "they're", "they've", "they'll", "they'd", "that's", "there's",
      "what's", "who's", "let's", "here's", "where's", "how's",
  };
  return words;
}

const std::unordered_map<std::string_view, LexiconEntry>& exception_lexicon() {
  using P = PartOfSpeech;
  static const std::unordered_map<std::string_view, LexiconEntry> table = {
      // irregular verbs: past tense and participles
      {"arose", {P::verb, "arise"}}, {"arisen", {P::verb, "arise"}},
      {"ate", {P::verb, "eat"}}, {"eaten", {P::verb, "eat"}},
      {"awoke", {P::verb, "awake"}}, {"became", {P::verb, "become"}},
      {"began", {P::verb, "begin"}}, {"begun", {P::verb, "begin"}},
      {"bent", {P::verb, "bend"}}, {"bet", {P::verb, "bet"}},
      {"bit", {P::verb, "bite"}}, {"bitten", {P::verb, "bite"}},
      {"bled", {P::verb, "bleed"}}, {"blew", {P::verb, "blow"}},
      {"blown", {P::verb, "blow"}}, {"broke", {P::verb, "break"}},
      {"broken", {P::verb, "break"}}, {"brought", {P::verb, "bring"}},
      {"built", {P::verb, "build"}}, {"burnt", {P::verb, "burn"}},
      {"bought", {P::verb, "buy"}}, {"caught", {P::verb, "catch"}},
      {"chose", {P::verb, "choose"}}, {"chosen", {P::verb, "choose"}},
      {"came", {P::verb, "come"}}, {"crept", {P::verb, "creep"}},
      {"dealt", {P::verb, "deal"}}, {"dug", {P::verb, "dig"}},
      {"done", {P::verb, "do"}}, {"drew", {P::verb, "draw"}},
      {"drawn", {P::verb, "draw"}}, {"drank", {P::verb, "drink"}},
      {"drunk", {P::verb, "drink"}}, {"drove", {P::verb, "drive"}},
      {"driven", {P::verb, "drive"}}, {"fell", {P::verb, "fall"}},
      {"fallen", {P::verb, "fall"}}, {"fed", {P::verb, "feed"}},
      {"felt", {P::verb, "feel"}}, {"fought", {P::verb, "fight"}},
      {"found", {P::verb, "find"}}, {"fled", {P::verb, "flee"}},
      {"flew", {P::verb, "fly"}}, {"flown", {P::verb, "fly"}},
      {"forbade", {P::verb, "forbid"}}, {"forgot", {P::verb, "forget"}},
      {"forgotten", {P::verb, "forget"}}, {"forgave", {P::verb, "forgive"}},
      {"forgiven", {P::verb, "forgive"}}, {"froze", {P::verb, "freeze"}},
      {"frozen", {P::verb, "freeze"}}, {"got", {P::verb, "get"}},
      {"gotten", {P::verb, "get"}}, {"gave", {P::verb, "give"}},
      {"given", {P::verb, "give"}}, {"went", {P::verb, "go"}},
      {"gone", {P::verb, "go"}}, {"grew", {P::verb, "grow"}},
      {"grown", {P::verb, "grow"}}, {"hung", {P::verb, "hang"}},
      {"heard", {P::verb, "hear"}}, {"hid", {P::verb, "hide"}},
      {"hidden", {P::verb, "hide"}}, {"held", {P::verb, "hold"}},
      {"hurt", {P::verb, "hurt"}}, {"kept", {P::verb, "keep"}},
      {"knew", {P::verb, "know"}}, {"known", {P::verb, "know"}},
      {"laid", {P::verb, "lay"}}, {"led", {P::verb, "lead"}},
      {"left", {P::verb, "leave"}}, {"lent", {P::verb, "lend"}},
      {"lay", {P::verb, "lie"}}, {"lain", {P::verb, "lie"}},
      {"lit", {P::verb, "light"}}, {"lost", {P::verb, "lose"}},
      {"made", {P::verb, "make"}}, {"meant", {P::verb, "mean"}},
      {"met", {P::verb, "meet"}}, {"paid", {P::verb, "pay"}},
      {"quit", {P::verb, "quit"}}, {"ran", {P::verb, "run"}},
      {"rang", {P::verb, "ring"}}, {"rung", {P::verb, "ring"}},
      {"rode", {P::verb, "ride"}}, {"ridden", {P::verb, "ride"}},
      {"rose", {P::verb, "rise"}}, {"risen", {P::verb, "rise"}},
      {"said", {P::verb, "say"}}, {"saw", {P::verb, "see"}},
      {"seen", {P::verb, "see"}}, {"sought", {P::verb, "seek"}},
      {"sold", {P::verb, "sell"}}, {"sent", {P::verb, "send"}},
      {"shook", {P::verb, "shake"}}, {"shaken", {P::verb, "shake"}},
      {"shone", {P::verb, "shine"}}, {"shot", {P::verb, "shoot"}},
      {"showed", {P::verb, "show"}}, {"shown", {P::verb, "show"}},
      {"shrank", {P::verb, "shrink"}}, {"shut", {P::verb, "shut"}},
      {"sang", {P::verb, "sing"}}, {"sung", {P::verb, "sing"}},
      {"sank", {P::verb, "sink"}}, {"sunk", {P::verb, "sink"}},
      {"sat", {P::verb, "sit"}}, {"slept", {P::verb, "sleep"}},
      {"slid", {P::verb, "slide"}}, {"spoke", {P::verb, "speak"}},
      {"spoken", {P::verb, "speak"}}, {"spent", {P::verb, "spend"}},
      {"spun", {P::verb, "spin"}}, {"spread", {P::verb, "spread"}},
      {"sprang", {P::verb, "spring"}}, {"stood", {P::verb, "stand"}},
      {"stole", {P::verb, "steal"}}, {"stolen", {P::verb, "steal"}},
      {"stuck", {P::verb, "stick"}}, {"stung", {P::verb, "sting"}},
      {"struck", {P::verb, "strike"}}, {"swore", {P::verb, "swear"}},
      {"sworn", {P::verb, "swear"}}, {"swept", {P::verb, "sweep"}},
      {"swam", {P::verb, "swim"}}, {"swum", {P::verb, "swim"}},
      {"swung", {P::verb, "swing"}}, {"took", {P::verb, "take"}},
      {"taken", {P::verb, "take"}}, {"taught", {P::verb, "teach"}},
      {"tore", {P::verb, "tear"}}, {"torn", {P::verb, "tear"}},
      {"told", {P::verb, "tell"}}, {"thought", {P::verb, "think"}},
      {"threw", {P::verb, "throw"}}, {"thrown", {P::verb, "throw"}},
      {"understood", {P::verb, "understand"}}, {"woke", {P::verb, "wake"}},
      {"woken", {P::verb, "wake"}}, {"wore", {P::verb, "wear"}},
      {"worn", {P::verb, "wear"}}, {"won", {P::verb, "win"}},
      {"wound", {P::verb, "wind"}}, {"wrote", {P::verb, "write"}},
      {"written", {P::verb, "write"}},
      {"using", {P::verb, "use"}}, {"used", {P::verb, "use"}},
      {"going", {P::verb, "go"}}, {"goes", {P::verb, "go"}},
      {"created", {P::verb, "create"}}, {"creating", {P::verb, "create"}},
      {"changed", {P::verb, "change"}}, {"changing", {P::verb, "change"}},
      // irregular plurals
      {"men", {P::noun, "man"}}, {"women", {P::noun, "woman"}},
      {"children", {P::noun, "child"}}, {"people", {P::noun, "person"}},
      {"feet", {P::noun, "foot"}}, {"teeth", {P::noun, "tooth"}},
      {"geese", {P::noun, "goose"}}, {"mice", {P::noun, "mouse"}},
      {"lice", {P::noun, "louse"}}, {"oxen", {P::noun, "ox"}},
      {"wolves", {P::noun, "wolf"}}, {"knives", {P::noun, "knife"}},
      {"wives", {P::noun, "wife"}}, {"lives", {P::noun, "life"}},
      {"leaves", {P::noun, "leaf"}}, {"halves", {P::noun, "half"}},
      {"shelves", {P::noun, "shelf"}}, {"thieves", {P::noun, "thief"}},
      {"loaves", {P::noun, "loaf"}}, {"calves", {P::noun, "calf"}},
      {"data", {P::noun, "datum"}}, {"criteria", {P::noun, "criterion"}},
      {"phenomena", {P::noun, "phenomenon"}}, {"media", {P::noun, "medium"}},
      {"analyses", {P::noun, "analysis"}}, {"crises", {P::noun, "crisis"}},
      {"theses", {P::noun, "thesis"}}, {"indices", {P::noun, "index"}},
      {"shoes", {P::noun, "shoe"}}, {"toes", {P::noun, "toe"}},
      {"movies", {P::noun, "movie"}}, {"cookies", {P::noun, "cookie"}},
      {"zombies", {P::noun, "zombie"}}, {"hippies", {P::noun, "hippie"}},
      {"lies", {P::noun, "lie"}}, {"ties", {P::noun, "tie"}},
      {"dies", {P::verb, "die"}},
      // nouns ending in s that are not plurals
      {"news", {P::noun, "news"}}, {"series", {P::noun, "series"}},
      {"species", {P::noun, "species"}}, {"physics", {P::noun, "physics"}},
      {"economics", {P::noun, "economics"}}, {"politics", {P::noun, "politics"}},
      {"mathematics", {P::noun, "mathematics"}}, {"ethics", {P::noun, "ethics"}},
      {"bus", {P::noun, "bus"}}, {"gas", {P::noun, "gas"}},
      {"lens", {P::noun, "lens"}}, {"canvas", {P::noun, "canvas"}},
      {"christmas", {P::noun, "christmas"}}, {"texas", {P::noun, "texas"}},
      {"vegas", {P::noun, "vegas"}}, {"windows", {P::noun, "windows"}},
      {"ios", {P::noun, "ios"}}, {"mars", {P::noun, "mars"}},
      {"venus", {P::noun, "venus"}}, {"atlas", {P::noun, "atlas"}},
      {"alias", {P::noun, "alias"}}, {"chaos", {P::noun, "chaos"}},
      // irregular comparison
      {"better", {P::adjective, "good"}}, {"best", {P::adjective, "good"}},
      {"worse", {P::adjective, "bad"}}, {"worst", {P::adjective, "bad"}},
      {"less", {P::adjective, "little"}}, {"least", {P::adjective, "little"}},
      {"further", {P::adverb, "far"}}, {"farther", {P::adverb, "far"}},
      {"bigger", {P::adjective, "big"}}, {"biggest", {P::adjective, "big"}},
      {"larger", {P::adjective, "large"}}, {"largest", {P::adjective, "large"}},
      {"smaller", {P::adjective, "small"}}, {"smallest", {P::adjective, "small"}},
      {"newer", {P::adjective, "new"}}, {"newest", {P::adjective, "new"}},
      {"older", {P::adjective, "old"}}, {"oldest", {P::adjective, "old"}},
      {"faster", {P::adjective, "fast"}}, {"fastest", {P::adjective, "fast"}},
      // adverbs without -ly
      {"always", {P::adverb, "always"}}, {"never", {P::adverb, "never"}},
      {"often", {P::adverb, "often"}}, {"sometimes", {P::adverb, "sometimes"}},
      {"soon", {P::adverb, "soon"}}, {"now", {P::adverb, "now"}},
      {"still", {P::adverb, "still"}}, {"already", {P::adverb, "already"}},
      {"again", {P::adverb, "again"}}, {"almost", {P::adverb, "almost"}},
      {"quite", {P::adverb, "quite"}}, {"ever", {P::adverb, "ever"}},
      {"perhaps", {P::adverb, "perhaps"}}, {"maybe", {P::adverb, "maybe"}},
      {"instead", {P::adverb, "instead"}}, {"together", {P::adverb, "together"}},
      {"away", {P::adverb, "away"}}, {"later", {P::adverb, "later"}},
      {"today", {P::adverb, "today"}}, {"tomorrow", {P::adverb, "tomorrow"}},
      {"yesterday", {P::adverb, "yesterday"}}, {"online", {P::adverb, "online"}},
      {"ago", {P::adverb, "ago"}}, {"indeed", {P::adverb, "indeed"}},
      {"well", {P::adverb, "well"}}, {"even", {P::adverb, "even"}},
      // -ly words that are not adverbs
      {"family", {P::noun, "family"}}, {"reply", {P::verb, "reply"}},
      {"supply", {P::noun, "supply"}}, {"apply", {P::verb, "apply"}},
      {"rely", {P::verb, "rely"}}, {"ally", {P::noun, "ally"}},
      {"rally", {P::noun, "rally"}}, {"italy", {P::noun, "italy"}},
      {"july", {P::noun, "july"}}, {"fly", {P::verb, "fly"}},
      {"ugly", {P::adjective, "ugly"}}, {"silly", {P::adjective, "silly"}},
      {"holy", {P::adjective, "holy"}}, {"lonely", {P::adjective, "lonely"}},
      {"friendly", {P::adjective, "friendly"}}, {"lovely", {P::adjective, "lovely"}},
      {"likely", {P::adjective, "likely"}}, {"early", {P::adjective, "early"}},
      {"daily", {P::adjective, "daily"}}, {"weekly", {P::adjective, "weekly"}},
      {"monthly", {P::adjective, "monthly"}}, {"elderly", {P::adjective, "elderly"}},
      {"bully", {P::noun, "bully"}}, {"belly", {P::noun, "belly"}},
      {"jelly", {P::noun, "jelly"}}, {"assembly", {P::noun, "assembly"}},
      // -ing and -ed words that are not inflected verbs
      {"thing", {P::noun, "thing"}}, {"things", {P::noun, "thing"}},
      {"king", {P::noun, "king"}}, {"kings", {P::noun, "king"}},
      {"ring", {P::noun, "ring"}}, {"spring", {P::noun, "spring"}},
      {"string", {P::noun, "string"}}, {"wing", {P::noun, "wing"}},
      {"morning", {P::noun, "morning"}}, {"evening", {P::noun, "evening"}},
      {"building", {P::noun, "building"}}, {"ceiling", {P::noun, "ceiling"}},
      {"wedding", {P::noun, "wedding"}}, {"during", {P::other, "during"}},
      {"bring", {P::verb, "bring"}}, {"sing", {P::verb, "sing"}},
      {"swing", {P::verb, "swing"}}, {"sting", {P::verb, "sting"}},
      {"anything", {P::other, "anything"}}, {"nothing", {P::other, "nothing"}},
      {"speed", {P::noun, "speed"}}, {"seed", {P::noun, "seed"}},
      {"breed", {P::noun, "breed"}}, {"greed", {P::noun, "greed"}},
      {"need", {P::verb, "need"}}, {"feed", {P::noun, "feed"}},
      {"hundred", {P::noun, "hundred"}}, {"sacred", {P::adjective, "sacred"}},
      {"wicked", {P::adjective, "wicked"}}, {"naked", {P::adjective, "naked"}},
      {"bed", {P::noun, "bed"}}, {"red", {P::adjective, "red"}},
      {"shed", {P::noun, "shed"}}, {"bred", {P::verb, "breed"}},
  };
  return table;
}

}  // namespace virality::detail
