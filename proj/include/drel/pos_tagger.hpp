// Coarse part-of-speech tagging. The built-in tagger is a closed-class
// lexicon plus suffix heuristics; it exists to gate connective matches and
// to detect verb-bearing arguments, not to be a real tagger. Swap in a
// better one through the PosTagger interface.
#pragma once

#include <string_view>
#include <unordered_set>
#include <vector>

#include "drel/text.hpp"

namespace drel {

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  // Assigns a tag to every non-PUNCT token; may use sentence context.
  virtual void tag(std::vector<Token>& tokens) const = 0;
};

namespace detail {

using WordSet = std::unordered_set<std::string_view>;

inline const WordSet& pron_words() {
  static const WordSet s = {
      "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
      "them", "my", "your", "his", "its", "our", "their", "mine", "yours",
      "hers", "ours", "theirs", "myself", "yourself", "himself", "herself",
      "itself", "ourselves", "themselves", "who", "whom", "whose", "what",
      "someone", "something", "anyone", "anything", "everyone", "everything",
      "nobody", "nothing", "somebody", "anybody", "everybody"};
  return s;
}

inline const WordSet& det_words() {
  static const WordSet s = {
      "a", "an", "the", "this", "that", "these", "those", "some", "any",
      "no", "every", "each", "either", "neither", "which", "much", "many",
      "few", "all", "both", "another", "such"};
  return s;
}

inline const WordSet& conj_words() {
  static const WordSet s = {"and", "or", "but", "nor", "yet", "so", "plus"};
  return s;
}

inline const WordSet& sconj_words() {
  static const WordSet s = {
      "because", "although", "though", "if", "unless", "until", "while",
      "whereas", "since", "whether", "whenever", "once", "cause", "cuz"};
  return s;
}

inline const WordSet& adv_words() {
  static const WordSet s = {
      "very", "really", "too", "quite", "pretty", "far", "here", "there",
      "now", "then", "never", "always", "often", "sometimes", "usually",
      "probably", "maybe", "not", "also", "just", "still", "already",
      "almost", "again", "soon", "later", "earlier", "previously", "however",
      "thus", "instead", "indeed", "moreover", "furthermore", "consequently",
      "therefore", "when", "where", "why", "how", "yeah", "yes", "okay",
      "ok", "well", "even", "away", "back", "together", "anyway", "though"};
  return s;
}

inline const WordSet& adj_words() {
  static const WordSet s = {
      "good", "great", "bad", "nice", "best", "better", "worst", "worse",
      "favorite", "awesome", "cool", "fun", "new", "old", "big", "small",
      "little", "long", "short", "high", "low", "hot", "cold", "warm",
      "happy", "sad", "funny", "hard", "easy", "red", "blue", "green",
      "black", "white", "young", "right", "wrong", "sure", "fine", "crazy",
      "weird", "amazing", "terrible", "horrible", "awful", "perfect",
      "beautiful", "interesting", "boring", "excited", "huge", "real",
      "different", "same", "last", "next", "first", "second", "fast",
      "slow", "free", "full", "late", "early", "cheap", "expensive"};
  return s;
}

// Base forms plus common irregular inflections; regular -ed/-ing/-s forms
// come from the suffix rules below.
inline const WordSet& verb_words() {
  static const WordSet s = {
      "be", "is", "are", "was", "were", "am", "been", "being", "have", "has",
      "had", "having", "do", "does", "did", "done", "doing", "can", "could",
      "will", "would", "shall", "should", "may", "might", "must", "go",
      "goes", "went", "gone", "going", "get", "gets", "got", "gotten",
      "make", "made", "know", "knew", "known", "think", "thought", "see",
      "saw", "seen", "come", "came", "take", "took", "taken", "give",
      "gave", "given", "find", "found", "tell", "told", "say", "says",
      "said", "buy", "bought", "bring", "brought", "hear", "heard", "feel",
      "felt", "keep", "kept", "let", "lets", "begin", "began", "begun",
      "seem", "mean", "meant", "meet", "met", "sit", "sat", "stand",
      "stood", "lose", "lost", "pay", "paid", "run", "ran", "read", "eat",
      "ate", "eaten", "drink", "drank", "drunk", "win", "won", "write",
      "wrote", "written", "sing", "sang", "sung", "speak", "spoke",
      "spoken", "leave", "left", "put", "send", "sent", "spend", "spent",
      "grow", "grew", "grown", "fall", "fell", "fallen", "catch", "caught",
      "teach", "taught", "sleep", "slept", "wear", "wore", "worn", "drive",
      "drove", "driven", "ride", "rode", "ridden", "fly", "flew", "flown",
      "swim", "swam", "forget", "forgot", "forgotten", "understand",
      "understood", "like", "love", "hate", "want", "need", "try", "tries",
      "watch", "play", "listen", "live", "believe", "happen", "happens",
      "happened", "talk", "turn", "start", "show", "look", "looks", "call",
      "work", "works", "ask", "guess", "agree", "remember", "enjoy",
      "prefer", "recommend", "sound", "sounds", "wait", "stay", "hope",
      "wish", "visit", "travel", "dance", "cook", "move", "help", "miss",
      "thank", "thanks", "bet", "care", "hang", "hung", "cost", "hurt",
      "hit", "cut", "quit", "beat", "became", "become", "chose", "choose",
      "chosen", "held", "hold", "built", "build", "sold", "sell", "broke",
      "break", "broken", "threw", "throw", "thrown", "wanna", "gonna",
      "gotta", "lemme", "dunno"};
  return s;
}

inline const WordSet& num_words() {
  static const WordSet s = {
      "zero", "one", "two", "three", "four", "five", "six", "seven",
      "eight", "nine", "ten", "eleven", "twelve", "twenty", "thirty",
      "fifty", "hundred", "thousand", "million", "billion", "dozen",
      "half", "couple"};
  return s;
}

inline bool looks_numeric(std::string_view w) {
  bool digit = false;
  for (char c : w) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '$' && c != '.' && c != ',' && c != '%' && c != '-' && c != ':') {
      return false;
    }
  }
  return digit;
}

inline bool ends_with(std::string_view w, std::string_view suf) {
  return w.size() >= suf.size() && w.substr(w.size() - suf.size()) == suf;
}

}  // namespace detail

// Lexicon lookup in closed-class order, then suffix heuristics, then NOUN.
// Context rules: "so" is ADV when it modifies a following ADJ/ADV (degree
// use) and CONJ otherwise.
class RuleTagger final : public PosTagger {
 public:
  void tag(std::vector<Token>& tokens) const override {
    using namespace detail;
    for (Token& t : tokens) {
      if (t.pos == Pos::Punct) continue;
      t.pos = base_tag(t.surface);
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].surface != "so" || tokens[i].pos == Pos::Punct) continue;
      tokens[i].pos = Pos::Conj;
      for (std::size_t j = i + 1; j < tokens.size(); ++j) {
        if (tokens[j].pos == Pos::Punct) break;
        if (tokens[j].pos == Pos::Adj || tokens[j].pos == Pos::Adv) tokens[i].pos = Pos::Adv;
        break;
      }
    }
  }

  static Pos base_tag(std::string_view w) {
    using namespace detail;
    if (looks_numeric(w) || num_words().count(w)) return Pos::Num;
    // Verb-bearing contractions: it's, don't, i'll, we're, you've, i'm, he'd.
    for (std::string_view suf : {"n't", "'s", "'re", "'ll", "'ve", "'m", "'d"}) {
      if (w.size() > suf.size() && ends_with(w, suf)) return Pos::Verb;
    }
    if (verb_words().count(w)) return Pos::Verb;
    if (pron_words().count(w)) return Pos::Pron;
    if (det_words().count(w)) return Pos::Det;
    if (sconj_words().count(w)) return Pos::Sconj;
    if (conj_words().count(w)) return Pos::Conj;
    if (adv_words().count(w)) return Pos::Adv;
    if (adj_words().count(w)) return Pos::Adj;
    if (w.size() > 3 && ends_with(w, "ed")) return Pos::Verb;
    if (w.size() > 4 && ends_with(w, "ing")) return Pos::Verb;
    if (w.size() > 2 && ends_with(w, "ly")) return Pos::Adv;
    for (std::string_view suf : {"ful", "less", "ous", "ish", "ive", "able", "ible"}) {
      if (w.size() > suf.size() + 1 && ends_with(w, suf)) return Pos::Adj;
    }
    // 3sg present of a known base verb: likes, plays, watches.
    if (w.size() > 2 && w.back() == 's') {
      if (verb_words().count(w.substr(0, w.size() - 1))) return Pos::Verb;
      if (w.size() > 3 && ends_with(w, "es") && verb_words().count(w.substr(0, w.size() - 2)))
        return Pos::Verb;
    }
    if (w == "to" || w == "of" || w == "in" || w == "on" || w == "at" || w == "for" ||
        w == "with" || w == "from" || w == "by" || w == "about" || w == "as" ||
        w == "into" || w == "over" || w == "under") {
      return Pos::Other;
    }
    return Pos::Noun;
  }
};

inline const PosTagger& builtin_tagger() {
  static const RuleTagger tagger;
  return tagger;
}

// Tokenize then tag.
inline std::vector<Token> tokenize(std::string_view text, const PosTagger& tagger) {
  std::vector<Token> tokens = tokenize(text);
  tagger.tag(tokens);
  return tokens;
}

// Split a turn into sentences and tokenize each; token spans share the
// turn-text origin with the sentence spans.
inline std::vector<Sentence> segment(std::string_view turn_text, const PosTagger& tagger) {
  std::vector<Sentence> sentences;
  for (CharSpan span : split_sentences(turn_text)) {
    Sentence s;
    s.span = span;
    s.tokens = tokenize(turn_text.substr(span.begin, span.length()), tagger);
    for (Token& t : s.tokens) {
      t.span.begin += span.begin;
      t.span.end += span.begin;
    }
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace drel
