// The five dialogue feature families and their default providers. The
// defaults are deterministic rule/lexicon classifiers standing in for the
// external NLU services a deployed dialogue system would use; every family
// sits behind the same callable interface so a stronger model can replace
// any of them without touching vectorization.
#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "drel/errors.hpp"
#include "drel/pos_tagger.hpp"
#include "drel/schema_types.hpp"
#include "drel/text.hpp"

namespace drel {

enum class Family { DialogueAct, Sentiment, Intent, Topic, EntityType };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::DialogueAct, Family::Sentiment, Family::Intent, Family::Topic, Family::EntityType};

inline constexpr std::array<std::string_view, 5> kFamilyNames = {
    "dialogue_act", "sentiment", "intent", "topic", "entity_type"};

inline std::string_view family_name(Family f) {
  return kFamilyNames[static_cast<std::size_t>(f)];
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return kAllFamilies[i];
  }
  return std::nullopt;
}

// entity_type is set-valued; the other four families emit exactly one label
// per utterance.
inline bool family_is_single_valued(Family f) { return f != Family::EntityType; }

// ---------------------------------------------------------------------------
// Closed label sets

inline const std::vector<std::string>& dialogue_act_labels() {
  static const std::vector<std::string> labels = {
      "Accept",    "Bye",     "Clarify",     "Continuer", "Emotion",
      "Emphasis",  "Greet",   "No Answer",   "Other",     "Reject",
      "Statement", "System",  "Wh-Question", "Yes Answer", "Yes/No Question"};
  return labels;
}

inline const std::vector<std::string>& sentiment_labels() {
  static const std::vector<std::string> labels = {"very negative", "negative", "neutral",
                                                  "positive", "very positive"};
  return labels;
}

// 33 discrete intents. The request_* triple at the top and the inform
// fallback drive the default rules; the remainder round out the closed
// ontology and are reachable by the secondary rules or custom providers.
inline const std::vector<std::string>& intent_labels() {
  static const std::vector<std::string> labels = {
      "request_opinion",        "request_service",     "request_change_topic",
      "request_information",    "request_clarification", "request_confirmation",
      "request_recommendation", "request_repeat",      "request_joke",
      "request_weather",        "request_news",        "request_music",
      "request_game",           "request_time",        "request_stop",
      "inform",                 "inform_opinion",      "inform_preference",
      "inform_experience",      "inform_fact",         "greeting",
      "farewell",               "acknowledge",         "agree",
      "disagree",               "thank",               "apologize",
      "compliment",             "complain",            "clarify",
      "confirm",                "smalltalk",           "other"};
  return labels;
}

inline const std::vector<std::string>& topic_labels() {
  static const std::vector<std::string> labels = {
      "politics", "fashion",  "sports",      "science and technology",
      "music",    "movies",   "books",       "food",
      "travel",   "weather",  "family",      "work",
      "school",   "video games", "health",   "pets",
      "cars",     "celebrities", "history",  "hobbies",
      "news",     "other"};
  return labels;
}

inline const std::vector<std::string>& entity_type_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    v.reserve(kSchemaEntityTypes.size());
    for (std::string_view t : kSchemaEntityTypes) v.emplace_back(t);
    return v;
  }();
  return labels;
}

// ---------------------------------------------------------------------------
// Default provider lexicons

namespace provider_detail {

using WordSet = std::unordered_set<std::string_view>;

inline std::vector<std::string> surfaces(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text)) {
    if (t.pos != Pos::Punct) out.push_back(t.surface);
  }
  return out;
}

inline bool contains_phrase(std::string_view text, std::string_view phrase) {
  return text.find(phrase) != std::string_view::npos;
}

inline const WordSet& greet_words() {
  static const WordSet s = {"hello", "hi", "hey", "howdy", "greetings", "yo"};
  return s;
}

inline const WordSet& bye_words() {
  static const WordSet s = {"bye", "goodbye", "farewell", "cya"};
  return s;
}

inline const WordSet& wh_words() {
  static const WordSet s = {"what",  "who",   "when",  "where",  "why",    "how",
                            "which", "whose", "whom",  "what's", "who's",  "where's",
                            "when's", "how's", "why's"};
  return s;
}

inline const WordSet& aux_words() {
  static const WordSet s = {"do",    "does",    "did",    "is",     "are",    "was",
                            "were",  "am",      "can",    "could",  "will",   "would",
                            "should", "shall",  "have",   "has",    "had",    "may",
                            "might", "must",    "don't",  "doesn't", "didn't", "isn't",
                            "aren't", "won't",  "wouldn't", "couldn't", "shouldn't"};
  return s;
}

inline const WordSet& yes_words() {
  static const WordSet s = {"yes", "yeah", "yep", "yup", "sure", "absolutely", "definitely",
                            "totally", "certainly"};
  return s;
}

inline const WordSet& no_words() {
  static const WordSet s = {"no", "nope", "nah"};
  return s;
}

inline const WordSet& accept_words() {
  static const WordSet s = {"ok", "okay", "alright", "cool", "fine", "deal", "right"};
  return s;
}

inline const WordSet& continuer_words() {
  static const WordSet s = {"mhm", "uh-huh", "uhhuh", "hmm", "hm", "mm"};
  return s;
}

inline const WordSet& emotion_words() {
  static const WordSet s = {"wow",  "haha", "lol",  "omg", "yay", "ugh",
                            "woah", "whoa", "oops", "wtf", "aww", "ouch"};
  return s;
}

inline const WordSet& emphasis_words() {
  static const WordSet s = {"really", "exactly", "seriously", "indeed", "honestly"};
  return s;
}

inline const WordSet& positive_words() {
  static const WordSet s = {
      "good",      "great",     "love",     "loved",    "loves",     "like",
      "likes",     "liked",     "awesome",  "amazing",  "nice",      "best",
      "cool",      "fun",       "funny",    "happy",    "excellent", "fantastic",
      "wonderful", "favorite",  "enjoy",    "enjoyed",  "beautiful", "perfect",
      "glad",      "excited",   "sweet",    "brilliant", "impressive", "delicious",
      "tasty",     "interesting", "incredible", "superb", "charming", "solid"};
  return s;
}

inline const WordSet& negative_words() {
  static const WordSet s = {
      "bad",       "terrible", "awful",    "hate",        "hated",       "hates",
      "worst",     "horrible", "boring",   "annoying",    "sucks",       "sucked",
      "stupid",    "ugly",     "wrong",    "disappointing", "disappointed", "sad",
      "angry",     "mad",      "gross",    "nasty",       "poor",        "mediocre",
      "trash",     "garbage",  "waste",    "dumb",        "lame",        "miserable",
      "painful",   "mess"};
  return s;
}

inline const WordSet& negator_words() {
  static const WordSet s = {"not",     "no",      "never",  "nothing", "don't",   "doesn't",
                            "didn't",  "isn't",   "aren't", "wasn't",  "weren't", "won't",
                            "wouldn't", "can't",  "cannot", "couldn't", "shouldn't", "ain't",
                            "hardly",  "barely"};
  return s;
}

inline const WordSet& imperative_verbs() {
  static const WordSet s = {"tell", "play", "show", "give", "find", "get",  "put",
                            "turn", "open", "help", "sing", "search", "call", "order",
                            "book", "set",  "remind", "send", "stop", "start"};
  return s;
}

// keyword lexicons per topic label, matched as single tokens
inline const std::vector<std::pair<std::string_view, WordSet>>& topic_keywords() {
  static const std::vector<std::pair<std::string_view, WordSet>> table = {
      {"politics",
       {"president", "election", "vote", "senator", "congress", "government", "policy",
        "campaign", "democrat", "republican", "mayor", "law"}},
      {"fashion",
       {"dress", "shoes", "style", "fashion", "wear", "outfit", "clothes", "jacket", "jeans",
        "designer", "wardrobe"}},
      {"sports",
       {"game", "team", "player", "season", "coach", "score", "touchdown", "quarterback",
        "basketball", "football", "baseball", "hockey", "soccer", "playoffs", "league",
        "championship", "match", "goal", "pitcher", "nfl", "nba"}},
      {"science and technology",
       {"phone", "computer", "robot", "science", "technology", "internet", "app", "software",
        "ai", "laptop", "rocket", "space", "data", "code"}},
      {"music",
       {"album", "song", "band", "concert", "guitar", "singer", "music", "lyrics", "playlist",
        "drummer", "tour", "melody", "spotify"}},
      {"movies",
       {"movie", "film", "actor", "actress", "director", "cinema", "trailer", "sequel",
        "netflix", "scene", "oscar", "theater"}},
      {"books",
       {"book", "novel", "author", "read", "reading", "chapter", "library", "story", "writer",
        "poetry"}},
      {"food",
       {"pizza", "pasta", "restaurant", "recipe", "cook", "eat", "food", "dinner", "lunch",
        "breakfast", "sandwich", "burger", "fries", "cheese", "coffee"}},
      {"travel",
       {"trip", "vacation", "flight", "hotel", "beach", "visit", "travel", "airport",
        "passport", "tour", "cruise"}},
      {"weather",
       {"weather", "rain", "snow", "sunny", "storm", "forecast", "temperature", "cloudy",
        "windy"}},
      {"family",
       {"family", "mom", "dad", "brother", "sister", "kids", "son", "daughter", "grandma",
        "grandpa", "wife", "husband"}},
      {"work", {"work", "job", "boss", "office", "meeting", "salary", "career", "interview"}},
      {"school",
       {"school", "class", "teacher", "homework", "exam", "college", "university", "student",
        "grade"}},
      {"video games",
       {"xbox", "playstation", "nintendo", "gaming", "gamer", "videogame", "videogames",
        "console", "fortnite", "minecraft", "zelda"}},
      {"health",
       {"doctor", "sick", "exercise", "gym", "diet", "health", "medicine", "hospital", "flu",
        "workout"}},
      {"pets", {"dog", "cat", "puppy", "kitten", "pet", "vet", "hamster", "goldfish"}},
      {"cars", {"car", "driving", "engine", "truck", "highway", "mechanic", "gas", "mileage"}},
      {"celebrities", {"celebrity", "famous", "gossip", "paparazzi", "star", "hollywood"}},
      {"history", {"history", "war", "ancient", "century", "empire", "revolution", "museum"}},
      {"hobbies",
       {"hobby", "painting", "knitting", "fishing", "hiking", "gardening", "photography",
        "chess", "collecting"}},
      {"news", {"news", "headline", "breaking", "journalist", "reporter", "press"}},
  };
  return table;
}

// conversation metadata topic -> label alias table
inline const std::map<std::string, std::string, std::less<>>& topic_aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"politics", "politics"},
      {"fashion", "fashion"},
      {"sports", "sports"},
      {"football", "sports"},
      {"nfl football", "sports"},
      {"baseball", "sports"},
      {"mlb baseball", "sports"},
      {"basketball", "sports"},
      {"nba basketball", "sports"},
      {"hockey", "sports"},
      {"soccer", "sports"},
      {"science and technology", "science and technology"},
      {"science", "science and technology"},
      {"technology", "science and technology"},
      {"tech", "science and technology"},
      {"music", "music"},
      {"movies", "movies"},
      {"movie", "movies"},
      {"film", "movies"},
      {"tv", "movies"},
      {"star wars", "movies"},
      {"books", "books"},
      {"book", "books"},
      {"harry potter", "books"},
      {"food", "food"},
      {"travel", "travel"},
      {"weather", "weather"},
      {"family", "family"},
      {"work", "work"},
      {"school", "school"},
      {"video games", "video games"},
      {"games", "video games"},
      {"gaming", "video games"},
      {"health", "health"},
      {"pets", "pets"},
      {"cars", "cars"},
      {"celebrities", "celebrities"},
      {"history", "history"},
      {"hobbies", "hobbies"},
      {"news", "news"},
  };
  return table;
}

// default gazetteer: lowercase surface -> schema.org type
inline const std::vector<std::pair<std::string_view, std::string_view>>& default_gazetteer() {
  static const std::vector<std::pair<std::string_view, std::string_view>> table = {
      {"cam newton", "Person"},
      {"tom brady", "Person"},
      {"taylor swift", "Person"},
      {"beyonce", "Person"},
      {"drake", "Person"},
      {"adele", "Person"},
      {"lebron james", "Person"},
      {"serena williams", "Person"},
      {"dr. smith", "Person"},
      {"stranger things", "TVSeries"},
      {"game of thrones", "TVSeries"},
      {"breaking bad", "TVSeries"},
      {"the office", "TVSeries"},
      {"star wars", "Movie"},
      {"titanic", "Movie"},
      {"inception", "Movie"},
      {"harry potter", "Book"},
      {"the beatles", "MusicGroup"},
      {"the lumineers", "MusicGroup"},
      {"coldplay", "MusicGroup"},
      {"nirvana", "MusicGroup"},
      {"new york", "City"},
      {"london", "City"},
      {"paris", "City"},
      {"chicago", "City"},
      {"boston", "City"},
      {"seattle", "City"},
      {"france", "Country"},
      {"canada", "Country"},
      {"japan", "Country"},
      {"the patriots", "SportsTeam"},
      {"patriots", "SportsTeam"},
      {"lakers", "SportsTeam"},
      {"yankees", "SportsTeam"},
      {"real madrid", "SportsTeam"},
      {"google", "Organization"},
      {"amazon", "Organization"},
      {"netflix", "Organization"},
      {"spotify", "Organization"},
      {"nike", "Organization"},
      {"tesla", "Organization"},
      {"nfl", "SportsOrganization"},
      {"nba", "SportsOrganization"},
      {"xbox", "Product"},
      {"playstation", "Product"},
      {"iphone", "Product"},
      {"minecraft", "VideoGame"},
      {"fortnite", "VideoGame"},
      {"zelda", "VideoGame"},
      {"pizza hut", "Restaurant"},
      {"mcdonalds", "Restaurant"},
      {"starbucks", "CafeOrCoffeeShop"},
      {"disneyland", "AmusementPark"},
      {"yellowstone", "Park"},
      {"harvard", "CollegeOrUniversity"},
  };
  return table;
}

}  // namespace provider_detail

// ---------------------------------------------------------------------------
// Default providers

// One of the 15 dialogue acts. Rule order: greetings and farewells, clarify
// phrases, question forms, short answer forms, backchannel/emotion cues,
// then Statement. "System" and "Other" are reserved for external providers.
inline std::string extract_dialogue_act(std::string_view utterance) {
  using namespace provider_detail;
  std::string text = to_lower(utterance);
  auto words = surfaces(text);
  bool question = text.find('?') != std::string::npos;
  if (!words.empty() && greet_words().count(words.front())) return "Greet";
  if (contains_phrase(text, "good morning") || contains_phrase(text, "good evening") ||
      contains_phrase(text, "good afternoon")) {
    return "Greet";
  }
  if (!words.empty() && bye_words().count(words.front())) return "Bye";
  if (contains_phrase(text, "see you later") || contains_phrase(text, "good night") ||
      contains_phrase(text, "take care")) {
    return "Bye";
  }
  if (contains_phrase(text, "what do you mean") || contains_phrase(text, "can you clarify") ||
      contains_phrase(text, "i don't understand") ||
      (!words.empty() && words.front() == "huh")) {
    return "Clarify";
  }
  if (question && !words.empty()) {
    if (wh_words().count(words.front())) return "Wh-Question";
    return "Yes/No Question";
  }
  if (!words.empty()) {
    const std::string& first = words.front();
    if (yes_words().count(first) || contains_phrase(text, "of course")) return "Yes Answer";
    if (no_words().count(first)) return "No Answer";
    if (accept_words().count(first) || contains_phrase(text, "sounds good")) return "Accept";
    if (continuer_words().count(first)) return "Continuer";
  }
  if (contains_phrase(text, "no way") || contains_phrase(text, "i disagree") ||
      contains_phrase(text, "not really")) {
    return "Reject";
  }
  for (const std::string& w : words) {
    if (emotion_words().count(w)) return "Emotion";
  }
  if (text.find('!') != std::string::npos) {
    for (const std::string& w : words) {
      if (emphasis_words().count(w)) return "Emphasis";
    }
  }
  return "Statement";
}

// Signed lexicon score with a 2-token negator window; mapped onto the five
// sentiment values.
inline std::string extract_sentiment(std::string_view utterance) {
  using namespace provider_detail;
  auto words = surfaces(to_lower(utterance));
  int score = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    int hit = 0;
    if (positive_words().count(words[i])) hit = 1;
    if (negative_words().count(words[i])) hit = -1;
    if (hit == 0) continue;
    for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
      if (negator_words().count(words[i - back])) {
        hit = -hit;
        break;
      }
    }
    score += hit;
  }
  if (score <= -2) return "very negative";
  if (score == -1) return "negative";
  if (score == 0) return "neutral";
  if (score == 1) return "positive";
  return "very positive";
}

// One of the 33 intents. Topic-shift markers, opinion requests and
// imperatives come first; question forms map to the request_* labels;
// everything else is an inform variant or social nicety.
inline std::string extract_intent(std::string_view utterance) {
  using namespace provider_detail;
  std::string text = to_lower(utterance);
  auto words = surfaces(text);
  bool question = text.find('?') != std::string::npos;
  if (contains_phrase(text, "talk about something else") ||
      contains_phrase(text, "change the subject") || contains_phrase(text, "different topic") ||
      contains_phrase(text, "change the topic") || contains_phrase(text, "moving on")) {
    return "request_change_topic";
  }
  if (contains_phrase(text, "what do you think") || contains_phrase(text, "your opinion") ||
      contains_phrase(text, "how do you feel about") || contains_phrase(text, "do you like") ||
      contains_phrase(text, "your favorite")) {
    return "request_opinion";
  }
  if (!words.empty() &&
      (imperative_verbs().count(words.front()) || contains_phrase(text, "can you") ||
       contains_phrase(text, "could you") || contains_phrase(text, "would you") ||
       words.front() == "please" || words.front() == "let's")) {
    return "request_service";
  }
  if (question && !words.empty()) {
    if (wh_words().count(words.front())) return "request_information";
    return "request_confirmation";
  }
  if (!words.empty()) {
    const std::string& first = words.front();
    if (greet_words().count(first)) return "greeting";
    if (bye_words().count(first)) return "farewell";
    if (first == "thanks" || first == "thank") return "thank";
    if (first == "sorry") return "apologize";
    if (yes_words().count(first)) return "agree";
    if (no_words().count(first) || contains_phrase(text, "i disagree")) return "disagree";
  }
  return "inform";
}

// Conversation metadata wins when it maps through the alias table;
// otherwise keyword counting over the 21 topical lexicons, ties broken by
// label order, no hits -> "other".
inline std::string extract_topic(std::string_view utterance,
                                 const std::optional<std::string>& conversation_topic) {
  using namespace provider_detail;
  if (conversation_topic) {
    std::string key = to_lower(*conversation_topic);
    auto it = topic_aliases().find(std::string_view(key));
    if (it != topic_aliases().end()) return it->second;
  }
  auto words = surfaces(to_lower(utterance));
  std::string best = "other";
  std::size_t best_hits = 0;
  for (const auto& [label, keywords] : topic_keywords()) {
    std::size_t hits = 0;
    for (const std::string& w : words) {
      if (keywords.count(w)) ++hits;
    }
    if (hits > best_hits) {
      best_hits = hits;
      best = std::string(label);
    }
  }
  return best;
}

// Gazetteer with loadable entries: surface<TAB>type lines.
class Gazetteer {
 public:
  static const Gazetteer& builtin() {
    static const Gazetteer g = [] {
      Gazetteer g;
      for (auto [surface, type] : provider_detail::default_gazetteer()) {
        g.add(std::string(surface), std::string(type));
      }
      return g;
    }();
    return g;
  }

  static Gazetteer from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open gazetteer file: " + path.string());
    Gazetteer g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view sv = trim_view(line);
      if (sv.empty() || sv.front() == '#') continue;
      std::size_t tab = sv.find('\t');
      if (tab == std::string_view::npos) {
        throw ValidationError("gazetteer " + path.string() + " line " +
                              std::to_string(line_no) + ": expected surface<TAB>type");
      }
      std::string surface = to_lower(trim_view(sv.substr(0, tab)));
      std::string type(trim_view(sv.substr(tab + 1)));
      bool known = std::find(kSchemaEntityTypes.begin(), kSchemaEntityTypes.end(), type) !=
                   kSchemaEntityTypes.end();
      if (!known) {
        throw ValidationError("gazetteer " + path.string() + " line " +
                              std::to_string(line_no) + ": unknown type '" + type + "'");
      }
      g.add(std::move(surface), std::move(type));
    }
    return g;
  }

  void add(std::string surface, std::string type) {
    auto toks = split_words(surface);
    max_len_ = std::max(max_len_, toks.size());
    entries_[std::move(surface)] = std::move(type);
  }

  // Longest-match lookup over the token sequence; returns the sorted,
  // deduplicated set of types found.
  std::vector<std::string> types_in(std::string_view utterance) const {
    auto toks = tokenize(to_lower(utterance));
    std::vector<std::string> words;
    for (const Token& t : toks) {
      if (t.pos != Pos::Punct) words.push_back(t.surface);
    }
    std::vector<std::string> found;
    std::size_t i = 0;
    while (i < words.size()) {
      std::size_t matched = 0;
      for (std::size_t len = std::min(max_len_, words.size() - i); len >= 1; --len) {
        std::string key;
        for (std::size_t k = 0; k < len; ++k) {
          if (k) key += ' ';
          key += words[i + k];
        }
        auto it = entries_.find(key);
        if (it != entries_.end()) {
          found.push_back(it->second);
          matched = len;
          break;
        }
      }
      i += matched ? matched : 1;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
  std::size_t max_len_ = 1;
};

// Entity types present in the utterance according to the built-in gazetteer;
// possibly empty.
inline std::vector<std::string> extract_entity_types(std::string_view utterance) {
  return Gazetteer::builtin().types_in(utterance);
}

// One term per line, '#' comments; used for swapping in custom word lists.
inline std::vector<std::string> load_term_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv = trim_view(line);
    if (sv.empty() || sv.front() == '#') continue;
    terms.push_back(to_lower(sv));
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Provider registry

struct ProviderInput {
  std::string_view text;
  std::optional<std::string> conversation_topic;
};

// Every provider maps an utterance to labels from its family's closed set.
// Single-valued families return exactly one label.
using Provider = std::function<std::vector<std::string>(const ProviderInput&)>;

struct ProviderRegistry {
  std::array<Provider, 5> providers;

  const Provider& provider(Family f) const { return providers[static_cast<std::size_t>(f)]; }
  Provider& provider(Family f) { return providers[static_cast<std::size_t>(f)]; }

  static ProviderRegistry builtin() {
    ProviderRegistry r;
    r.provider(Family::DialogueAct) = [](const ProviderInput& in) {
      return std::vector<std::string>{extract_dialogue_act(in.text)};
    };
    r.provider(Family::Sentiment) = [](const ProviderInput& in) {
      return std::vector<std::string>{extract_sentiment(in.text)};
    };
    r.provider(Family::Intent) = [](const ProviderInput& in) {
      return std::vector<std::string>{extract_intent(in.text)};
    };
    r.provider(Family::Topic) = [](const ProviderInput& in) {
      return std::vector<std::string>{extract_topic(in.text, in.conversation_topic)};
    };
    r.provider(Family::EntityType) = [](const ProviderInput& in) {
      return extract_entity_types(in.text);
    };
    return r;
  }
};

// Entity provider over a custom gazetteer (e.g. Gazetteer::from_file).
inline Provider make_entity_provider(Gazetteer gazetteer) {
  auto shared = std::make_shared<const Gazetteer>(std::move(gazetteer));
  return [shared](const ProviderInput& in) { return shared->types_in(in.text); };
}

// Sentiment provider over custom positive/negative term lists (e.g. from
// load_term_lexicon); same scoring and negator window as the built-in.
inline Provider make_sentiment_provider(std::vector<std::string> positive,
                                        std::vector<std::string> negative) {
  auto pos = std::make_shared<const std::set<std::string>>(positive.begin(), positive.end());
  auto neg = std::make_shared<const std::set<std::string>>(negative.begin(), negative.end());
  return [pos, neg](const ProviderInput& in) {
    auto words = provider_detail::surfaces(to_lower(in.text));
    int score = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      int hit = 0;
      if (pos->count(words[i])) hit = 1;
      if (neg->count(words[i])) hit = -1;
      if (hit == 0) continue;
      for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
        if (provider_detail::negator_words().count(words[i - back])) {
          hit = -hit;
          break;
        }
      }
      score += hit;
    }
    const char* label = score <= -2  ? "very negative"
                        : score == -1 ? "negative"
                        : score == 0  ? "neutral"
                        : score == 1  ? "positive"
                                      : "very positive";
    return std::vector<std::string>{label};
  };
}

}  // namespace drel
