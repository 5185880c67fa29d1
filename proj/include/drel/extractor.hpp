// Pattern-based mining of weakly labeled relation pairs. Two patterns:
//   P1: (Arg1) (connective) (Arg2) inside one sentence
//   P2: (Arg1). (Connective)[,] (Arg2) across adjacent sentences, either
//       within a turn or across a turn boundary.
// Heuristic filters (full-sentence arguments, POS gates, segment window)
// keep label noise down; the connective itself is dropped from the pair.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "drel/connectives.hpp"
#include "drel/corpus.hpp"
#include "drel/errors.hpp"
#include "drel/pos_tagger.hpp"
#include "drel/text.hpp"

namespace drel {

struct ExtractionConfig {
  int min_arg_tokens = 3;
  bool require_verb = true;
  int segment_window_sentences = 1;
  std::set<std::string> enabled_pos_gates = {
      std::string(kGateNotDegreeAdverb), std::string(kGateNotIfThen),
      std::string(kGateClausalCoordination)};
  bool pattern1_enabled = true;
  bool pattern2_enabled = true;
  bool p2_within_turn = true;
  bool p2_cross_turn = true;

  void validate() const {
    if (min_arg_tokens < 1) throw ValidationError("min_arg_tokens must be >= 1");
    if (segment_window_sentences < 1)
      throw ValidationError("segment_window_sentences must be >= 1");
  }
};

struct Provenance {
  std::string conv_id;
  int arg1_turn = 0;
  int arg2_turn = 0;  // == arg1_turn unless the pair crosses a turn boundary
  CharSpan arg1_span;
  CharSpan arg2_span;        // in arg2_turn's text, which also holds the connective
  CharSpan connective_span;
};

struct RelationPair {
  std::string arg1;
  std::string arg2;
  RelationLabel relation = RelationLabel::Comparison;
  std::string connective;
  Pattern pattern = Pattern::P1Intra;
  bool comma_after_connective = false;  // P2 only
  std::optional<std::string> topic;     // conversation topic metadata, if any
  Provenance provenance;
};

enum class FilterReason { Accepted, TooShort, NoVerb };

struct FilterDecision {
  bool accepted = false;
  FilterReason reason = FilterReason::Accepted;
};

// Full-sentence argument check: enough non-punctuation tokens, and a verb
// when require_verb is on.
inline FilterDecision full_sentence_filter(std::span<const Token> arg_tokens,
                                           const ExtractionConfig& config) {
  std::size_t words = 0;
  bool has_verb = false;
  for (const Token& t : arg_tokens) {
    if (t.pos == Pos::Punct) continue;
    ++words;
    if (t.pos == Pos::Verb) has_verb = true;
  }
  if (words < static_cast<std::size_t>(config.min_arg_tokens))
    return {false, FilterReason::TooShort};
  if (config.require_verb && !has_verb) return {false, FilterReason::NoVerb};
  return {true, FilterReason::Accepted};
}

namespace detail {

inline std::span<const Token> trim_punct(std::span<const Token> tokens) {
  std::size_t b = 0, e = tokens.size();
  while (b < e && tokens[b].pos == Pos::Punct) ++b;
  while (e > b && tokens[e - 1].pos == Pos::Punct) --e;
  return tokens.subspan(b, e - b);
}

inline bool has_verb(std::span<const Token> tokens) {
  for (const Token& t : tokens) {
    if (t.pos == Pos::Verb) return true;
  }
  return false;
}

// True when the connective's token sequence occurs contiguously inside the
// argument. Pairs that would retain their own connective are rejected so
// that dropping the connective is total.
inline bool contains_connective(std::span<const Token> arg,
                                const std::vector<std::string>& conn_tokens) {
  if (conn_tokens.empty() || arg.size() < conn_tokens.size()) return false;
  for (std::size_t i = 0; i + conn_tokens.size() <= arg.size(); ++i) {
    bool all = true;
    for (std::size_t k = 0; k < conn_tokens.size(); ++k) {
      if (arg[i + k].pos == Pos::Punct || arg[i + k].surface != conn_tokens[k]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace detail

struct GateContext {
  std::span<const Token> sentence;  // tokens of the connective-bearing sentence
  std::size_t conn_begin = 0;       // token index of the match
  std::size_t conn_end = 0;         // one past the match
  std::span<const Token> arg1_tokens;
};

// POS gates for high-noise connectives. A disabled or unknown gate passes.
//   not_degree_adverb: "so good", "so far" — degree uses, not causal.
//   not_if_then: "then" completing an if-clause is conditional, not temporal.
//   clausal_coordination: "and"/"or" must join clauses (verbs both sides).
inline bool gate_passes(std::string_view gate, const GateContext& ctx) {
  if (gate == kGateNotDegreeAdverb) {
    for (std::size_t j = ctx.conn_end; j < ctx.sentence.size(); ++j) {
      if (ctx.sentence[j].pos == Pos::Punct) break;
      return ctx.sentence[j].pos != Pos::Adj && ctx.sentence[j].pos != Pos::Adv;
    }
    return true;
  }
  if (gate == kGateNotIfThen) {
    for (std::size_t j = 0; j < ctx.conn_begin; ++j) {
      if (ctx.sentence[j].surface == "if") return false;
    }
    for (const Token& t : ctx.arg1_tokens) {
      if (t.surface == "if") return false;
    }
    return true;
  }
  if (gate == kGateClausalCoordination) {
    return detail::has_verb(ctx.arg1_tokens) &&
           detail::has_verb(ctx.sentence.subspan(ctx.conn_end));
  }
  return true;
}

namespace detail {

inline bool gate_accepts(const ConnectiveEntry& entry, const ExtractionConfig& config,
                         const GateContext& ctx) {
  if (entry.pos_gate.empty()) return true;
  if (!config.enabled_pos_gates.count(entry.pos_gate)) return true;
  return gate_passes(entry.pos_gate, ctx);
}

inline CharSpan tokens_span(std::span<const Token> tokens) {
  return {tokens.front().span.begin, tokens.back().span.end};
}

inline std::string slice(std::string_view text, CharSpan span) {
  return std::string(text.substr(span.begin, span.length()));
}

}  // namespace detail

// Leftmost gated-and-accepted connective strictly inside the sentence; at
// most one pair per sentence. Provenance gets the spans only; the caller
// fills in conversation and turn identity.
inline std::optional<RelationPair> match_pattern1(const Sentence& sentence,
                                                  std::string_view turn_text,
                                                  const Lexicon& lexicon,
                                                  const ExtractionConfig& config) {
  const auto& toks = sentence.tokens;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    auto match = lexicon.relation_for(toks, i);
    if (!match) continue;
    const ConnectiveEntry& entry = *match->entry;
    if (!entry.allow_p1) continue;
    std::size_t end = i + match->token_count;
    if (end >= toks.size()) continue;  // nothing after the connective
    auto arg1 = detail::trim_punct(std::span<const Token>(toks).first(i));
    auto arg2 = detail::trim_punct(std::span<const Token>(toks).subspan(end));
    if (arg1.empty() || arg2.empty()) continue;
    GateContext ctx{toks, i, end, arg1};
    if (!detail::gate_accepts(entry, config, ctx)) continue;
    if (!full_sentence_filter(arg1, config).accepted) continue;
    if (!full_sentence_filter(arg2, config).accepted) continue;
    if (detail::contains_connective(arg1, entry.tokens) ||
        detail::contains_connective(arg2, entry.tokens)) {
      continue;
    }
    RelationPair pair;
    pair.relation = entry.relation;
    pair.connective = entry.surface;
    pair.pattern = Pattern::P1Intra;
    pair.provenance.arg1_span = detail::tokens_span(arg1);
    pair.provenance.arg2_span = detail::tokens_span(arg2);
    pair.provenance.connective_span = {toks[i].span.begin, toks[end - 1].span.end};
    pair.arg1 = detail::slice(turn_text, pair.provenance.arg1_span);
    pair.arg2 = detail::slice(turn_text, pair.provenance.arg2_span);
    return pair;
  }
  return std::nullopt;
}

// Connective opening next_sentence, optionally followed by a comma; Arg1 is
// the (already windowed) previous context, Arg2 the remainder of
// next_sentence. prev_sentence spans index into prev_turn_text and
// next_sentence spans into next_turn_text; the two texts coincide for the
// within-turn sub-mode.
inline std::optional<RelationPair> match_pattern2(const Sentence& prev_sentence,
                                                  std::string_view prev_turn_text,
                                                  const Sentence& next_sentence,
                                                  std::string_view next_turn_text,
                                                  const Lexicon& lexicon,
                                                  const ExtractionConfig& config,
                                                  bool cross_turn = false) {
  (void)cross_turn;  // provenance turn indices are the caller's business
  const auto& toks = next_sentence.tokens;
  if (toks.empty() || prev_sentence.tokens.empty()) return std::nullopt;
  auto match = lexicon.relation_for(toks, 0);
  if (!match) return std::nullopt;
  const ConnectiveEntry& entry = *match->entry;
  if (!entry.allow_p2) return std::nullopt;
  std::size_t end = match->token_count;
  bool comma = end < toks.size() && toks[end].surface == ",";
  std::size_t arg2_begin = end + (comma ? 1 : 0);
  if (arg2_begin >= toks.size()) return std::nullopt;
  auto arg1 = detail::trim_punct(std::span<const Token>(prev_sentence.tokens));
  auto arg2 = detail::trim_punct(std::span<const Token>(toks).subspan(arg2_begin));
  if (arg1.empty() || arg2.empty()) return std::nullopt;
  GateContext ctx{toks, 0, end, arg1};
  if (!detail::gate_accepts(entry, config, ctx)) return std::nullopt;
  if (!full_sentence_filter(arg1, config).accepted) return std::nullopt;
  if (!full_sentence_filter(arg2, config).accepted) return std::nullopt;
  if (detail::contains_connective(arg1, entry.tokens) ||
      detail::contains_connective(arg2, entry.tokens)) {
    return std::nullopt;
  }
  RelationPair pair;
  pair.relation = entry.relation;
  pair.connective = entry.surface;
  pair.pattern = Pattern::P2Cross;
  pair.comma_after_connective = comma;
  pair.provenance.arg1_span = detail::tokens_span(arg1);
  pair.provenance.arg2_span = detail::tokens_span(arg2);
  pair.provenance.connective_span = {toks[0].span.begin, toks[end - 1].span.end};
  pair.arg1 = detail::slice(prev_turn_text, pair.provenance.arg1_span);
  pair.arg2 = detail::slice(next_turn_text, pair.provenance.arg2_span);
  return pair;
}

enum class WindowSide { Before, After };

// Nearest sentences adjacent to the anchor, concatenated in textual order;
// at most segment_window_sentences of them. Empty result means no context
// on that side.
inline Sentence apply_segment_window(const std::vector<Sentence>& turn_sentences,
                                     std::size_t anchor_index, WindowSide side,
                                     const ExtractionConfig& config) {
  if (anchor_index >= turn_sentences.size()) {
    throw std::out_of_range("apply_segment_window: anchor out of range");
  }
  std::size_t w = static_cast<std::size_t>(config.segment_window_sentences);
  std::size_t begin, end;
  if (side == WindowSide::Before) {
    end = anchor_index;
    begin = end > w ? end - w : 0;
  } else {
    begin = anchor_index + 1;
    end = std::min(turn_sentences.size(), begin + w);
  }
  Sentence out;
  if (begin >= end) return out;
  out.span = {turn_sentences[begin].span.begin, turn_sentences[end - 1].span.end};
  for (std::size_t i = begin; i < end; ++i) {
    out.tokens.insert(out.tokens.end(), turn_sentences[i].tokens.begin(),
                      turn_sentences[i].tokens.end());
  }
  return out;
}

struct DatasetStats {
  std::size_t total_pairs = 0;
  std::array<std::size_t, kNumRelations> per_relation = {};
  double avg_tokens_arg1 = 0.0;  // non-punctuation tokens, 1-decimal
  double avg_tokens_arg2 = 0.0;
  std::size_t pairs_p1 = 0;
  std::size_t pairs_p2 = 0;
  std::size_t pairs_p2_within_turn = 0;
  std::size_t pairs_p2_cross_turn = 0;
  std::map<std::string, std::size_t> per_connective;
};

inline double round1(double x) { return std::round(x * 10.0) / 10.0; }

inline DatasetStats compute_stats(std::span<const RelationPair> pairs) {
  DatasetStats s;
  s.total_pairs = pairs.size();
  double sum1 = 0.0, sum2 = 0.0;
  for (const RelationPair& p : pairs) {
    s.per_relation[relation_index(p.relation)] += 1;
    s.per_connective[p.connective] += 1;
    if (p.pattern == Pattern::P1Intra) {
      s.pairs_p1 += 1;
    } else {
      s.pairs_p2 += 1;
      if (p.provenance.arg1_turn == p.provenance.arg2_turn) {
        s.pairs_p2_within_turn += 1;
      } else {
        s.pairs_p2_cross_turn += 1;
      }
    }
    sum1 += static_cast<double>(count_non_punct(tokenize(p.arg1)));
    sum2 += static_cast<double>(count_non_punct(tokenize(p.arg2)));
  }
  if (!pairs.empty()) {
    s.avg_tokens_arg1 = round1(sum1 / static_cast<double>(pairs.size()));
    s.avg_tokens_arg2 = round1(sum2 / static_cast<double>(pairs.size()));
  }
  return s;
}

struct MiningResult {
  std::vector<RelationPair> pairs;
  DatasetStats stats;
};

// Runs both patterns over every conversation. Deterministic output order:
// (conversation order, turn of the connective, connective char offset).
// Exact (arg1, arg2, relation) duplicates are dropped, keeping the first.
inline MiningResult mine_corpus(const std::vector<Conversation>& conversations,
                                const Lexicon& lexicon, const ExtractionConfig& config,
                                const PosTagger& tagger = builtin_tagger()) {
  config.validate();
  MiningResult result;
  std::set<std::tuple<std::string, std::string, RelationLabel>> seen;

  for (const Conversation& conv : conversations) {
    std::vector<std::vector<Sentence>> turn_sentences;
    turn_sentences.reserve(conv.turns.size());
    for (const Turn& t : conv.turns) turn_sentences.push_back(segment(t.text, tagger));

    struct Keyed {
      int turn;
      std::size_t offset;
      RelationPair pair;
    };
    std::vector<Keyed> found;

    auto add = [&](std::optional<RelationPair> pair, int arg1_turn, int arg2_turn) {
      if (!pair) return;
      pair->provenance.conv_id = conv.id;
      pair->provenance.arg1_turn = arg1_turn;
      pair->provenance.arg2_turn = arg2_turn;
      pair->topic = conv.topic;
      found.push_back({arg2_turn, pair->provenance.connective_span.begin, std::move(*pair)});
    };

    for (std::size_t t = 0; t < conv.turns.size(); ++t) {
      const std::string& text = conv.turns[t].text;
      const auto& sents = turn_sentences[t];
      if (config.pattern1_enabled) {
        for (const Sentence& s : sents) {
          add(match_pattern1(s, text, lexicon, config), static_cast<int>(t),
              static_cast<int>(t));
        }
      }
      if (config.pattern2_enabled && config.p2_within_turn) {
        for (std::size_t i = 1; i < sents.size(); ++i) {
          Sentence ctx = apply_segment_window(sents, i, WindowSide::Before, config);
          if (ctx.tokens.empty()) continue;
          add(match_pattern2(ctx, text, sents[i], text, lexicon, config, false),
              static_cast<int>(t), static_cast<int>(t));
        }
      }
      if (config.pattern2_enabled && config.p2_cross_turn && t + 1 < conv.turns.size()) {
        const auto& next_sents = turn_sentences[t + 1];
        if (!sents.empty() && !next_sents.empty()) {
          // window over the tail of this turn
          std::size_t w = static_cast<std::size_t>(config.segment_window_sentences);
          std::size_t begin = sents.size() > w ? sents.size() - w : 0;
          Sentence ctx;
          ctx.span = {sents[begin].span.begin, sents.back().span.end};
          for (std::size_t i = begin; i < sents.size(); ++i) {
            ctx.tokens.insert(ctx.tokens.end(), sents[i].tokens.begin(), sents[i].tokens.end());
          }
          add(match_pattern2(ctx, text, next_sents.front(), conv.turns[t + 1].text, lexicon,
                             config, true),
              static_cast<int>(t), static_cast<int>(t + 1));
        }
      }
    }

    std::stable_sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
      return std::tie(a.turn, a.offset) < std::tie(b.turn, b.offset);
    });
    for (Keyed& k : found) {
      auto key = std::make_tuple(k.pair.arg1, k.pair.arg2, k.pair.relation);
      if (!seen.insert(key).second) continue;
      result.pairs.push_back(std::move(k.pair));
    }
  }

  result.stats = compute_stats(result.pairs);
  return result;
}

}  // namespace drel
