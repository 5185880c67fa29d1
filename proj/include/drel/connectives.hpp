// Connective lexicon: surface forms mapped to a single relation each, with
// per-entry pattern eligibility and optional POS gates. The built-in lexicon
// is the fixed 27-connective list the extraction pipeline was designed
// around; load_lexicon is the extension point for substituting a different
// selection.
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "drel/errors.hpp"
#include "drel/relation.hpp"
#include "drel/text.hpp"

namespace drel {

// P1: connective strictly inside one sentence. P2: connective opening the
// sentence that follows its Arg1 (next sentence in the turn, or first
// sentence of the next turn).
enum class Pattern { P1Intra, P2Cross };

inline std::string_view pattern_name(Pattern p) {
  return p == Pattern::P1Intra ? "P1" : "P2";
}

inline constexpr std::string_view kGateNotDegreeAdverb = "not_degree_adverb";
inline constexpr std::string_view kGateNotIfThen = "not_if_then";
inline constexpr std::string_view kGateClausalCoordination = "clausal_coordination";

inline const std::vector<std::string>& known_gate_names() {
  static const std::vector<std::string> names = {
      std::string(kGateNotDegreeAdverb), std::string(kGateNotIfThen),
      std::string(kGateClausalCoordination)};
  return names;
}

struct ConnectiveEntry {
  std::string surface;              // lowercase, single-space separated
  std::vector<std::string> tokens;  // surface split on spaces
  RelationLabel relation = RelationLabel::Comparison;
  bool allow_p1 = true;
  bool allow_p2 = true;
  std::string pos_gate;  // empty = ungated
  std::optional<double> association_probability;

  bool allows(Pattern p) const { return p == Pattern::P1Intra ? allow_p1 : allow_p2; }
};

namespace detail {

// "and"/"or" opening an utterance rarely relate it to the prior turn, so
// they stay P1-only; every other connective is eligible for both patterns.
inline bool default_allow_p2(std::string_view surface) {
  return surface != "and" && surface != "or";
}

inline std::string default_pos_gate(std::string_view surface) {
  if (surface == "so") return std::string(kGateNotDegreeAdverb);
  if (surface == "then") return std::string(kGateNotIfThen);
  if (surface == "and" || surface == "or") return std::string(kGateClausalCoordination);
  return {};
}

}  // namespace detail

inline ConnectiveEntry make_entry(std::string_view surface, RelationLabel relation) {
  ConnectiveEntry e;
  e.surface = std::string(surface);
  e.tokens = split_words(surface);
  e.relation = relation;
  e.allow_p1 = true;
  e.allow_p2 = detail::default_allow_p2(surface);
  e.pos_gate = detail::default_pos_gate(surface);
  return e;
}

class Lexicon {
 public:
  Lexicon() = default;

  // Validates entries and builds the longest-first index. Duplicate surfaces
  // with the same relation collapse to the first occurrence; conflicting
  // relations are rejected.
  static Lexicon from_entries(std::vector<ConnectiveEntry> entries) {
    Lexicon lex;
    for (ConnectiveEntry& e : entries) {
      if (e.surface.empty()) throw ValidationError("connective surface must be non-empty");
      for (char c : e.surface) {
        if (c != ascii_lower(c)) {
          throw ValidationError("connective surface must be lowercase: " + e.surface);
        }
      }
      if (e.surface.front() == ' ' || e.surface.back() == ' ' ||
          e.surface.find("  ") != std::string::npos) {
        throw ValidationError("connective surface must be single-space separated: '" +
                              e.surface + "'");
      }
      if (!e.allow_p1 && !e.allow_p2) {
        throw ValidationError("connective '" + e.surface + "' allows no pattern");
      }
      if (e.association_probability &&
          (*e.association_probability < 0.0 || *e.association_probability > 1.0)) {
        throw ValidationError("association probability out of [0,1] for '" + e.surface + "'");
      }
      if (e.tokens.empty()) e.tokens = split_words(e.surface);
      const ConnectiveEntry* existing = lex.find(e.surface);
      if (existing) {
        if (existing->relation != e.relation) {
          throw ValidationError("connective '" + e.surface +
                                "' mapped to two relations: " +
                                std::string(relation_name(existing->relation)) + " and " +
                                std::string(relation_name(e.relation)));
        }
        continue;  // same relation: keep the first entry
      }
      lex.entries_.push_back(std::move(e));
    }
    lex.rebuild_index();
    return lex;
  }

  const std::vector<ConnectiveEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const ConnectiveEntry* find(std::string_view surface) const {
    for (const ConnectiveEntry& e : entries_) {
      if (e.surface == surface) return &e;
    }
    return nullptr;
  }

  struct Match {
    const ConnectiveEntry* entry;
    std::size_t token_count;
  };

  // Longest entry whose token sequence matches at start. Matches never
  // cross a PUNCT token.
  std::optional<Match> relation_for(std::span<const Token> tokens, std::size_t start) const {
    if (start >= tokens.size()) throw std::out_of_range("relation_for: start out of range");
    auto it = index_.find(tokens[start].surface);
    if (it == index_.end()) return std::nullopt;
    for (const ConnectiveEntry* e : it->second) {
      if (start + e->tokens.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < e->tokens.size(); ++k) {
        const Token& t = tokens[start + k];
        if (t.pos == Pos::Punct || t.surface != e->tokens[k]) {
          ok = false;
          break;
        }
      }
      if (ok) return Match{e, e->tokens.size()};
    }
    return std::nullopt;
  }

  std::size_t count_for(RelationLabel r) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(),
                      [r](const ConnectiveEntry& e) { return e.relation == r; }));
  }

 private:
  void rebuild_index() {
    index_.clear();
    for (const ConnectiveEntry& e : entries_) {
      index_[e.tokens.front()].push_back(&e);
    }
    for (auto& [first, list] : index_) {
      std::sort(list.begin(), list.end(),
                [](const ConnectiveEntry* a, const ConnectiveEntry* b) {
                  if (a->tokens.size() != b->tokens.size())
                    return a->tokens.size() > b->tokens.size();
                  return a->surface < b->surface;
                });
    }
  }

  std::vector<ConnectiveEntry> entries_;
  std::map<std::string, std::vector<const ConnectiveEntry*>, std::less<>> index_;
};

// The 27 built-in connectives: 4 Comparison, 6 Contingency, 11 Expansion,
// 6 Temporal. "since" is deliberately absent (it marks either Temporal or
// Contingency, so it carries no single-relation signal).
inline Lexicon builtin_lexicon() {
  using R = RelationLabel;
  static const std::vector<std::pair<std::string_view, R>> kList = {
      {"but", R::Comparison},
      {"however", R::Comparison},
      {"although", R::Comparison},
      {"by contrast", R::Comparison},
      {"because", R::Contingency},
      {"so", R::Contingency},
      {"thus", R::Contingency},
      {"as a result", R::Contingency},
      {"consequently", R::Contingency},
      {"therefore", R::Contingency},
      {"also", R::Expansion},
      {"for example", R::Expansion},
      {"in addition", R::Expansion},
      {"instead", R::Expansion},
      {"indeed", R::Expansion},
      {"moreover", R::Expansion},
      {"for instance", R::Expansion},
      {"in fact", R::Expansion},
      {"furthermore", R::Expansion},
      {"or", R::Expansion},
      {"and", R::Expansion},
      {"then", R::Temporal},
      {"previously", R::Temporal},
      {"earlier", R::Temporal},
      {"later", R::Temporal},
      {"after", R::Temporal},
      {"before", R::Temporal},
  };
  std::vector<ConnectiveEntry> entries;
  entries.reserve(kList.size());
  for (auto [surface, relation] : kList) entries.push_back(make_entry(surface, relation));
  return Lexicon::from_entries(std::move(entries));
}

// One entry per line: surface<TAB>relation<TAB>patterns<TAB>pos_gate?<TAB>prob?
// where patterns is a comma list of P1_intra/P2_cross. '#' starts a comment.
inline Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  std::vector<ConnectiveEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv = trim_view(line);
    if (sv.empty() || sv.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    std::string l(sv);
    while (true) {
      std::size_t tab = l.find('\t', pos);
      fields.push_back(l.substr(pos, tab == std::string::npos ? tab : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    auto fail = [&](std::string_view what) {
      throw ValidationError("lexicon " + path.string() + " line " + std::to_string(line_no) +
                            ": " + std::string(what));
    };
    if (fields.size() < 3) fail("expected at least 3 tab-separated fields");
    ConnectiveEntry e;
    e.surface = to_lower(trim_view(fields[0]));
    e.tokens = split_words(e.surface);
    std::ostringstream canon;
    for (std::size_t i = 0; i < e.tokens.size(); ++i) {
      if (i) canon << ' ';
      canon << e.tokens[i];
    }
    e.surface = canon.str();
    if (e.surface.empty()) fail("empty connective surface");
    auto rel = relation_from_name(trim_view(fields[1]));
    if (!rel) fail("unknown relation '" + std::string(trim_view(fields[1])) + "'");
    e.relation = *rel;
    e.allow_p1 = e.allow_p2 = false;
    for (const std::string& p : split_words(fields[2])) {
      // allow comma separation too
      std::string token = p;
      std::replace(token.begin(), token.end(), ',', ' ');
      for (const std::string& q : split_words(token)) {
        if (q == "P1_intra" || q == "P1") {
          e.allow_p1 = true;
        } else if (q == "P2_cross" || q == "P2") {
          e.allow_p2 = true;
        } else {
          fail("unknown pattern '" + q + "'");
        }
      }
    }
    if (!e.allow_p1 && !e.allow_p2) fail("entry allows no pattern");
    if (fields.size() > 3) {
      std::string gate(trim_view(fields[3]));
      if (!gate.empty()) {
        const auto& known = known_gate_names();
        if (std::find(known.begin(), known.end(), gate) == known.end()) {
          fail("unknown pos gate '" + gate + "'");
        }
        e.pos_gate = gate;
      }
    }
    if (fields.size() > 4 && !trim_view(fields[4]).empty()) {
      try {
        e.association_probability = std::stod(std::string(trim_view(fields[4])));
      } catch (const std::exception&) {
        fail("bad probability '" + std::string(trim_view(fields[4])) + "'");
      }
      if (*e.association_probability < 0.0 || *e.association_probability > 1.0) {
        fail("probability out of [0,1]");
      }
    }
    entries.push_back(std::move(e));
  }
  return Lexicon::from_entries(std::move(entries));
}

struct ConnectiveCandidate {
  std::string surface;
  RelationLabel relation;
  double probability = 0.0;
};

// Selection rule for building a lexicon from association statistics: keep
// candidates strongly associated (probability > 0.95) with exactly one
// relation among the candidate pool. Output sorted by surface, with default
// pattern eligibility and gates assigned.
inline std::vector<ConnectiveEntry> filter_by_association(
    std::span<const ConnectiveCandidate> candidates) {
  std::map<std::string, std::vector<const ConnectiveCandidate*>> by_surface;
  for (const ConnectiveCandidate& c : candidates) {
    if (c.probability < 0.0 || c.probability > 1.0) {
      throw ValidationError("association probability out of [0,1] for '" + c.surface + "'");
    }
    by_surface[c.surface].push_back(&c);
  }
  std::vector<ConnectiveEntry> out;
  for (const auto& [surface, group] : by_surface) {
    RelationLabel first_relation = group.front()->relation;
    bool single_relation = std::all_of(group.begin(), group.end(),
                                       [first_relation](const ConnectiveCandidate* c) {
                                         return c->relation == first_relation;
                                       });
    if (!single_relation) continue;
    const ConnectiveCandidate* best = *std::max_element(
        group.begin(), group.end(), [](const ConnectiveCandidate* a, const ConnectiveCandidate* b) {
          return a->probability < b->probability;
        });
    if (best->probability <= 0.95) continue;
    ConnectiveEntry e = make_entry(surface, best->relation);
    e.association_probability = best->probability;
    out.push_back(std::move(e));
  }
  return out;  // map iteration is already sorted by surface
}

}  // namespace drel
