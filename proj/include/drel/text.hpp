// Text primitives: character spans, coarse POS tags, tokens, sentences,
// normalization, sentence splitting and tokenization for informal dialogue.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace drel {

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  std::size_t length() const { return end - begin; }
  bool operator==(const CharSpan&) const = default;
};

enum class Pos { Verb, Noun, Adj, Adv, Conj, Sconj, Pron, Det, Num, Punct, Other };

inline constexpr std::array<std::string_view, 11> kPosNames = {
    "VERB", "NOUN", "ADJ", "ADV", "CONJ", "SCONJ", "PRON", "DET", "NUM", "PUNCT", "OTHER"};

inline std::string_view pos_name(Pos p) { return kPosNames[static_cast<std::size_t>(p)]; }

struct Token {
  std::string surface;  // lowercased
  Pos pos = Pos::Other;
  CharSpan span;  // into the text the token was cut from
};

struct Sentence {
  std::vector<Token> tokens;
  CharSpan span;  // into the source turn text; token spans use the same origin
};

inline bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline char ascii_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
  return out;
}

inline std::string_view trim_view(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Canonical form used everywhere downstream: common typographic Unicode
// punctuation mapped to its ASCII equivalent, ASCII lowercased, control
// whitespace mapped to plain spaces. Unknown multi-byte sequences pass
// through untouched.
inline std::string normalize_text(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  auto starts = [&](std::string_view pat) {
    return in.size() - i >= pat.size() && in.substr(i, pat.size()) == pat;
  };
  while (i < in.size()) {
    unsigned char c = static_cast<unsigned char>(in[i]);
    if (c < 0x80) {
      if (c == '\t' || c == '\r' || c == '\n') {
        out += ' ';
      } else {
        out += ascii_lower(static_cast<char>(c));
      }
      ++i;
      continue;
    }
    if (starts("‘") || starts("’") || starts("ʼ")) {
      out += '\'';
      i += (c == 0xca) ? 2 : 3;
    } else if (starts("“") || starts("”")) {
      out += '"';
      i += 3;
    } else if (starts("–") || starts("—")) {
      out += '-';
      i += 3;
    } else if (starts("…")) {
      out += "...";
      i += 3;
    } else if (starts(" ")) {
      out += ' ';
      i += 2;
    } else {
      out += in[i];
      ++i;
    }
  }
  return out;
}

namespace detail {

inline constexpr std::array<std::string_view, 12> kAbbreviations = {
    "mr.", "mrs.", "ms.", "dr.", "st.", "vs.", "etc.", "e.g.", "i.e.", "prof.", "jr.", "sr."};

// True when the '.' ending at `dot_pos` (inclusive) closes a known
// abbreviation rather than a sentence.
inline bool ends_with_abbreviation(std::string_view text, std::size_t dot_pos) {
  for (std::string_view abbr : kAbbreviations) {
    if (dot_pos + 1 < abbr.size()) continue;
    std::size_t start = dot_pos + 1 - abbr.size();
    if (text.substr(start, abbr.size()) != abbr) continue;
    if (start == 0 || is_space(text[start - 1])) return true;
  }
  return false;
}

}  // namespace detail

// Sentence boundaries fall after runs of {...!?} followed by whitespace or
// end of text; a hardcoded abbreviation list never splits. Text without a
// terminator is a single sentence. Returned spans are trimmed and ordered.
inline std::vector<CharSpan> split_sentences(std::string_view text) {
  std::vector<CharSpan> spans;
  auto is_term = [](char c) { return c == '.' || c == '!' || c == '?'; };
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    std::string_view raw = text.substr(start, end - start);
    std::string_view t = trim_view(raw);
    if (!t.empty()) {
      std::size_t b = start + static_cast<std::size_t>(t.data() - raw.data());
      spans.push_back({b, b + t.size()});
    }
    start = end;
  };
  while (i < text.size()) {
    if (!is_term(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end + 1 < text.size() && is_term(text[run_end + 1])) ++run_end;
    bool at_end = run_end + 1 >= text.size();
    bool followed_by_space = !at_end && is_space(text[run_end + 1]);
    bool abbrev = (run_end == i) && text[i] == '.' && detail::ends_with_abbreviation(text, i);
    if ((at_end || followed_by_space) && !abbrev) {
      flush(run_end + 1);
    }
    i = run_end + 1;
  }
  flush(text.size());
  return spans;
}

// Whitespace split with leading/trailing punctuation peeled into separate
// PUNCT tokens. "$" stays attached when it opens a number ("$5"); internal
// punctuation (apostrophes, hyphens, decimal points) stays inside the token.
// Surfaces are lowercased. POS is PUNCT for punctuation tokens and OTHER for
// the rest; see PosTagger for tag assignment.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t b, std::size_t e, Pos pos) {
    tokens.push_back(Token{to_lower(text.substr(b, e - b)), pos, {b, e}});
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    std::size_t a = i, b = j;
    while (a < b && is_ascii_punct(text[a])) {
      bool currency = text[a] == '$' && a + 1 < b &&
                      std::isdigit(static_cast<unsigned char>(text[a + 1]));
      if (currency) break;
      emit(a, a + 1, Pos::Punct);
      ++a;
    }
    std::size_t core_end = b;
    while (core_end > a && is_ascii_punct(text[core_end - 1])) --core_end;
    if (core_end > a) emit(a, core_end, Pos::Other);
    for (std::size_t p = core_end; p < b; ++p) emit(p, p + 1, Pos::Punct);
    i = j;
  }
  return tokens;
}

// Joins token surfaces with single spaces, then reattaches punctuation:
// no space before closers and no space after openers. Yields a normalized
// rendering of the tokenized text.
inline std::string reconstruct(const std::vector<Token>& tokens) {
  constexpr std::string_view closers = ".,!?;:)]}'\"";
  constexpr std::string_view openers = "([{\"";
  std::string out;
  bool suppress_space = true;
  for (const Token& t : tokens) {
    bool closer = t.pos == Pos::Punct && t.surface.size() == 1 &&
                  closers.find(t.surface[0]) != std::string_view::npos;
    if (!out.empty() && !suppress_space && !closer) out += ' ';
    out += t.surface;
    suppress_space = t.pos == Pos::Punct && t.surface.size() == 1 &&
                     openers.find(t.surface[0]) != std::string_view::npos;
  }
  return out;
}

inline std::size_t count_non_punct(const std::vector<Token>& tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token& t) { return t.pos != Pos::Punct; }));
}

}  // namespace drel
