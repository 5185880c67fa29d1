// Dialogue corpus ingestion: a uniform conversation/turn model loaded from
// CSV (one conversation per row) or JSONL (one conversation per line).
// Text is normalized once at load; everything downstream is string-based
// and relies on that canonical form.
#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "drel/csv.hpp"
#include "drel/errors.hpp"
#include "drel/text.hpp"

namespace drel {

enum class Speaker { First, Second };

struct Turn {
  Speaker speaker = Speaker::First;
  std::string text;  // normalized, non-empty after trimming
  int index = 0;     // contiguous from 0 within the conversation

  bool operator==(const Turn&) const = default;
};

struct Conversation {
  std::string id;  // unique within a loaded corpus
  std::optional<std::string> topic;
  std::vector<Turn> turns;  // non-empty

  bool operator==(const Conversation&) const = default;
};

enum class CorpusFormat { CsvColumnsPerTurn, JsonlConversations };

inline std::optional<CorpusFormat> corpus_format_from_name(std::string_view name) {
  if (name == "csv" || name == "csv_columns_per_turn") return CorpusFormat::CsvColumnsPerTurn;
  if (name == "jsonl" || name == "jsonl_conversations") return CorpusFormat::JsonlConversations;
  return std::nullopt;
}

struct LoadReport {
  std::size_t kept = 0;
  std::size_t dropped = 0;
  std::vector<std::string> errors;

  nlohmann::json to_json() const {
    return {{"kept", kept}, {"dropped", dropped}, {"errors", errors}};
  }
};

struct LoadedCorpus {
  std::vector<Conversation> conversations;
  LoadReport report;
};

namespace detail {

// Normalizes raw turn strings, drops empties, reindexes contiguously.
inline std::vector<Turn> build_turns(const std::vector<std::string>& raw) {
  std::vector<Turn> turns;
  for (const std::string& r : raw) {
    std::string norm = normalize_text(r);
    std::string_view trimmed = trim_view(norm);
    if (trimmed.empty()) continue;
    Turn t;
    t.index = static_cast<int>(turns.size());
    t.speaker = (t.index % 2 == 0) ? Speaker::First : Speaker::Second;
    t.text = std::string(trimmed);
    turns.push_back(std::move(t));
  }
  return turns;
}

struct RecordOutcome {
  std::optional<Conversation> conversation;
  std::optional<std::string> error;
};

inline RecordOutcome parse_jsonl_record(const std::string& line, std::size_t line_no) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  auto fail = [&](std::string_view what) {
    return RecordOutcome{std::nullopt,
                         "line " + std::to_string(line_no) + ": " + std::string(what)};
  };
  if (j.is_discarded() || !j.is_object()) return fail("not a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) return fail("missing string field 'id'");
  if (!j.contains("turns") || !j["turns"].is_array()) return fail("missing array field 'turns'");
  Conversation c;
  c.id = j["id"].get<std::string>();
  if (j.contains("topic") && j["topic"].is_string()) {
    c.topic = normalize_text(j["topic"].get<std::string>());
  }
  std::vector<std::string> raw;
  for (const auto& t : j["turns"]) {
    if (!t.is_string()) return fail("non-string turn");
    raw.push_back(t.get<std::string>());
  }
  c.turns = build_turns(raw);
  return {std::move(c), std::nullopt};
}

}  // namespace detail

// Loads every parseable conversation in file order. Conversations with zero
// non-empty turns are dropped and counted; malformed records are collected
// as record-level errors. More than half the records failing to parse is a
// corpus-format error.
inline LoadedCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  if (std::filesystem::is_directory(path)) {
    throw IoError("corpus path is a directory, not a file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());

  LoadedCorpus out;
  std::vector<detail::RecordOutcome> outcomes;

  if (format == CorpusFormat::JsonlConversations) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (trim_view(line).empty()) continue;
      outcomes.push_back(detail::parse_jsonl_record(line, line_no));
    }
  } else {
    auto rows = read_csv(in);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      if (row.empty() || (row.size() == 1 && trim_view(row[0]).empty())) continue;
      Conversation c;
      c.id = std::to_string(r + 1);
      std::string topic = normalize_text(row[0]);
      std::string_view tt = trim_view(topic);
      if (!tt.empty()) c.topic = std::string(tt);
      std::vector<std::string> raw(row.begin() + 1, row.end());
      c.turns = detail::build_turns(raw);
      outcomes.push_back({std::move(c), std::nullopt});
    }
  }

  std::size_t malformed = 0;
  std::unordered_set<std::string> seen_ids;
  for (auto& rec : outcomes) {
    if (rec.error) {
      ++malformed;
      out.report.dropped += 1;
      out.report.errors.push_back(*rec.error);
      continue;
    }
    Conversation& c = *rec.conversation;
    if (c.turns.empty()) {
      out.report.dropped += 1;
      continue;
    }
    if (!seen_ids.insert(c.id).second) {
      ++malformed;
      out.report.dropped += 1;
      out.report.errors.push_back("duplicate conversation id: " + c.id);
      continue;
    }
    out.conversations.push_back(std::move(c));
  }
  out.report.kept = out.conversations.size();

  if (!outcomes.empty() && malformed * 2 > outcomes.size()) {
    throw FormatError("more than half of the records in " + path.string() +
                      " failed to parse (" + std::to_string(malformed) + "/" +
                      std::to_string(outcomes.size()) + ")");
  }
  return out;
}

// Canonical JSON rendering of a loaded corpus; used for determinism checks
// and debugging.
inline nlohmann::json corpus_to_json(const std::vector<Conversation>& convs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Conversation& c : convs) {
    nlohmann::json turns = nlohmann::json::array();
    for (const Turn& t : c.turns) turns.push_back(t.text);
    arr.push_back({{"id", c.id},
                   {"topic", c.topic ? nlohmann::json(*c.topic) : nlohmann::json(nullptr)},
                   {"turns", turns}});
  }
  return arr;
}

}  // namespace drel
