// Wire formats for mined pairs and dataset statistics: JSONL with sorted
// keys (byte-stable across runs), a stats JSON object, and an aligned
// plain-text stats table.
#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "drel/errors.hpp"
#include "drel/extractor.hpp"

namespace drel {

inline nlohmann::json pair_to_json(const RelationPair& p) {
  nlohmann::json j;
  j["arg1"] = p.arg1;
  j["arg2"] = p.arg2;
  j["relation"] = std::string(relation_name(p.relation));
  j["connective"] = p.connective;
  j["pattern"] = std::string(pattern_name(p.pattern));
  j["conv_id"] = p.provenance.conv_id;
  j["topic"] = p.topic ? nlohmann::json(*p.topic) : nlohmann::json(nullptr);
  if (p.provenance.arg1_turn == p.provenance.arg2_turn) {
    j["turns"] = {p.provenance.arg1_turn};
  } else {
    j["turns"] = {p.provenance.arg1_turn, p.provenance.arg2_turn};
  }
  j["spans"] = {
      {"arg1", {p.provenance.arg1_span.begin, p.provenance.arg1_span.end}},
      {"arg2", {p.provenance.arg2_span.begin, p.provenance.arg2_span.end}},
      {"connective", {p.provenance.connective_span.begin, p.provenance.connective_span.end}},
  };
  if (p.pattern == Pattern::P2Cross) j["comma_after_connective"] = p.comma_after_connective;
  return j;
}

inline RelationPair pair_from_json(const nlohmann::json& j) {
  RelationPair p;
  p.arg1 = j.at("arg1").get<std::string>();
  p.arg2 = j.at("arg2").get<std::string>();
  auto rel = relation_from_name(j.at("relation").get<std::string>());
  if (!rel) throw FormatError("unknown relation label: " + j.at("relation").dump());
  p.relation = *rel;
  p.connective = j.at("connective").get<std::string>();
  p.pattern = j.at("pattern").get<std::string>() == "P1" ? Pattern::P1Intra : Pattern::P2Cross;
  p.provenance.conv_id = j.at("conv_id").get<std::string>();
  if (j.contains("topic") && j["topic"].is_string()) p.topic = j["topic"].get<std::string>();
  const auto& turns = j.at("turns");
  p.provenance.arg1_turn = turns.at(0).get<int>();
  p.provenance.arg2_turn = turns.size() > 1 ? turns.at(1).get<int>() : p.provenance.arg1_turn;
  const auto& spans = j.at("spans");
  auto span = [&](const char* key) {
    return CharSpan{spans.at(key).at(0).get<std::size_t>(),
                    spans.at(key).at(1).get<std::size_t>()};
  };
  p.provenance.arg1_span = span("arg1");
  p.provenance.arg2_span = span("arg2");
  p.provenance.connective_span = span("connective");
  if (j.contains("comma_after_connective")) {
    p.comma_after_connective = j["comma_after_connective"].get<bool>();
  }
  return p;
}

inline void write_pairs_jsonl(std::ostream& out, std::span<const RelationPair> pairs) {
  for (const RelationPair& p : pairs) out << pair_to_json(p).dump() << '\n';
}

inline std::vector<RelationPair> read_pairs_jsonl(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) {
    throw IoError("pairs path is a directory, not a file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pairs file: " + path.string());
  std::vector<RelationPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim_view(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw FormatError(path.string() + " line " + std::to_string(line_no) +
                        ": invalid JSON");
    }
    try {
      pairs.push_back(pair_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pairs;
}

inline nlohmann::json stats_to_json(const DatasetStats& s) {
  nlohmann::json per_relation;
  for (RelationLabel r : kAllRelations) {
    per_relation[std::string(relation_name(r))] = s.per_relation[relation_index(r)];
  }
  nlohmann::json per_connective;
  for (const auto& [conn, n] : s.per_connective) per_connective[conn] = n;
  return {
      {"total_pairs", s.total_pairs},
      {"avg_tokens_arg1", s.avg_tokens_arg1},
      {"avg_tokens_arg2", s.avg_tokens_arg2},
      {"per_relation", per_relation},
      {"per_pattern",
       {{"P1", s.pairs_p1},
        {"P2", s.pairs_p2},
        {"P2_within_turn", s.pairs_p2_within_turn},
        {"P2_cross_turn", s.pairs_p2_cross_turn}}},
      {"per_connective", per_connective},
  };
}

// Aligned text table: headline rows first (total, average argument lengths,
// per-relation counts), then pattern and connective breakdowns.
inline std::string render_stats_table(const DatasetStats& s) {
  std::ostringstream out;
  auto row = [&](std::string_view label, const std::string& value) {
    out << std::left << std::setw(28) << label << value << '\n';
  };
  auto fmt1 = [](double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(1) << v;
    return o.str();
  };
  row("pairs (all relations)", std::to_string(s.total_pairs));
  row("avg tokens arg1", fmt1(s.avg_tokens_arg1));
  row("avg tokens arg2", fmt1(s.avg_tokens_arg2));
  for (RelationLabel r : kAllRelations) {
    row("pairs '" + std::string(relation_name(r)) + "'",
        std::to_string(s.per_relation[relation_index(r)]));
  }
  out << '\n' << "pairs by pattern\n";
  row("  P1 (intra-sentence)", std::to_string(s.pairs_p1));
  row("  P2 (adjacent sentences)", std::to_string(s.pairs_p2));
  row("    within turn", std::to_string(s.pairs_p2_within_turn));
  row("    across turns", std::to_string(s.pairs_p2_cross_turn));
  out << '\n' << "pairs by connective\n";
  for (const auto& [conn, n] : s.per_connective) {
    row("  " + conn, std::to_string(n));
  }
  return out.str();
}

}  // namespace drel
