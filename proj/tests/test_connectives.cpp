#include <catch2/catch_amalgamated.hpp>

#include "drel/connectives.hpp"
#include "drel/pos_tagger.hpp"
#include "support/tmpdir.hpp"

using namespace drel;
using drel::test::TempDir;
using drel::test::write_file;

TEST_CASE("builtin lexicon has the fixed 27 connectives") {
  Lexicon lex = builtin_lexicon();
  CHECK(lex.size() == 27);
  CHECK(lex.count_for(RelationLabel::Comparison) == 4);
  CHECK(lex.count_for(RelationLabel::Contingency) == 6);
  CHECK(lex.count_for(RelationLabel::Expansion) == 11);
  CHECK(lex.count_for(RelationLabel::Temporal) == 6);
}

TEST_CASE("builtin lexicon lookups") {
  Lexicon lex = builtin_lexicon();
  REQUIRE(lex.find("but") != nullptr);
  CHECK(lex.find("but")->relation == RelationLabel::Comparison);
  CHECK(lex.find("since") == nullptr);
  const ConnectiveEntry* multi = lex.find("as a result");
  REQUIRE(multi != nullptr);
  CHECK(multi->relation == RelationLabel::Contingency);
  CHECK(multi->tokens.size() == 3);
}

TEST_CASE("builtin lexicon pattern eligibility and gates") {
  Lexicon lex = builtin_lexicon();
  CHECK(lex.find("and")->allow_p1);
  CHECK_FALSE(lex.find("and")->allow_p2);
  CHECK_FALSE(lex.find("or")->allow_p2);
  CHECK(lex.find("however")->allow_p2);
  CHECK(lex.find("so")->pos_gate == kGateNotDegreeAdverb);
  CHECK(lex.find("then")->pos_gate == kGateNotIfThen);
  CHECK(lex.find("and")->pos_gate == kGateClausalCoordination);
  CHECK(lex.find("but")->pos_gate.empty());
}

TEST_CASE("builtin lexicon is stable across calls") {
  Lexicon a = builtin_lexicon();
  Lexicon b = builtin_lexicon();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.entries()[i].surface == b.entries()[i].surface);
    CHECK(a.entries()[i].relation == b.entries()[i].relation);
  }
}

TEST_CASE("relation_for prefers the longest match") {
  Lexicon lex = builtin_lexicon();
  auto toks = tokenize("as a result they missed", builtin_tagger());
  auto m = lex.relation_for(toks, 0);
  REQUIRE(m.has_value());
  CHECK(m->entry->surface == "as a result");
  CHECK(m->token_count == 3);

  auto but = tokenize("but why", builtin_tagger());
  auto mb = lex.relation_for(but, 0);
  REQUIRE(mb.has_value());
  CHECK(mb->entry->surface == "but");
  CHECK(mb->token_count == 1);

  auto since = tokenize("since then", builtin_tagger());
  CHECK_FALSE(lex.relation_for(since, 0).has_value());
}

TEST_CASE("relation_for never crosses punctuation") {
  Lexicon lex = builtin_lexicon();
  auto toks = tokenize("as, a result", builtin_tagger());
  CHECK_FALSE(lex.relation_for(toks, 0).has_value());
}

TEST_CASE("relation_for rejects an out-of-range start index") {
  Lexicon lex = builtin_lexicon();
  auto toks = tokenize("but still", builtin_tagger());
  CHECK_THROWS_AS(lex.relation_for(toks, toks.size()), std::out_of_range);
}

TEST_CASE("load_lexicon parses tab-separated entries") {
  TempDir dir;
  auto path = write_file(dir.file("lex.tsv"),
                         "# comment line\n"
                         "but\tComparison\tP1_intra,P2_cross\t\t0.97\n");
  Lexicon lex = load_lexicon(path);
  REQUIRE(lex.size() == 1);
  const ConnectiveEntry& e = lex.entries()[0];
  CHECK(e.surface == "but");
  CHECK(e.relation == RelationLabel::Comparison);
  CHECK(e.allow_p1);
  CHECK(e.allow_p2);
  CHECK(e.association_probability == 0.97);
}

TEST_CASE("load_lexicon rejects conflicting duplicate surfaces") {
  TempDir dir;
  auto path = write_file(dir.file("lex.tsv"),
                         "so\tContingency\tP1_intra\n"
                         "so\tTemporal\tP1_intra\n");
  try {
    load_lexicon(path);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("so") != std::string::npos);
  }
}

TEST_CASE("load_lexicon keeps the first of same-relation duplicates") {
  TempDir dir;
  auto path = write_file(dir.file("lex.tsv"),
                         "but\tComparison\tP1_intra\t\t0.97\n"
                         "but\tComparison\tP1_intra,P2_cross\t\t0.99\n");
  Lexicon lex = load_lexicon(path);
  REQUIRE(lex.size() == 1);
  CHECK(lex.entries()[0].association_probability == 0.97);
  CHECK_FALSE(lex.entries()[0].allow_p2);
}

TEST_CASE("load_lexicon reports unknown relation with line number") {
  TempDir dir;
  auto path = write_file(dir.file("lex.tsv"),
                         "but\tComparison\tP1_intra\n"
                         "so\tCausal\tP1_intra\n");
  try {
    load_lexicon(path);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("Causal") != std::string::npos);
  }
}

TEST_CASE("load_lexicon on an empty file yields an empty lexicon") {
  TempDir dir;
  auto path = write_file(dir.file("lex.tsv"), "");
  Lexicon lex = load_lexicon(path);
  CHECK(lex.size() == 0);
}

TEST_CASE("filter_by_association applies the strict threshold") {
  std::vector<ConnectiveCandidate> cands = {
      {"but", RelationLabel::Comparison, 0.97},
      {"since", RelationLabel::Temporal, 0.60},
      {"since", RelationLabel::Contingency, 0.40},
      {"thus", RelationLabel::Contingency, 0.95},  // boundary: dropped
  };
  auto kept = filter_by_association(cands);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].surface == "but");
  CHECK(kept[0].relation == RelationLabel::Comparison);
  CHECK(kept[0].association_probability == 0.97);
}

TEST_CASE("filter_by_association output is sorted by surface") {
  std::vector<ConnectiveCandidate> cands = {
      {"so", RelationLabel::Contingency, 0.99},
      {"but", RelationLabel::Comparison, 0.97},
      {"and", RelationLabel::Expansion, 0.96},
  };
  auto kept = filter_by_association(cands);
  REQUIRE(kept.size() == 3);
  CHECK(kept[0].surface == "and");
  CHECK(kept[1].surface == "but");
  CHECK(kept[2].surface == "so");
  CHECK_FALSE(kept[0].allow_p2);  // defaults assigned
  CHECK(kept[2].pos_gate == kGateNotDegreeAdverb);
}

TEST_CASE("filter_by_association validates probability range") {
  std::vector<ConnectiveCandidate> cands = {{"but", RelationLabel::Comparison, 1.2}};
  CHECK_THROWS_AS(filter_by_association(cands), ValidationError);
}

TEST_CASE("every surface maps to exactly one relation in a valid lexicon") {
  Lexicon lex = builtin_lexicon();
  std::map<std::string, RelationLabel> seen;
  for (const ConnectiveEntry& e : lex.entries()) {
    auto [it, inserted] = seen.emplace(e.surface, e.relation);
    CHECK(inserted);
  }
}
