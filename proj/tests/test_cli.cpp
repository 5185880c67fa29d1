#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "drel/cli.hpp"
#include "support/tmpdir.hpp"

using namespace drel;
using drel::test::TempDir;
using drel::test::read_file;
using drel::test::write_file;

namespace {

int run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "drel");
  return cli::run(args);
}

std::string small_fixture() { return drel::test::fixture("fixture_small.jsonl").string(); }

// mines the small fixture into dir/mine and returns that path
std::filesystem::path mine_fixture(const TempDir& dir, const std::string& name = "mine") {
  auto out = dir.file(name);
  REQUIRE(run_args({"mine", "--corpus", small_fixture(), "--out", out.string()}) == 0);
  return out;
}

std::size_t line_count(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("mine writes pairs, stats and a verifying manifest") {
  TempDir dir;
  auto out = mine_fixture(dir);
  CHECK(std::filesystem::exists(out / "pairs.jsonl"));
  CHECK(std::filesystem::exists(out / "stats.json"));
  CHECK(std::filesystem::exists(out / "stats.txt"));
  CHECK(std::filesystem::exists(out / "manifest.json"));
  CHECK(verify_manifest(out));
  CHECK(line_count(out / "pairs.jsonl") == 10);

  auto stats = nlohmann::json::parse(read_file(out / "stats.json"));
  CHECK(stats["total_pairs"] == 10);
  CHECK(stats["per_relation"]["Contingency"] == 5);

  // the text table leads with the totals and the four relation rows in order
  std::string table = read_file(out / "stats.txt");
  std::size_t p0 = table.find("pairs (all relations)");
  std::size_t p1 = table.find("pairs 'Comparison'");
  std::size_t p2 = table.find("pairs 'Contingency'");
  std::size_t p3 = table.find("pairs 'Expansion'");
  std::size_t p4 = table.find("pairs 'Temporal'");
  REQUIRE(p4 != std::string::npos);
  CHECK(p0 < p1);
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  CHECK(p3 < p4);
}

TEST_CASE("mine refuses to reuse an output directory") {
  TempDir dir;
  auto out = mine_fixture(dir);
  CHECK(run_args({"mine", "--corpus", small_fixture(), "--out", out.string()}) == 2);
}

TEST_CASE("mine output is identical across runs") {
  TempDir dir;
  auto a = mine_fixture(dir, "a");
  auto b = mine_fixture(dir, "b");
  CHECK(read_file(a / "pairs.jsonl") == read_file(b / "pairs.jsonl"));
  CHECK(read_file(a / "stats.json") == read_file(b / "stats.json"));
  CHECK(read_file(a / "stats.txt") == read_file(b / "stats.txt"));
}

TEST_CASE("mine reads the CSV corpus layout") {
  TempDir dir;
  auto csv = write_file(dir.file("c.csv"),
                        "shopping,\"they had a $5 off the price, so i bought it.\"\n"
                        "music,it's a great album.,\"however, it's probably not their best.\"\n");
  auto out = dir.file("out");
  REQUIRE(run_args({"mine", "--corpus", csv.string(), "--format", "csv", "--out",
                    out.string()}) == 0);
  auto stats = nlohmann::json::parse(read_file(out / "stats.json"));
  CHECK(stats["total_pairs"] == 2);
  CHECK(stats["per_relation"]["Contingency"] == 1);
  CHECK(stats["per_relation"]["Comparison"] == 1);
}

TEST_CASE("the full mine-split-train-eval chain is reproducible") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();
  auto chain = [&](const std::string& tag) {
    auto split_out = dir.file("split_" + tag);
    REQUIRE(run_args({"split", "--pairs", pairs, "--out", split_out.string(), "--test-size",
                      "4", "--seed", "11"}) == 0);
    auto model_out = dir.file("model_" + tag);
    REQUIRE(run_args({"train", "--train", (split_out / "train.jsonl").string(), "--out",
                      model_out.string(), "--epochs", "40"}) == 0);
    auto eval_out = dir.file("eval_" + tag);
    REQUIRE(run_args({"eval", "--model", (model_out / "model.json").string(), "--test",
                      (split_out / "test.jsonl").string(), "--out", eval_out.string()}) == 0);
    return read_file(model_out / "model.json") + read_file(eval_out / "report.json");
  };
  CHECK(chain("a") == chain("b"));
}

TEST_CASE("mine exit codes for bad inputs") {
  TempDir dir;
  CHECK(run_args({"mine", "--corpus", dir.path().string(), "--out",
                  dir.file("out").string()}) == 1);
  CHECK(run_args({"mine", "--corpus", "/missing/nowhere.jsonl", "--out",
                  dir.file("out2").string()}) == 1);

  auto bad_lex = write_file(dir.file("bad.tsv"), "so\tContingency\tP1_intra\nso\tTemporal\tP1_intra\n");
  CHECK(run_args({"mine", "--corpus", small_fixture(), "--lexicon", bad_lex.string(), "--out",
                  dir.file("out3").string()}) == 2);

  CHECK(run_args({"mine", "--corpus", small_fixture(), "--format", "weird", "--out",
                  dir.file("out4").string()}) == 2);
  CHECK(run_args({"mine", "--corpus", small_fixture(), "--gates", "bogus_gate", "--out",
                  dir.file("out5").string()}) == 2);
}

TEST_CASE("mine respects a locked output directory") {
  TempDir dir;
  auto out = dir.file("locked");
  std::filesystem::create_directories(out / ".drel.lock");
  CHECK(run_args({"mine", "--corpus", small_fixture(), "--out", out.string()}) == 2);
}

TEST_CASE("mine config file values apply under flag precedence") {
  TempDir dir;
  auto config = write_file(dir.file("drel.ini"), "[mine]\ngates=\"not_if_then\"\n");

  auto out_default = mine_fixture(dir, "default");
  auto out_config = dir.file("config");
  REQUIRE(run_args({"--config", config.string(), "mine", "--corpus", small_fixture(), "--out",
                    out_config.string()}) == 0);
  // disabling the degree-adverb gate via config admits more pairs
  CHECK(line_count(out_config / "pairs.jsonl") > line_count(out_default / "pairs.jsonl"));

  auto out_flag = dir.file("flag");
  REQUIRE(run_args({"--config", config.string(), "mine", "--gates",
                    "not_degree_adverb,not_if_then,clausal_coordination", "--corpus",
                    small_fixture(), "--out", out_flag.string()}) == 0);
  CHECK(read_file(out_flag / "pairs.jsonl") == read_file(out_default / "pairs.jsonl"));
}

TEST_CASE("stats command reproduces mine stats") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto out = dir.file("stats");
  REQUIRE(run_args({"stats", "--pairs", (mined / "pairs.jsonl").string(), "--out",
                    out.string()}) == 0);
  CHECK(read_file(out / "stats.json") == read_file(mined / "stats.json"));
  CHECK(verify_manifest(out));
}

TEST_CASE("split partitions deterministically") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();

  auto out1 = dir.file("s1");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", out1.string(), "--test-size", "4",
                    "--seed", "7"}) == 0);
  CHECK(line_count(out1 / "test.jsonl") == 4);
  CHECK(line_count(out1 / "train.jsonl") == 6);

  auto out2 = dir.file("s2");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", out2.string(), "--test-size", "4",
                    "--seed", "7"}) == 0);
  CHECK(read_file(out1 / "test.jsonl") == read_file(out2 / "test.jsonl"));
  CHECK(read_file(out1 / "train.jsonl") == read_file(out2 / "train.jsonl"));

  // disjoint and exhaustive: train + test lines = original lines
  std::set<std::string> seen;
  for (const char* name : {"train.jsonl", "test.jsonl"}) {
    std::ifstream in(out1 / name);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) CHECK(seen.insert(line).second);
    }
  }
  std::ifstream in(pairs);
  std::string line;
  std::size_t total = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++total;
    CHECK(seen.count(line));
  }
  CHECK(seen.size() == total);

  auto out3 = dir.file("s3");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", out3.string(), "--test-size", "4",
                    "--seed", "8"}) == 0);
  CHECK(read_file(out1 / "test.jsonl") != read_file(out3 / "test.jsonl"));
}

TEST_CASE("split edge cases") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();

  auto zero = dir.file("zero");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", zero.string(), "--test-size", "0"}) == 0);
  CHECK(line_count(zero / "test.jsonl") == 0);
  CHECK(line_count(zero / "train.jsonl") == 10);

  CHECK(run_args({"split", "--pairs", pairs, "--out", dir.file("big").string(), "--test-size",
                  "10"}) == 2);
  // nothing is written on a nonzero exit
  CHECK_FALSE(std::filesystem::exists(dir.file("big")));
  CHECK(run_args({"split", "--pairs", "/missing.jsonl", "--out",
                  dir.file("m").string()}) == 1);
  CHECK_FALSE(std::filesystem::exists(dir.file("m")));
}

TEST_CASE("stratified split respects class proportions") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto out = dir.file("strat");
  REQUIRE(run_args({"split", "--pairs", (mined / "pairs.jsonl").string(), "--out", out.string(),
                    "--test-size", "5", "--seed", "3", "--stratify"}) == 0);
  // fixture has 5 Contingency / 3 Comparison / 1 Expansion / 1 Temporal;
  // a stratified 5-sample takes 2-3 Contingency and 1-2 Comparison
  std::ifstream in(out / "test.jsonl");
  std::string line;
  std::map<std::string, int> by_relation;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    by_relation[nlohmann::json::parse(line)["relation"].get<std::string>()] += 1;
  }
  CHECK(by_relation["Contingency"] >= 2);
  CHECK(by_relation["Comparison"] >= 1);
}

TEST_CASE("annotate-sample writes the annotation instrument") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();
  auto out = dir.file("ann");
  REQUIRE(run_args({"annotate-sample", "--pairs", pairs, "--out", out.string(), "-n", "5",
                    "--seed", "2"}) == 0);
  std::ifstream in(out / "sample.csv");
  auto rows = read_csv(in);
  REQUIRE(rows.size() == 6);  // header + 5
  CHECK(rows[0] == std::vector<std::string>{"pair_id", "arg1", "arg2", "auto_relation",
                                            "human_relation", "forms_relation"});
  CHECK(rows[1].size() == 6);

  auto empty = dir.file("ann0");
  REQUIRE(run_args({"annotate-sample", "--pairs", pairs, "--out", empty.string(), "-n", "0"}) ==
          0);
  std::ifstream in0(empty / "sample.csv");
  CHECK(read_csv(in0).size() == 1);

  CHECK(run_args({"annotate-sample", "--pairs", pairs, "--out", dir.file("annbig").string(),
                  "-n", "11"}) == 2);
}

TEST_CASE("agreement computes the two sample statistics") {
  TempDir dir;
  std::ostringstream csv;
  csv << "pair_id,arg1,arg2,auto_relation,human_relation,forms_relation\n";
  // 10 annotated rows: 8 form a relation, 6 of those match the auto label
  for (int i = 0; i < 6; ++i) {
    csv << i << ",a,b,Comparison,Comparison,yes\n";
  }
  csv << "6,a,b,Comparison,Temporal,yes\n";
  csv << "7,a,b,Contingency,Expansion,yes\n";
  csv << "8,a,b,Comparison,,no\n";
  csv << "9,a,b,Comparison,,no\n";
  csv << "10,a,b,Comparison,,\n";  // unannotated row is excluded
  auto path = write_file(dir.file("filled.csv"), csv.str());

  auto out = dir.file("agree");
  REQUIRE(run_args({"agreement", "--annotations", path.string(), "--out", out.string()}) == 0);
  auto j = nlohmann::json::parse(read_file(out / "agreement.json"));
  CHECK(j["rows"] == 11);
  CHECK(j["annotated"] == 10);
  CHECK(j["forming_relation"] == 8);
  CHECK(j["pct_forming_relation"].get<double>() == Catch::Approx(80.0));
  CHECK(j["pct_not_forming_relation"].get<double>() == Catch::Approx(20.0));
  CHECK(j["label_matches"] == 6);
  CHECK(j["pct_label_match_among_forming"].get<double>() == Catch::Approx(75.0));
}

TEST_CASE("train then eval end to end") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();
  auto split_out = dir.file("split");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", split_out.string(), "--test-size", "4",
                    "--seed", "5"}) == 0);

  auto model_out = dir.file("model");
  REQUIRE(run_args({"train", "--train", (split_out / "train.jsonl").string(), "--out",
                    model_out.string(), "--epochs", "50"}) == 0);
  CHECK(std::filesystem::exists(model_out / "model.json"));
  CHECK(std::filesystem::exists(model_out / "feature_space.json"));
  CHECK(verify_manifest(model_out));

  auto eval_out = dir.file("eval");
  REQUIRE(run_args({"eval", "--model", (model_out / "model.json").string(), "--test",
                    (split_out / "test.jsonl").string(), "--out", eval_out.string()}) == 0);
  auto report = nlohmann::json::parse(read_file(eval_out / "report.json"));

  // confusion row sums equal the gold counts of the test file
  std::map<std::string, double> gold;
  std::ifstream in(split_out / "test.jsonl");
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) gold[nlohmann::json::parse(line)["relation"].get<std::string>()] += 1;
  }
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    double row_sum = 0;
    for (double v : report["confusion"][k]) row_sum += v;
    CHECK(row_sum == Catch::Approx(gold[std::string(kRelationNames[k])]).margin(1e-12));
  }
}

TEST_CASE("eval detects a model/space mismatch") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();

  auto model_a = dir.file("ma");
  REQUIRE(run_args({"train", "--train", pairs, "--out", model_a.string(), "--families",
                    "dialogue_act", "--epochs", "5"}) == 0);
  auto model_b = dir.file("mb");
  REQUIRE(run_args({"train", "--train", pairs, "--out", model_b.string(), "--families",
                    "sentiment,topic", "--epochs", "5"}) == 0);

  CHECK(run_args({"eval", "--model", (model_a / "model.json").string(), "--space",
                  (model_b / "feature_space.json").string(), "--test", pairs, "--out",
                  dir.file("bad").string()}) == 4);
}

TEST_CASE("train and eval error codes") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();
  CHECK(run_args({"train", "--train", "/missing.jsonl", "--out",
                  dir.file("t1").string()}) == 1);
  CHECK(run_args({"train", "--train", pairs, "--families", "nonsense", "--out",
                  dir.file("t2").string()}) == 2);
  CHECK(run_args({"train", "--train", pairs, "--learning-rate", "-1", "--out",
                  dir.file("t3").string()}) == 3);
  CHECK(run_args({"eval", "--model", "/missing/model.json", "--test", pairs, "--out",
                  dir.file("e1").string()}) == 1);
}

TEST_CASE("ablate emits one row per subset with the best marked") {
  TempDir dir;
  auto mined = mine_fixture(dir);
  auto pairs = (mined / "pairs.jsonl").string();
  auto split_out = dir.file("split");
  REQUIRE(run_args({"split", "--pairs", pairs, "--out", split_out.string(), "--test-size", "4",
                    "--seed", "5"}) == 0);

  auto out = dir.file("ablate");
  REQUIRE(run_args({"ablate", "--train", (split_out / "train.jsonl").string(), "--test",
                    (split_out / "test.jsonl").string(), "--out", out.string(), "--families",
                    "dialogue_act,sentiment", "--runs", "2", "--epochs", "20"}) == 0);
  auto j = nlohmann::json::parse(read_file(out / "ablation.json"));
  REQUIRE(j["rows"].size() == 5);  // 2 singles + All + 2 leave-one-out
  CHECK(j["rows"][0]["name"] == "dialogue_act");
  CHECK(j["rows"][1]["name"] == "sentiment");
  CHECK(j["rows"][2]["name"] == "All");
  CHECK(j["rows"][3]["name"] == "All - dialogue_act");
  CHECK(j["rows"][4]["name"] == "All - sentiment");
  int best_count = 0;
  for (const auto& row : j["rows"]) {
    if (row["best"].get<bool>()) ++best_count;
    CHECK(row["report"]["n_runs"] == 2);
    CHECK(row["report"]["runs"].size() == 2);
  }
  CHECK(best_count == 1);
  CHECK(std::filesystem::exists(out / "ablation.txt"));
}

TEST_CASE("usage errors do not reach the commands") {
  CHECK(run_args({"mine"}) != 0);       // missing required options
  CHECK(run_args({"frobnicate"}) != 0);  // unknown subcommand
  CHECK(run_args({}) != 0);              // no subcommand
}
