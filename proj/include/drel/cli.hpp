// Command-line orchestration: mine, stats, split, annotate-sample,
// agreement, train, eval, ablate. Every command validates its inputs, does
// its work in memory, then writes its outputs plus a manifest into --out;
// nothing but the error message is produced on a nonzero exit.
//
// Exit codes: 0 success, 1 unreadable input, 2 invalid input or config,
// 3 training failure, 4 evaluation failure. CLI11 usage errors keep their
// own codes.
#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drel/classifier.hpp"
#include "drel/connectives.hpp"
#include "drel/corpus.hpp"
#include "drel/csv.hpp"
#include "drel/errors.hpp"
#include "drel/extractor.hpp"
#include "drel/features.hpp"
#include "drel/manifest.hpp"
#include "drel/pair_io.hpp"
#include "drel/providers.hpp"
#include "drel/rng.hpp"

namespace drel::cli {

namespace fs = std::filesystem;

inline int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << std::endl;
  return code;
}

namespace detail {

inline std::set<std::string> parse_gates(const std::string& csv) {
  std::set<std::string> gates;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    std::string g(trim_view(item));
    if (g.empty()) continue;
    const auto& known = known_gate_names();
    if (std::find(known.begin(), known.end(), g) == known.end()) {
      throw ValidationError("unknown pos gate '" + g + "'");
    }
    gates.insert(g);
  }
  return gates;
}

inline std::set<Family> parse_families(const std::string& csv) {
  std::set<Family> families;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    std::string f(trim_view(item));
    if (f.empty()) continue;
    auto fam = family_from_name(f);
    if (!fam) throw ValidationError("unknown feature family '" + f + "'");
    families.insert(*fam);
  }
  if (families.empty()) throw ValidationError("no feature families given");
  return families;
}

inline nlohmann::json families_json(const std::set<Family>& families) {
  nlohmann::json arr = nlohmann::json::array();
  for (Family f : families) arr.push_back(std::string(family_name(f)));
  return arr;
}

// Creates the output directory, refuses to reuse one that already holds a
// manifest, and locks it for the duration of the write.
class OutputDir {
 public:
  explicit OutputDir(const fs::path& dir) : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory: " + dir_.string());
    if (fs::exists(dir_ / kManifestName)) {
      throw ValidationError("output directory already contains a manifest: " + dir_.string());
    }
    lock_.emplace(dir_);
  }

  const fs::path& path() const { return dir_; }

  void write_text(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw IoError("cannot write " + (dir_ / name).string());
    out << content;
    written_.push_back(name);
  }

  void write_json(const std::string& name, const nlohmann::json& j) {
    write_text(name, j.dump(2) + "\n");
  }

  void finish(RunManifest manifest) {
    for (const std::string& name : written_) manifest.add_output(dir_, name);
    manifest.write(dir_);
  }

 private:
  fs::path dir_;
  std::optional<DirLock> lock_;
  std::vector<std::string> written_;
};

struct TrainFlags {
  double learning_rate = 0.1;
  double l2_penalty = 1e-4;
  int max_epochs = 200;
  double convergence_tol = 1e-6;
  std::uint64_t seed = 1;

  TrainConfig to_config() const {
    TrainConfig cfg;
    cfg.learning_rate = learning_rate;
    cfg.l2_penalty = l2_penalty;
    cfg.max_epochs = max_epochs;
    cfg.convergence_tol = convergence_tol;
    cfg.shuffle_seed = seed;
    return cfg;
  }

  void add_options(CLI::App* cmd) {
    cmd->add_option("--learning-rate", learning_rate, "gradient descent step size");
    cmd->add_option("--l2", l2_penalty, "L2 regularization strength");
    cmd->add_option("--epochs", max_epochs, "maximum training epochs");
    cmd->add_option("--tol", convergence_tol, "relative loss improvement stop threshold");
    cmd->add_option("--seed", seed, "base training seed");
  }
};

inline std::vector<Example> to_examples(std::span<const RelationPair> pairs,
                                        const FeatureSpace& space,
                                        const ProviderRegistry& registry) {
  std::vector<Example> out;
  out.reserve(pairs.size());
  for (const RelationPair& p : pairs) {
    out.push_back({vectorize_pair(p, space, registry), p.relation});
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// mine / stats

struct MineOptions {
  std::string corpus;
  std::string format = "jsonl";
  std::string lexicon;  // empty = builtin
  std::string out;
  int min_arg_tokens = 3;
  bool require_verb = true;
  int window = 1;
  std::string gates = "not_degree_adverb,not_if_then,clausal_coordination";
  bool p1 = true;
  bool p2 = true;
  bool p2_within = true;
  bool p2_cross = true;
};

inline int cmd_mine(const MineOptions& opts) {
  auto format = corpus_format_from_name(opts.format);
  if (!format) return fail(2, "unknown corpus format '" + opts.format + "'");

  LoadedCorpus corpus;
  try {
    corpus = load_corpus(opts.corpus, *format);
  } catch (const Error& e) {
    return fail(1, e.what());
  }

  Lexicon lexicon;
  try {
    lexicon = opts.lexicon.empty() ? builtin_lexicon() : load_lexicon(opts.lexicon);
  } catch (const Error& e) {
    return fail(2, e.what());
  }

  ExtractionConfig config;
  config.min_arg_tokens = opts.min_arg_tokens;
  config.require_verb = opts.require_verb;
  config.segment_window_sentences = opts.window;
  config.pattern1_enabled = opts.p1;
  config.pattern2_enabled = opts.p2;
  config.p2_within_turn = opts.p2_within;
  config.p2_cross_turn = opts.p2_cross;
  try {
    config.enabled_pos_gates = detail::parse_gates(opts.gates);
    config.validate();

    MiningResult result = mine_corpus(corpus.conversations, lexicon, config);

    detail::OutputDir out(opts.out);
    std::ostringstream pairs_text;
    write_pairs_jsonl(pairs_text, result.pairs);
    out.write_text("pairs.jsonl", pairs_text.str());
    out.write_json("stats.json", stats_to_json(result.stats));
    out.write_text("stats.txt", render_stats_table(result.stats));

    RunManifest manifest;
    manifest.command = "mine";
    manifest.config = {{"corpus", opts.corpus},
                       {"format", opts.format},
                       {"lexicon", opts.lexicon.empty() ? "builtin" : opts.lexicon},
                       {"min_arg_tokens", config.min_arg_tokens},
                       {"require_verb", config.require_verb},
                       {"segment_window_sentences", config.segment_window_sentences},
                       {"enabled_pos_gates", config.enabled_pos_gates},
                       {"pattern1_enabled", config.pattern1_enabled},
                       {"pattern2_enabled", config.pattern2_enabled},
                       {"p2_within_turn", config.p2_within_turn},
                       {"p2_cross_turn", config.p2_cross_turn}};
    manifest.add_input("corpus", opts.corpus);
    if (!opts.lexicon.empty()) manifest.add_input("lexicon", opts.lexicon);
    out.finish(std::move(manifest));

    std::cout << "load report: " << corpus.report.to_json().dump() << "\n"
              << "pairs: " << result.pairs.size() << "\n";
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
}

struct StatsOptions {
  std::string pairs;
  std::string out;
};

inline int cmd_stats(const StatsOptions& opts) {
  try {
    auto pairs = read_pairs_jsonl(opts.pairs);
    DatasetStats stats = compute_stats(pairs);
    detail::OutputDir out(opts.out);
    out.write_json("stats.json", stats_to_json(stats));
    out.write_text("stats.txt", render_stats_table(stats));
    RunManifest manifest;
    manifest.command = "stats";
    manifest.config = {{"pairs", opts.pairs}};
    manifest.add_input("pairs", opts.pairs);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
}

// ---------------------------------------------------------------------------
// split

struct SplitOptions {
  std::string pairs;
  std::string out;
  std::size_t test_size = 400;
  std::uint64_t seed = 1;
  bool stratify = false;
};

namespace detail {

// Proportional per-relation allocation, remainders to the largest
// fractional parts (relation order breaks ties).
inline std::vector<std::size_t> stratified_sample(const std::vector<RelationLabel>& labels,
                                                  std::size_t test_size, std::uint64_t seed) {
  std::array<std::vector<std::size_t>, kNumRelations> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    groups[relation_index(labels[i])].push_back(i);
  }
  double n = static_cast<double>(labels.size());
  std::array<std::size_t, kNumRelations> quota{};
  std::array<double, kNumRelations> frac{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    double exact = static_cast<double>(test_size) * static_cast<double>(groups[k].size()) / n;
    quota[k] = static_cast<std::size_t>(exact);
    frac[k] = exact - static_cast<double>(quota[k]);
    assigned += quota[k];
  }
  while (assigned < test_size) {
    std::size_t best = kNumRelations;
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      if (quota[k] >= groups[k].size()) continue;
      if (best == kNumRelations || frac[k] > frac[best]) best = k;
    }
    if (best == kNumRelations) break;
    quota[best] += 1;
    frac[best] = -1.0;
    assigned += 1;
  }
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    for (std::size_t local : sample_indices(groups[k].size(), std::min(quota[k], groups[k].size()),
                                            seed + k)) {
      picked.push_back(groups[k][local]);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace detail

inline int cmd_split(const SplitOptions& opts) {
  std::vector<std::string> lines;
  std::vector<RelationLabel> labels;
  try {
    std::ifstream in(opts.pairs, std::ios::binary);
    if (!in) throw IoError("cannot open pairs file: " + opts.pairs);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (trim_view(line).empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) {
        throw FormatError(opts.pairs + " line " + std::to_string(line_no) + ": invalid JSON");
      }
      labels.push_back(pair_from_json(j).relation);
      lines.push_back(line);
    }
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }

  if (opts.test_size >= lines.size()) {
    return fail(2, "test size " + std::to_string(opts.test_size) +
                       " must be smaller than the dataset (" + std::to_string(lines.size()) +
                       " pairs)");
  }

  try {
    std::vector<std::size_t> test_idx =
        opts.stratify ? detail::stratified_sample(labels, opts.test_size, opts.seed)
                      : sample_indices(lines.size(), opts.test_size, opts.seed);
    std::vector<bool> in_test(lines.size(), false);
    for (std::size_t i : test_idx) in_test[i] = true;

    std::ostringstream train_text, test_text;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      (in_test[i] ? test_text : train_text) << lines[i] << '\n';
    }

    detail::OutputDir out(opts.out);
    out.write_text("train.jsonl", train_text.str());
    out.write_text("test.jsonl", test_text.str());
    RunManifest manifest;
    manifest.command = "split";
    manifest.config = {{"pairs", opts.pairs},
                       {"test_size", opts.test_size},
                       {"seed", opts.seed},
                       {"stratify", opts.stratify}};
    manifest.add_input("pairs", opts.pairs);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
}

// ---------------------------------------------------------------------------
// annotate-sample / agreement

struct AnnotateOptions {
  std::string pairs;
  std::string out;
  std::size_t sample_size = 400;
  std::uint64_t seed = 1;
};

inline constexpr std::array<std::string_view, 6> kAnnotationColumns = {
    "pair_id", "arg1", "arg2", "auto_relation", "human_relation", "forms_relation"};

inline int cmd_annotate_sample(const AnnotateOptions& opts) {
  std::vector<RelationPair> pairs;
  try {
    pairs = read_pairs_jsonl(opts.pairs);
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
  if (opts.sample_size > pairs.size()) {
    return fail(2, "sample size " + std::to_string(opts.sample_size) +
                       " exceeds the dataset (" + std::to_string(pairs.size()) + " pairs)");
  }
  try {
    auto picked = sample_indices(pairs.size(), opts.sample_size, opts.seed);
    std::ostringstream csv;
    std::vector<std::string> header(kAnnotationColumns.begin(), kAnnotationColumns.end());
    write_csv_row(csv, header);
    for (std::size_t i : picked) {
      std::vector<std::string> row = {std::to_string(i), pairs[i].arg1, pairs[i].arg2,
                                      std::string(relation_name(pairs[i].relation)), "", ""};
      write_csv_row(csv, row);
    }
    detail::OutputDir out(opts.out);
    out.write_text("sample.csv", csv.str());
    RunManifest manifest;
    manifest.command = "annotate-sample";
    manifest.config = {{"pairs", opts.pairs}, {"n", opts.sample_size}, {"seed", opts.seed}};
    manifest.add_input("pairs", opts.pairs);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
}

struct AgreementOptions {
  std::string annotations;
  std::string out;
};

inline int cmd_agreement(const AgreementOptions& opts) {
  try {
    std::ifstream in(opts.annotations, std::ios::binary);
    if (!in) throw IoError("cannot open annotations file: " + opts.annotations);
    auto rows = read_csv(in);
    if (rows.empty()) throw ValidationError("annotations file is empty");
    for (std::size_t c = 0; c < kAnnotationColumns.size(); ++c) {
      if (rows[0].size() <= c || rows[0][c] != kAnnotationColumns[c]) {
        throw ValidationError("unexpected annotation CSV header");
      }
    }
    std::size_t total = 0, annotated = 0, forming = 0, matches = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto& row = rows[r];
      if (row.size() < kAnnotationColumns.size()) {
        throw ValidationError("annotation row " + std::to_string(r) + " has too few columns");
      }
      ++total;
      std::string forms = to_lower(trim_view(row[5]));
      if (forms.empty()) continue;
      bool yes = forms == "yes" || forms == "y" || forms == "true" || forms == "1";
      bool no = forms == "no" || forms == "n" || forms == "false" || forms == "0";
      if (!yes && !no) {
        throw ValidationError("annotation row " + std::to_string(r) +
                              ": forms_relation must be yes/no, got '" + row[5] + "'");
      }
      ++annotated;
      if (!yes) continue;
      ++forming;
      std::string human = to_lower(trim_view(row[4]));
      std::string machine = to_lower(trim_view(row[3]));
      if (!human.empty() && human == machine) ++matches;
    }
    nlohmann::json result = {
        {"rows", total},
        {"annotated", annotated},
        {"forming_relation", forming},
        {"not_forming_relation", annotated - forming},
        {"pct_forming_relation",
         annotated ? 100.0 * static_cast<double>(forming) / static_cast<double>(annotated) : 0.0},
        {"pct_not_forming_relation",
         annotated ? 100.0 * static_cast<double>(annotated - forming) /
                         static_cast<double>(annotated)
                   : 0.0},
        {"label_matches", matches},
        {"pct_label_match_among_forming",
         forming ? 100.0 * static_cast<double>(matches) / static_cast<double>(forming) : 0.0}};

    detail::OutputDir out(opts.out);
    out.write_json("agreement.json", result);
    RunManifest manifest;
    manifest.command = "agreement";
    manifest.config = {{"annotations", opts.annotations}};
    manifest.add_input("annotations", opts.annotations);
    out.finish(std::move(manifest));
    std::cout << "agreement: " << result.dump() << "\n";
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
}

// ---------------------------------------------------------------------------
// train / eval / ablate

struct TrainOptions {
  std::string train;
  std::string out;
  std::string families = "dialogue_act,sentiment,intent,topic,entity_type";
  detail::TrainFlags flags;
};

inline int cmd_train(const TrainOptions& opts) {
  std::vector<RelationPair> pairs;
  std::set<Family> families;
  try {
    pairs = read_pairs_jsonl(opts.train);
    families = detail::parse_families(opts.families);
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
  try {
    ProviderRegistry registry = ProviderRegistry::builtin();
    TrainConfig config = opts.flags.to_config();
    FeatureSpace space = build_feature_space(pairs, registry, families);
    std::vector<Example> examples = detail::to_examples(pairs, space, registry);
    LinearModel model = train(examples, space, config);

    detail::OutputDir out(opts.out);
    out.write_json("model.json", model_to_json(model, config));
    out.write_json("feature_space.json", space.to_json());
    RunManifest manifest;
    manifest.command = "train";
    manifest.config = {{"train", opts.train},
                       {"families", detail::families_json(families)},
                       {"space_fingerprint", space.fingerprint()},
                       {"train_config", config.to_json()}};
    manifest.add_input("train", opts.train);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(3, e.what());
  }
}

struct EvalOptions {
  std::string model;
  std::string space;  // defaults to feature_space.json beside the model
  std::string test;
  std::string out;
};

inline int cmd_eval(const EvalOptions& opts) {
  try {
    fs::path space_path = opts.space.empty()
                              ? fs::path(opts.model).parent_path() / "feature_space.json"
                              : fs::path(opts.space);
    std::ifstream min(opts.model, std::ios::binary);
    if (!min) return fail(1, "cannot open model file: " + opts.model);
    std::ifstream sin(space_path, std::ios::binary);
    if (!sin) return fail(1, "cannot open feature space file: " + space_path.string());

    std::vector<RelationPair> pairs;
    try {
      pairs = read_pairs_jsonl(opts.test);
    } catch (const IoError& e) {
      return fail(1, e.what());
    }

    auto [model, config] = model_from_json(nlohmann::json::parse(min));
    FeatureSpace space = FeatureSpace::from_json(nlohmann::json::parse(sin));
    ProviderRegistry registry = ProviderRegistry::builtin();
    std::vector<Example> examples = detail::to_examples(pairs, space, registry);
    EvalReport report = evaluate(model, examples, space);

    detail::OutputDir out(opts.out);
    out.write_json("report.json", report_to_json(report));
    out.write_text("report.txt", render_report_table(report));
    RunManifest manifest;
    manifest.command = "eval";
    manifest.config = {{"model", opts.model},
                       {"space", space_path.string()},
                       {"test", opts.test},
                       {"train_config", config.to_json()}};
    manifest.add_input("model", opts.model);
    manifest.add_input("space", space_path);
    manifest.add_input("test", opts.test);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(4, std::string("malformed input: ") + e.what());
  } catch (const Error& e) {
    return fail(4, e.what());
  }
}

struct AblateOptions {
  std::string train;
  std::string test;
  std::string out;
  std::string families = "dialogue_act,sentiment,intent,topic,entity_type";
  int runs = 5;
  bool resample = false;
  detail::TrainFlags flags;
};

namespace detail {

// Single-family rows, the All row, and leave-one-out rows over the chosen
// families; collapses to the default plan when all five are given.
inline AblationPlan plan_for(const std::set<Family>& families) {
  AblationPlan plan;
  for (Family f : kAllFamilies) {
    if (families.count(f)) plan.subsets.push_back({std::string(family_name(f)), {f}});
  }
  if (families.size() > 1) {
    plan.subsets.push_back({"All", families});
    for (Family f : kAllFamilies) {
      if (!families.count(f)) continue;
      std::set<Family> rest = families;
      rest.erase(f);
      plan.subsets.push_back({"All - " + std::string(family_name(f)), rest});
    }
  }
  return plan;
}

inline nlohmann::json ablation_to_json(const AblationTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    rows.push_back({{"name", table.rows[i].name},
                    {"best", i == table.best_index},
                    {"report", report_to_json(table.rows[i].report)}});
  }
  return {{"rows", rows}, {"best", table.rows[table.best_index].name}};
}

}  // namespace detail

inline int cmd_ablate(const AblateOptions& opts) {
  std::vector<RelationPair> train_pairs, test_pairs;
  std::set<Family> families;
  try {
    train_pairs = read_pairs_jsonl(opts.train);
    test_pairs = read_pairs_jsonl(opts.test);
    families = detail::parse_families(opts.families);
    if (opts.runs < 1) throw ValidationError("--runs must be >= 1");
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(2, e.what());
  }
  try {
    ProviderRegistry registry = ProviderRegistry::builtin();
    AblationPlan plan = detail::plan_for(families);
    TrainConfig config = opts.flags.to_config();
    RepeatConfig repeat{opts.runs, opts.resample};
    AblationTable table;
    try {
      table = run_ablation(train_pairs, test_pairs, registry, plan, config, repeat);
    } catch (const TrainingError& e) {
      return fail(3, e.what());
    }

    detail::OutputDir out(opts.out);
    out.write_json("ablation.json", detail::ablation_to_json(table));
    out.write_text("ablation.txt", render_ablation_table(table));
    RunManifest manifest;
    manifest.command = "ablate";
    manifest.config = {{"train", opts.train},
                       {"test", opts.test},
                       {"families", detail::families_json(families)},
                       {"runs", opts.runs},
                       {"resample", opts.resample},
                       {"train_config", config.to_json()}};
    manifest.add_input("train", opts.train);
    manifest.add_input("test", opts.test);
    out.finish(std::move(manifest));
    return 0;
  } catch (const IoError& e) {
    return fail(1, e.what());
  } catch (const Error& e) {
    return fail(4, e.what());
  }
}

// ---------------------------------------------------------------------------
// wiring

inline int run(const std::vector<std::string>& args) {
  CLI::App app{"mining and classification of discourse relations in dialogue corpora"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "",
                 "key=value config file with one [section] per subcommand; "
                 "flags override file values");
  app.require_subcommand(1);

  int rc = 0;

  MineOptions mine_opts;
  auto* mine = app.add_subcommand("mine", "extract weakly labeled relation pairs");
  mine->add_option("--corpus", mine_opts.corpus, "corpus file")->required();
  mine->add_option("--format", mine_opts.format, "corpus format: jsonl or csv");
  mine->add_option("--lexicon", mine_opts.lexicon, "connective lexicon TSV (default builtin)");
  mine->add_option("--out", mine_opts.out, "output directory")->required();
  mine->add_option("--min-arg-tokens", mine_opts.min_arg_tokens, "full-sentence token floor");
  mine->add_flag("--require-verb,!--no-require-verb", mine_opts.require_verb,
                 "require a verb in each argument");
  mine->add_option("--window", mine_opts.window, "segment window in sentences");
  mine->add_option("--gates", mine_opts.gates, "comma list of enabled pos gates");
  mine->add_flag("--p1,!--no-p1", mine_opts.p1, "enable pattern 1");
  mine->add_flag("--p2,!--no-p2", mine_opts.p2, "enable pattern 2");
  mine->add_flag("--p2-within,!--no-p2-within", mine_opts.p2_within,
                 "pattern 2 within-turn sub-mode");
  mine->add_flag("--p2-cross,!--no-p2-cross", mine_opts.p2_cross,
                 "pattern 2 cross-turn sub-mode");
  mine->callback([&] { rc = cmd_mine(mine_opts); });

  StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "dataset statistics for a pairs file");
  stats->add_option("--pairs", stats_opts.pairs, "pairs JSONL")->required();
  stats->add_option("--out", stats_opts.out, "output directory")->required();
  stats->callback([&] { rc = cmd_stats(stats_opts); });

  SplitOptions split_opts;
  auto* split = app.add_subcommand("split", "seeded train/test split of a pairs file");
  split->add_option("--pairs", split_opts.pairs, "pairs JSONL")->required();
  split->add_option("--out", split_opts.out, "output directory")->required();
  split->add_option("--test-size", split_opts.test_size, "test set size");
  split->add_option("--seed", split_opts.seed, "sampling seed");
  split->add_flag("--stratify", split_opts.stratify, "stratify by relation");
  split->callback([&] { rc = cmd_split(split_opts); });

  AnnotateOptions annotate_opts;
  auto* annotate = app.add_subcommand("annotate-sample",
                                      "export a random sample as an annotation CSV");
  annotate->add_option("--pairs", annotate_opts.pairs, "pairs JSONL")->required();
  annotate->add_option("--out", annotate_opts.out, "output directory")->required();
  annotate->add_option("-n,--sample-size", annotate_opts.sample_size, "sample size");
  annotate->add_option("--seed", annotate_opts.seed, "sampling seed");
  annotate->callback([&] { rc = cmd_annotate_sample(annotate_opts); });

  AgreementOptions agreement_opts;
  auto* agreement = app.add_subcommand("agreement",
                                       "agreement statistics from a filled annotation CSV");
  agreement->add_option("--annotations", agreement_opts.annotations, "filled sample.csv")
      ->required();
  agreement->add_option("--out", agreement_opts.out, "output directory")->required();
  agreement->callback([&] { rc = cmd_agreement(agreement_opts); });

  TrainOptions train_opts;
  auto* train = app.add_subcommand("train", "train the relation classifier");
  train->add_option("--train", train_opts.train, "training pairs JSONL")->required();
  train->add_option("--out", train_opts.out, "output directory")->required();
  train->add_option("--families", train_opts.families, "comma list of feature families");
  train_opts.flags.add_options(train);
  train->callback([&] { rc = cmd_train(train_opts); });

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "evaluate a trained model");
  eval->add_option("--model", eval_opts.model, "model.json")->required();
  eval->add_option("--space", eval_opts.space,
                   "feature_space.json (default: beside the model)");
  eval->add_option("--test", eval_opts.test, "test pairs JSONL")->required();
  eval->add_option("--out", eval_opts.out, "output directory")->required();
  eval->callback([&] { rc = cmd_eval(eval_opts); });

  AblateOptions ablate_opts;
  auto* ablate = app.add_subcommand("ablate", "feature-family ablation experiment");
  ablate->add_option("--train", ablate_opts.train, "training pairs JSONL")->required();
  ablate->add_option("--test", ablate_opts.test, "test pairs JSONL")->required();
  ablate->add_option("--out", ablate_opts.out, "output directory")->required();
  ablate->add_option("--families", ablate_opts.families, "families the plan is built over");
  ablate->add_option("--runs", ablate_opts.runs, "repetitions per row");
  ablate->add_flag("--resample", ablate_opts.resample, "bootstrap-resample training per run");
  ablate_opts.flags.add_options(ablate);
  ablate->callback([&] { rc = cmd_ablate(ablate_opts); });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return rc;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc));
}

}  // namespace drel::cli
