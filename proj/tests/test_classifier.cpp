#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drel/classifier.hpp"
#include "support/metrics_oracle.hpp"

using namespace drel;
using Catch::Approx;

namespace {

FeatureSpace toy_space(std::size_t n) {
  std::vector<FeatureName> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back({Family::DialogueAct, "f" + std::to_string(i), Side::Arg1});
  }
  return FeatureSpace::from_names(std::move(names));
}

// 4 classes, one perfectly indicative feature each, plus a shared noise
// feature.
std::vector<Example> separable_set(const FeatureSpace& space, int per_class) {
  REQUIRE(space.size() >= 5);
  std::vector<Example> out;
  for (int rep = 0; rep < per_class; ++rep) {
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      Example ex;
      ex.x.active = {k};
      if (rep % 2 == 0) ex.x.active.push_back(4);
      ex.y = kAllRelations[k];
      out.push_back(ex);
    }
  }
  return out;
}

std::vector<Example> random_examples(std::mt19937_64& rng, std::size_t n_features,
                                     std::size_t n_examples) {
  std::vector<Example> out;
  for (std::size_t i = 0; i < n_examples; ++i) {
    Example ex;
    for (std::size_t j = 0; j < n_features; ++j) {
      if (rng() % 3 == 0) ex.x.active.push_back(j);
    }
    ex.y = kAllRelations[rng() % kNumRelations];
    out.push_back(ex);
  }
  return out;
}

LinearModel random_model(std::mt19937_64& rng, std::size_t dim) {
  LinearModel m = LinearModel::zeros(dim);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (auto& w : m.weights) {
    for (double& x : w) x = dist(rng);
  }
  for (double& b : m.bias) b = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("analytic gradient matches central finite differences") {
  std::mt19937_64 rng(20260810);
  for (int instance = 0; instance < 20; ++instance) {
    std::size_t n_features = 2 + rng() % 9;   // <= 10
    std::size_t n_examples = 4 + rng() % 17;  // <= 20
    auto examples = random_examples(rng, n_features, n_examples);
    LinearModel m = random_model(rng, n_features);
    double l2 = 1e-3;

    LinearModel grad;
    dataset_loss_and_gradient(m, examples, l2, grad);

    const double h = 1e-5;
    auto check = [&](double& param, double analytic) {
      double saved = param;
      param = saved + h;
      double up = dataset_loss(m, examples, l2);
      param = saved - h;
      double down = dataset_loss(m, examples, l2);
      param = saved;
      double numeric = (up - down) / (2.0 * h);
      double denom = std::max({std::abs(numeric), std::abs(analytic), 1e-8});
      CHECK(std::abs(numeric - analytic) / denom < 1e-4);
    };
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      check(m.bias[k], grad.bias[k]);
      for (std::size_t j = 0; j < n_features; ++j) {
        check(m.weights[k][j], grad.weights[k][j]);
      }
    }
  }
}

TEST_CASE("training fits the linearly separable set") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 10);
  TrainConfig cfg;
  TrainTrace trace;
  LinearModel model = train(examples, space, cfg, &trace);
  int correct = 0;
  for (const Example& ex : examples) {
    if (predict(model, ex.x, space).label == ex.y) ++correct;
  }
  CHECK(correct == static_cast<int>(examples.size()));
  CHECK(trace.epochs_run >= 1);
}

TEST_CASE("a training vector gets high probability after enough epochs") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 10);
  TrainConfig cfg;
  cfg.learning_rate = 1.0;
  cfg.max_epochs = 1000;
  LinearModel model = train(examples, space, cfg);
  Prediction p = predict(model, examples[0].x, space);
  CHECK(p.label == examples[0].y);
  CHECK(p.probabilities[relation_index(examples[0].y)] > 0.9);
}

TEST_CASE("max_epochs zero returns the zero model unchanged") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 2);
  TrainConfig cfg;
  cfg.max_epochs = 0;
  LinearModel model = train(examples, space, cfg);
  for (const auto& w : model.weights) {
    for (double x : w) CHECK(x == 0.0);
  }
  for (double b : model.bias) CHECK(b == 0.0);
}

TEST_CASE("single-class data predicts that class everywhere") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 5);
  for (Example& ex : examples) ex.y = RelationLabel::Comparison;
  LinearModel model = train(examples, space, TrainConfig{});
  for (const Example& ex : examples) {
    CHECK(predict(model, ex.x, space).label == RelationLabel::Comparison);
  }
}

TEST_CASE("zero model predicts uniform probabilities with first-label tie-break") {
  FeatureSpace space = toy_space(3);
  LinearModel model = LinearModel::zeros(3, space.fingerprint());
  FeatureVector x;
  x.active = {1};
  Prediction p = predict(model, x, space);
  CHECK(p.label == RelationLabel::Comparison);
  for (double prob : p.probabilities) CHECK(prob == Approx(0.25));

  FeatureVector empty;  // bias-only path
  Prediction q = predict(model, empty, space);
  CHECK(q.label == RelationLabel::Comparison);
}

TEST_CASE("softmax probabilities always sum to one") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    LinearModel m = random_model(rng, 6);
    FeatureVector x;
    for (std::size_t j = 0; j < 6; ++j) {
      if (rng() % 2) x.active.push_back(j);
    }
    Prediction p = predict_unchecked(m, x);
    double sum = 0.0;
    for (double v : p.probabilities) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("training is invariant to input permutation") {
  FeatureSpace space = toy_space(6);
  std::mt19937_64 rng(7);
  auto examples = random_examples(rng, 6, 30);
  TrainConfig cfg;
  cfg.max_epochs = 50;
  LinearModel a = train(examples, space, cfg);

  std::vector<Example> shuffled = examples;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  LinearModel b = train(shuffled, space, cfg);

  for (std::size_t k = 0; k < kNumRelations; ++k) {
    CHECK(a.bias[k] == b.bias[k]);
    for (std::size_t j = 0; j < space.size(); ++j) {
      CHECK(a.weights[k][j] == b.weights[k][j]);
    }
  }
}

TEST_CASE("full-batch loss is non-increasing at the default learning rate") {
  FeatureSpace space = toy_space(6);
  std::mt19937_64 rng(11);
  auto examples = random_examples(rng, 6, 40);
  TrainTrace trace;
  train(examples, space, TrainConfig{}, &trace);
  REQUIRE(trace.epoch_losses.size() >= 2);
  for (std::size_t i = 1; i < trace.epoch_losses.size(); ++i) {
    CHECK(trace.epoch_losses[i] <= trace.epoch_losses[i - 1] + 1e-12);
  }
}

TEST_CASE("divergent training reports the failing epoch") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 10);
  TrainConfig cfg;
  cfg.learning_rate = 1e8;
  cfg.max_epochs = 2000;
  cfg.convergence_tol = 1e-30;
  try {
    train(examples, space, cfg);
    SUCCEED("large steps can still converge; divergence is not guaranteed");
  } catch (const TrainingError& e) {
    CHECK(std::string(e.what()).find("epoch") != std::string::npos);
  }
}

TEST_CASE("train validates inputs") {
  FeatureSpace space = toy_space(3);
  CHECK_THROWS_AS(train(std::vector<Example>{}, space, TrainConfig{}), ValidationError);
  Example bad;
  bad.x.active = {7};  // out of range for the space
  CHECK_THROWS_AS(train(std::vector<Example>{bad}, space, TrainConfig{}), ValidationError);
  TrainConfig cfg;
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("evaluate matches the brute-force counting oracle") {
  std::mt19937_64 rng(31337);
  FeatureSpace space = toy_space(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 5 + rng() % 46;  // <= 50 examples
    auto test = random_examples(rng, 8, n);
    LinearModel model = random_model(rng, 8);
    model.space_fingerprint = space.fingerprint();

    EvalReport report = evaluate(model, test, space);

    std::vector<RelationLabel> gold, pred;
    for (const Example& ex : test) {
      gold.push_back(ex.y);
      pred.push_back(predict_unchecked(model, ex.x).label);
    }
    auto oracle = drel::test::oracle_metrics(gold, pred);

    CHECK(report.accuracy == Approx(oracle.accuracy).margin(1e-9));
    CHECK(report.macro.f1 == Approx(oracle.macro_f1).margin(1e-9));
    CHECK(report.weighted.precision == Approx(oracle.weighted_p).margin(1e-9));
    CHECK(report.weighted.recall == Approx(oracle.weighted_r).margin(1e-9));
    CHECK(report.weighted.f1 == Approx(oracle.weighted_f1).margin(1e-9));
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      CHECK(report.per_class[k].precision == Approx(oracle.precision[k]).margin(1e-9));
      CHECK(report.per_class[k].recall == Approx(oracle.recall[k]).margin(1e-9));
      CHECK(report.per_class[k].f1 == Approx(oracle.f1[k]).margin(1e-9));
      CHECK(report.per_class[k].support == oracle.support[k]);
      for (std::size_t j = 0; j < kNumRelations; ++j) {
        CHECK(report.confusion[k][j] == Approx(oracle.confusion[k][j]).margin(1e-9));
      }
    }
  }
}

TEST_CASE("perfect predictions give a diagonal confusion matrix") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 5);
  TrainConfig cfg;
  cfg.learning_rate = 1.0;
  LinearModel model = train(examples, space, cfg);
  EvalReport r = evaluate(model, examples, space);
  CHECK(r.accuracy == 1.0);
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    CHECK(r.per_class[k].precision == 1.0);
    CHECK(r.per_class[k].recall == 1.0);
    CHECK(r.per_class[k].f1 == 1.0);
    for (std::size_t j = 0; j < kNumRelations; ++j) {
      if (j != k) CHECK(r.confusion[k][j] == 0.0);
    }
  }
}

TEST_CASE("confusion row sums equal gold support") {
  std::mt19937_64 rng(5);
  FeatureSpace space = toy_space(6);
  auto test = random_examples(rng, 6, 40);
  LinearModel model = random_model(rng, 6);
  model.space_fingerprint = space.fingerprint();
  EvalReport r = evaluate(model, test, space);
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    double row_sum = 0;
    for (double v : r.confusion[k]) row_sum += v;
    CHECK(row_sum == Approx(static_cast<double>(r.per_class[k].support)));
  }
}

TEST_CASE("f1 helper reproduces the published row within rounding") {
  CHECK(f1_score(0.64, 0.69) == Approx(0.66).margin(0.005));
  CHECK(f1_score(0.0, 0.0) == 0.0);
}

TEST_CASE("evaluate rejects mismatched fingerprints and empty test sets") {
  FeatureSpace space = toy_space(4);
  LinearModel model = LinearModel::zeros(4, "deadbeefdeadbeef");
  std::vector<Example> test = {{FeatureVector{}, RelationLabel::Comparison}};
  CHECK_THROWS_AS(evaluate(model, test, space), CompatibilityError);
  CHECK_THROWS_AS(predict(model, test[0].x, space), CompatibilityError);
  model.space_fingerprint = space.fingerprint();
  CHECK_THROWS_AS(evaluate(model, std::vector<Example>{}, space), ValidationError);
}

TEST_CASE("run_repeated is a pure harness under deterministic training") {
  FeatureSpace space = toy_space(5);
  auto train_set = separable_set(space, 6);
  auto test_set = separable_set(space, 2);
  EvalReport mean = run_repeated(train_set, test_set, space, TrainConfig{}, {5, false});
  REQUIRE(mean.n_runs == 5);
  REQUIRE(mean.runs.size() == 5);
  for (const RunSummary& run : mean.runs) {
    CHECK(run.weighted.f1 == Approx(mean.runs[0].weighted.f1));
    CHECK(run.accuracy == Approx(mean.runs[0].accuracy));
  }
  CHECK(mean.weighted.f1 == Approx(mean.runs[0].weighted.f1));

  EvalReport single = run_repeated(train_set, test_set, space, TrainConfig{}, {1, false});
  LinearModel direct_model = train(train_set, space, TrainConfig{});
  EvalReport direct = evaluate(direct_model, test_set, space);
  CHECK(single.weighted.f1 == Approx(direct.weighted.f1));
  CHECK(single.accuracy == Approx(direct.accuracy));
}

TEST_CASE("run_repeated validates the run count") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 2);
  CHECK_THROWS_AS(run_repeated(examples, examples, space, TrainConfig{}, {0, false}),
                  ValidationError);
}

TEST_CASE("bootstrap resampling keeps the mean inside the run envelope") {
  FeatureSpace space = toy_space(6);
  std::mt19937_64 rng(17);
  auto train_set = random_examples(rng, 6, 60);
  auto test_set = random_examples(rng, 6, 30);
  EvalReport mean = run_repeated(train_set, test_set, space, TrainConfig{}, {5, true});
  double lo = 1.0, hi = 0.0;
  for (const RunSummary& run : mean.runs) {
    lo = std::min(lo, run.weighted.f1);
    hi = std::max(hi, run.weighted.f1);
  }
  CHECK(mean.weighted.f1 >= lo - 1e-12);
  CHECK(mean.weighted.f1 <= hi + 1e-12);
}

TEST_CASE("model JSON round-trips") {
  FeatureSpace space = toy_space(5);
  auto examples = separable_set(space, 4);
  TrainConfig cfg;
  cfg.max_epochs = 30;
  LinearModel model = train(examples, space, cfg);
  nlohmann::json j = model_to_json(model, cfg);
  auto [loaded, loaded_cfg] = model_from_json(j);
  CHECK(loaded.space_fingerprint == model.space_fingerprint);
  CHECK(loaded_cfg.max_epochs == cfg.max_epochs);
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    CHECK(loaded.bias[k] == model.bias[k]);
    CHECK(loaded.weights[k] == model.weights[k]);
  }
}

TEST_CASE("default ablation plan has the documented shape") {
  AblationPlan plan = AblationPlan::default_plan();
  plan.validate();
  REQUIRE(plan.subsets.size() == 11);
  std::vector<std::string> names;
  for (const auto& s : plan.subsets) names.push_back(s.name);
  CHECK(names[0] == "dialogue_act");
  CHECK(names[5] == "All");
  CHECK(std::find(names.begin(), names.end(), "sentiment") != names.end());
  CHECK(std::find(names.begin(), names.end(), "All - sentiment") != names.end());
  CHECK(plan.subsets[5].families.size() == 5);
  for (std::size_t i = 6; i < 11; ++i) CHECK(plan.subsets[i].families.size() == 4);
}

TEST_CASE("ablation plan validation") {
  AblationPlan plan;
  CHECK_THROWS_AS(plan.validate(), ValidationError);
  plan.subsets.push_back({"a", {Family::Sentiment}});
  plan.subsets.push_back({"a", {Family::Topic}});
  CHECK_THROWS_AS(plan.validate(), ValidationError);
}

namespace {

std::vector<RelationPair> tiny_pair_set() {
  auto mk = [](std::string arg1, std::string arg2, RelationLabel y) {
    RelationPair p;
    p.arg1 = std::move(arg1);
    p.arg2 = std::move(arg2);
    p.relation = y;
    p.connective = "but";
    return p;
  };
  return {
      mk("i love this great album", "it was boring", RelationLabel::Comparison),
      mk("i bought it yesterday", "i like it", RelationLabel::Contingency),
      mk("we watched the game", "the team played great", RelationLabel::Expansion),
      mk("we went home", "we ate dinner", RelationLabel::Temporal),
      mk("that movie was terrible", "i loved the book", RelationLabel::Comparison),
      mk("she said hello", "what do you think of it?", RelationLabel::Contingency),
  };
}

}  // namespace

TEST_CASE("a single-subset plan yields a single-row table") {
  auto pairs = tiny_pair_set();
  AblationPlan plan;
  plan.subsets.push_back({"sentiment", {Family::Sentiment}});
  TrainConfig cfg;
  cfg.max_epochs = 20;
  AblationTable table = run_ablation(pairs, pairs, ProviderRegistry::builtin(), plan, cfg,
                                     RepeatConfig{1, false});
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].name == "sentiment");
  CHECK(table.best_index == 0);
}

TEST_CASE("families with identical providers produce identical single-family rows") {
  auto pairs = tiny_pair_set();
  ProviderRegistry registry = ProviderRegistry::builtin();
  // substitute one provider for another family's
  registry.provider(Family::Intent) = registry.provider(Family::DialogueAct);

  AblationPlan plan;
  plan.subsets.push_back({"dialogue_act", {Family::DialogueAct}});
  plan.subsets.push_back({"intent", {Family::Intent}});
  TrainConfig cfg;
  cfg.max_epochs = 40;
  AblationTable table =
      run_ablation(pairs, pairs, registry, plan, cfg, RepeatConfig{1, false});
  REQUIRE(table.rows.size() == 2);
  const EvalReport& a = table.rows[0].report;
  const EvalReport& b = table.rows[1].report;
  CHECK(a.accuracy == b.accuracy);
  CHECK(a.weighted.f1 == b.weighted.f1);
  CHECK(a.macro.f1 == b.macro.f1);
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    for (std::size_t j = 0; j < kNumRelations; ++j) {
      CHECK(a.confusion[k][j] == b.confusion[k][j]);
    }
  }
}
