// Multinomial logistic regression over sparse one-hot feature vectors,
// trained by full-batch gradient descent on the L2-regularized cross
// entropy. Full batch keeps training deterministic, which turns the
// repeated-run protocol into a pure harness check; the input order is
// canonicalized so shuffling the training set cannot change the fit.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "drel/errors.hpp"
#include "drel/features.hpp"
#include "drel/relation.hpp"
#include "drel/rng.hpp"

namespace drel {

struct TrainConfig {
  double learning_rate = 0.1;
  double l2_penalty = 1e-4;
  int max_epochs = 200;
  double convergence_tol = 1e-6;  // relative loss improvement
  std::uint64_t shuffle_seed = 1;

  void validate() const {
    if (learning_rate <= 0) throw ValidationError("learning_rate must be positive");
    if (l2_penalty <= 0) throw ValidationError("l2_penalty must be positive");
    if (max_epochs < 0) throw ValidationError("max_epochs must be non-negative");
    if (convergence_tol <= 0) throw ValidationError("convergence_tol must be positive");
  }

  nlohmann::json to_json() const {
    return {{"learning_rate", learning_rate},
            {"l2_penalty", l2_penalty},
            {"max_epochs", max_epochs},
            {"convergence_tol", convergence_tol},
            {"shuffle_seed", shuffle_seed}};
  }

  static TrainConfig from_json(const nlohmann::json& j) {
    TrainConfig c;
    c.learning_rate = j.at("learning_rate").get<double>();
    c.l2_penalty = j.at("l2_penalty").get<double>();
    c.max_epochs = j.at("max_epochs").get<int>();
    c.convergence_tol = j.at("convergence_tol").get<double>();
    c.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
    return c;
  }
};

struct LinearModel {
  std::array<std::vector<double>, kNumRelations> weights;  // one vector per relation
  std::array<double, kNumRelations> bias = {};
  std::string space_fingerprint;

  std::size_t dim() const { return weights[0].size(); }

  static LinearModel zeros(std::size_t dim, std::string fingerprint = {}) {
    LinearModel m;
    for (auto& w : m.weights) w.assign(dim, 0.0);
    m.space_fingerprint = std::move(fingerprint);
    return m;
  }

  bool all_finite() const {
    for (const auto& w : weights) {
      for (double x : w) {
        if (!std::isfinite(x)) return false;
      }
    }
    for (double b : bias) {
      if (!std::isfinite(b)) return false;
    }
    return true;
  }
};

struct Example {
  FeatureVector x;
  RelationLabel y = RelationLabel::Comparison;
};

// ---------------------------------------------------------------------------
// Scores, loss, gradient

inline std::array<double, kNumRelations> linear_scores(const LinearModel& m,
                                                       const FeatureVector& x) {
  std::array<double, kNumRelations> s = m.bias;
  for (std::size_t j : x.active) {
    for (std::size_t k = 0; k < kNumRelations; ++k) s[k] += m.weights[k][j];
  }
  return s;
}

inline std::array<double, kNumRelations> softmax(const std::array<double, kNumRelations>& s) {
  double mx = *std::max_element(s.begin(), s.end());
  std::array<double, kNumRelations> p;
  double z = 0.0;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    p[k] = std::exp(s[k] - mx);
    z += p[k];
  }
  for (double& v : p) v /= z;
  return p;
}

// Mean cross entropy plus (l2/2)*||W||^2; the bias is unregularized.
inline double dataset_loss(const LinearModel& m, std::span<const Example> examples,
                           double l2_penalty) {
  double loss = 0.0;
  for (const Example& ex : examples) {
    auto p = softmax(linear_scores(m, ex.x));
    loss += -std::log(std::max(p[relation_index(ex.y)], 1e-300));
  }
  loss /= static_cast<double>(examples.size());
  double reg = 0.0;
  for (const auto& w : m.weights) {
    for (double x : w) reg += x * x;
  }
  return loss + 0.5 * l2_penalty * reg;
}

// Analytic gradient of dataset_loss, written into a model-shaped container.
inline double dataset_loss_and_gradient(const LinearModel& m, std::span<const Example> examples,
                                        double l2_penalty, LinearModel& grad) {
  grad = LinearModel::zeros(m.dim());
  double loss = 0.0;
  double inv_n = 1.0 / static_cast<double>(examples.size());
  for (const Example& ex : examples) {
    auto p = softmax(linear_scores(m, ex.x));
    loss += -std::log(std::max(p[relation_index(ex.y)], 1e-300));
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      double resid = (p[k] - (relation_index(ex.y) == k ? 1.0 : 0.0)) * inv_n;
      grad.bias[k] += resid;
      for (std::size_t j : ex.x.active) grad.weights[k][j] += resid;
    }
  }
  loss *= inv_n;
  double reg = 0.0;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      grad.weights[k][j] += l2_penalty * m.weights[k][j];
      reg += m.weights[k][j] * m.weights[k][j];
    }
  }
  return loss + 0.5 * l2_penalty * reg;
}

struct TrainTrace {
  std::vector<double> epoch_losses;  // loss before each accepted update
  int epochs_run = 0;
};

// Full-batch gradient descent. Examples are re-ordered into a canonical
// order first, so permuting the input never changes the result. Stops after
// max_epochs or once the relative loss improvement falls under
// convergence_tol. A non-finite loss aborts with the failing epoch.
inline LinearModel train(std::span<const Example> examples, const FeatureSpace& space,
                         const TrainConfig& config, TrainTrace* trace = nullptr) {
  config.validate();
  if (examples.empty()) throw ValidationError("cannot train on an empty dataset");
  for (const Example& ex : examples) {
    for (std::size_t j : ex.x.active) {
      if (j >= space.size()) {
        throw ValidationError("feature index out of range for the given space");
      }
    }
  }

  std::vector<const Example*> order;
  order.reserve(examples.size());
  for (const Example& ex : examples) order.push_back(&ex);
  std::sort(order.begin(), order.end(), [](const Example* a, const Example* b) {
    if (a->x.active != b->x.active) return a->x.active < b->x.active;
    return relation_index(a->y) < relation_index(b->y);
  });

  LinearModel model = LinearModel::zeros(space.size(), space.fingerprint());
  double prev_loss = std::numeric_limits<double>::infinity();
  double inv_n = 1.0 / static_cast<double>(order.size());

  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    LinearModel grad = LinearModel::zeros(space.size());
    double loss = 0.0;
    for (const Example* ex : order) {
      auto p = softmax(linear_scores(model, ex->x));
      loss += -std::log(std::max(p[relation_index(ex->y)], 1e-300));
      for (std::size_t k = 0; k < kNumRelations; ++k) {
        double resid = (p[k] - (relation_index(ex->y) == k ? 1.0 : 0.0)) * inv_n;
        grad.bias[k] += resid;
        for (std::size_t j : ex->x.active) grad.weights[k][j] += resid;
      }
    }
    loss *= inv_n;
    double reg = 0.0;
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      for (std::size_t j = 0; j < model.dim(); ++j) {
        grad.weights[k][j] += config.l2_penalty * model.weights[k][j];
        reg += model.weights[k][j] * model.weights[k][j];
      }
    }
    loss += 0.5 * config.l2_penalty * reg;

    if (!std::isfinite(loss)) {
      throw TrainingError("training diverged (non-finite loss) at epoch " +
                          std::to_string(epoch));
    }
    if (trace) {
      trace->epoch_losses.push_back(loss);
      trace->epochs_run = epoch + 1;
    }
    double improvement = (prev_loss - loss) / std::max(std::abs(prev_loss), 1e-12);
    if (epoch > 0 && improvement < config.convergence_tol) break;
    prev_loss = loss;

    for (std::size_t k = 0; k < kNumRelations; ++k) {
      model.bias[k] -= config.learning_rate * grad.bias[k];
      for (std::size_t j = 0; j < model.dim(); ++j) {
        model.weights[k][j] -= config.learning_rate * grad.weights[k][j];
      }
    }
  }
  if (!model.all_finite()) throw TrainingError("training produced non-finite weights");
  return model;
}

// ---------------------------------------------------------------------------
// Prediction

struct Prediction {
  RelationLabel label = RelationLabel::Comparison;
  std::array<double, kNumRelations> probabilities = {};
};

inline Prediction predict_unchecked(const LinearModel& model, const FeatureVector& x) {
  Prediction out;
  out.probabilities = softmax(linear_scores(model, x));
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumRelations; ++k) {
    if (out.probabilities[k] > out.probabilities[best]) best = k;  // first max wins ties
  }
  out.label = kAllRelations[best];
  return out;
}

inline Prediction predict(const LinearModel& model, const FeatureVector& x,
                          const FeatureSpace& space) {
  if (model.space_fingerprint != space.fingerprint()) {
    throw CompatibilityError("model fingerprint " + model.space_fingerprint +
                             " does not match feature space " + space.fingerprint());
  }
  return predict_unchecked(model, x);
}

// ---------------------------------------------------------------------------
// Evaluation

inline double f1_score(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct AggregateMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RunSummary {
  double accuracy = 0.0;
  AggregateMetrics macro;
  AggregateMetrics weighted;
};

struct EvalReport {
  std::array<ClassMetrics, kNumRelations> per_class;
  std::array<std::array<double, kNumRelations>, kNumRelations> confusion = {};  // [gold][pred]
  double accuracy = 0.0;
  AggregateMetrics macro;
  AggregateMetrics weighted;  // headline aggregate: support-weighted
  int n_runs = 1;
  std::vector<RunSummary> runs;
};

inline EvalReport evaluate(const LinearModel& model, std::span<const Example> test,
                           const FeatureSpace& space) {
  if (test.empty()) throw ValidationError("cannot evaluate on an empty test set");
  if (model.space_fingerprint != space.fingerprint()) {
    throw CompatibilityError("model fingerprint " + model.space_fingerprint +
                             " does not match feature space " + space.fingerprint());
  }
  EvalReport r;
  for (const Example& ex : test) {
    Prediction p = predict_unchecked(model, ex.x);
    r.confusion[relation_index(ex.y)][relation_index(p.label)] += 1.0;
  }
  double correct = 0.0;
  double total = static_cast<double>(test.size());
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    double tp = r.confusion[k][k];
    double fn = 0.0, fp = 0.0, support = 0.0;
    for (std::size_t j = 0; j < kNumRelations; ++j) {
      support += r.confusion[k][j];
      if (j != k) {
        fn += r.confusion[k][j];
        fp += r.confusion[j][k];
      }
    }
    correct += tp;
    ClassMetrics& cm = r.per_class[k];
    cm.support = static_cast<std::size_t>(support);
    cm.precision = (tp + fp) > 0.0 ? tp / (tp + fp) : 0.0;
    cm.recall = (tp + fn) > 0.0 ? tp / (tp + fn) : 0.0;
    cm.f1 = f1_score(cm.precision, cm.recall);
  }
  r.accuracy = correct / total;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    r.macro.precision += r.per_class[k].precision / kNumRelations;
    r.macro.recall += r.per_class[k].recall / kNumRelations;
    r.macro.f1 += r.per_class[k].f1 / kNumRelations;
    double w = static_cast<double>(r.per_class[k].support) / total;
    r.weighted.precision += w * r.per_class[k].precision;
    r.weighted.recall += w * r.per_class[k].recall;
    r.weighted.f1 += w * r.per_class[k].f1;
  }
  r.runs.push_back(RunSummary{r.accuracy, r.macro, r.weighted});
  return r;
}

// ---------------------------------------------------------------------------
// Repeated runs and ablation

struct RepeatConfig {
  int n_runs = 5;
  // When set, each run trains on a seeded bootstrap resample of the training
  // set; with full-batch training this is the only source of run-to-run
  // variance.
  bool resample_train = false;
};

inline EvalReport run_repeated(std::span<const Example> train_set,
                               std::span<const Example> test_set, const FeatureSpace& space,
                               const TrainConfig& config, const RepeatConfig& repeat = {}) {
  if (repeat.n_runs < 1) throw ValidationError("n_runs must be >= 1");
  std::vector<EvalReport> reports;
  for (int run = 0; run < repeat.n_runs; ++run) {
    TrainConfig run_config = config;
    run_config.shuffle_seed = config.shuffle_seed + static_cast<std::uint64_t>(run);
    std::vector<Example> resampled;
    std::span<const Example> effective = train_set;
    if (repeat.resample_train) {
      for (std::size_t i : bootstrap_indices(train_set.size(), run_config.shuffle_seed)) {
        resampled.push_back(train_set[i]);
      }
      effective = resampled;
    }
    LinearModel model = train(effective, space, run_config);
    reports.push_back(evaluate(model, test_set, space));
  }
  if (reports.size() == 1) return reports.front();

  EvalReport mean;
  mean.n_runs = static_cast<int>(reports.size());
  double inv = 1.0 / static_cast<double>(reports.size());
  for (const EvalReport& r : reports) {
    mean.accuracy += inv * r.accuracy;
    mean.macro.precision += inv * r.macro.precision;
    mean.macro.recall += inv * r.macro.recall;
    mean.macro.f1 += inv * r.macro.f1;
    mean.weighted.precision += inv * r.weighted.precision;
    mean.weighted.recall += inv * r.weighted.recall;
    mean.weighted.f1 += inv * r.weighted.f1;
    for (std::size_t k = 0; k < kNumRelations; ++k) {
      mean.per_class[k].precision += inv * r.per_class[k].precision;
      mean.per_class[k].recall += inv * r.per_class[k].recall;
      mean.per_class[k].f1 += inv * r.per_class[k].f1;
      mean.per_class[k].support = r.per_class[k].support;
      for (std::size_t j = 0; j < kNumRelations; ++j) {
        mean.confusion[k][j] += inv * r.confusion[k][j];
      }
    }
    mean.runs.push_back(RunSummary{r.accuracy, r.macro, r.weighted});
  }
  return mean;
}

struct AblationPlan {
  struct Subset {
    std::string name;
    std::set<Family> families;
  };
  std::vector<Subset> subsets;

  void validate() const {
    if (subsets.empty()) throw ValidationError("ablation plan is empty");
    std::set<std::string> names;
    for (const Subset& s : subsets) {
      if (s.families.empty()) throw ValidationError("ablation subset '" + s.name + "' is empty");
      if (!names.insert(s.name).second) {
        throw ValidationError("duplicate ablation subset name '" + s.name + "'");
      }
    }
  }

  // Each single family, the all-families set, then each leave-one-out set.
  static AblationPlan default_plan() {
    AblationPlan plan;
    for (Family f : kAllFamilies) {
      plan.subsets.push_back({std::string(family_name(f)), {f}});
    }
    std::set<Family> all(kAllFamilies.begin(), kAllFamilies.end());
    plan.subsets.push_back({"All", all});
    for (Family f : kAllFamilies) {
      std::set<Family> rest = all;
      rest.erase(f);
      plan.subsets.push_back({"All - " + std::string(family_name(f)), rest});
    }
    return plan;
  }
};

struct AblationRow {
  std::string name;
  EvalReport report;
};

struct AblationTable {
  std::vector<AblationRow> rows;
  std::size_t best_index = 0;  // highest weighted F1, first on ties
};

// For each subset: rebuild the feature space from the training pairs
// restricted to those families, train with the repeated-run protocol, and
// evaluate against the fixed test pairs.
inline AblationTable run_ablation(std::span<const RelationPair> train_pairs,
                                  std::span<const RelationPair> test_pairs,
                                  const ProviderRegistry& registry, const AblationPlan& plan,
                                  const TrainConfig& config, const RepeatConfig& repeat = {}) {
  plan.validate();
  if (train_pairs.empty()) throw ValidationError("ablation requires training pairs");
  if (test_pairs.empty()) throw ValidationError("ablation requires test pairs");

  AblationTable table;
  for (const AblationPlan::Subset& subset : plan.subsets) {
    FeatureSpace space = build_feature_space(train_pairs, registry, subset.families);
    std::vector<Example> train_set, test_set;
    train_set.reserve(train_pairs.size());
    for (const RelationPair& p : train_pairs) {
      train_set.push_back({vectorize_pair(p, space, registry), p.relation});
    }
    test_set.reserve(test_pairs.size());
    for (const RelationPair& p : test_pairs) {
      test_set.push_back({vectorize_pair(p, space, registry), p.relation});
    }
    table.rows.push_back({subset.name, run_repeated(train_set, test_set, space, config, repeat)});
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i].report.weighted.f1 > table.rows[table.best_index].report.weighted.f1) {
      table.best_index = i;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json model_to_json(const LinearModel& m, const TrainConfig& config) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : m.weights) weights.push_back(w);
  nlohmann::json labels = nlohmann::json::array();
  for (RelationLabel r : kAllRelations) labels.push_back(std::string(relation_name(r)));
  return {{"space_fingerprint", m.space_fingerprint},
          {"labels", labels},
          {"weights", weights},
          {"biases", m.bias},
          {"config", config.to_json()}};
}

inline std::pair<LinearModel, TrainConfig> model_from_json(const nlohmann::json& j) {
  LinearModel m;
  m.space_fingerprint = j.at("space_fingerprint").get<std::string>();
  const auto& labels = j.at("labels");
  if (labels.size() != kNumRelations) throw FormatError("model must carry 4 labels");
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    if (labels.at(k).get<std::string>() != kRelationNames[k]) {
      throw FormatError("unexpected label order in model file");
    }
    m.weights[k] = j.at("weights").at(k).get<std::vector<double>>();
    m.bias[k] = j.at("biases").at(k).get<double>();
  }
  for (std::size_t k = 1; k < kNumRelations; ++k) {
    if (m.weights[k].size() != m.weights[0].size()) {
      throw FormatError("model weight vectors disagree on dimension");
    }
  }
  if (!m.all_finite()) throw FormatError("model contains non-finite values");
  return {std::move(m), TrainConfig::from_json(j.at("config"))};
}

inline nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json per_class;
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    per_class[std::string(kRelationNames[k])] = {{"precision", r.per_class[k].precision},
                                                 {"recall", r.per_class[k].recall},
                                                 {"f1", r.per_class[k].f1},
                                                 {"support", r.per_class[k].support}};
  }
  nlohmann::json confusion = nlohmann::json::array();
  for (const auto& row : r.confusion) confusion.push_back(row);
  nlohmann::json runs = nlohmann::json::array();
  for (const RunSummary& s : r.runs) {
    runs.push_back({{"accuracy", s.accuracy},
                    {"macro_f1", s.macro.f1},
                    {"weighted_precision", s.weighted.precision},
                    {"weighted_recall", s.weighted.recall},
                    {"weighted_f1", s.weighted.f1}});
  }
  return {{"accuracy", r.accuracy},
          {"per_class", per_class},
          {"confusion", confusion},
          {"macro",
           {{"precision", r.macro.precision}, {"recall", r.macro.recall}, {"f1", r.macro.f1}}},
          {"weighted",
           {{"precision", r.weighted.precision},
            {"recall", r.weighted.recall},
            {"f1", r.weighted.f1}}},
          {"n_runs", r.n_runs},
          {"runs", runs}};
}

// Aligned text table in the shape of the evaluation tables: one row per
// relation plus the two aggregates and accuracy.
inline std::string render_report_table(const EvalReport& r) {
  std::ostringstream out;
  auto fmt = [](double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << v;
    return o.str();
  };
  out << std::left << std::setw(16) << "class" << std::right << std::setw(10) << "precision"
      << std::setw(8) << "recall" << std::setw(8) << "f1" << std::setw(9) << "support" << '\n';
  for (std::size_t k = 0; k < kNumRelations; ++k) {
    out << std::left << std::setw(16) << kRelationNames[k] << std::right << std::setw(10)
        << fmt(r.per_class[k].precision) << std::setw(8) << fmt(r.per_class[k].recall)
        << std::setw(8) << fmt(r.per_class[k].f1) << std::setw(9) << r.per_class[k].support
        << '\n';
  }
  out << std::left << std::setw(16) << "macro" << std::right << std::setw(10)
      << fmt(r.macro.precision) << std::setw(8) << fmt(r.macro.recall) << std::setw(8)
      << fmt(r.macro.f1) << '\n';
  out << std::left << std::setw(16) << "weighted" << std::right << std::setw(10)
      << fmt(r.weighted.precision) << std::setw(8) << fmt(r.weighted.recall) << std::setw(8)
      << fmt(r.weighted.f1) << '\n';
  out << std::left << std::setw(16) << "accuracy" << std::right << std::setw(10)
      << fmt(r.accuracy) << '\n';
  if (r.n_runs > 1) out << "averaged over " << r.n_runs << " runs\n";
  return out.str();
}

inline std::string render_ablation_table(const AblationTable& table) {
  std::ostringstream out;
  auto fmt = [](double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << v;
    return o.str();
  };
  out << std::left << std::setw(24) << "features" << std::right << std::setw(10) << "precision"
      << std::setw(8) << "recall" << std::setw(8) << "f1" << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const AblationRow& row = table.rows[i];
    std::string name = row.name + (i == table.best_index ? " *" : "");
    out << std::left << std::setw(24) << name << std::right << std::setw(10)
        << fmt(row.report.weighted.precision) << std::setw(8) << fmt(row.report.weighted.recall)
        << std::setw(8) << fmt(row.report.weighted.f1) << '\n';
  }
  out << "* best weighted F1\n";
  return out.str();
}

}  // namespace drel
