// Brute-force counting oracle for precision/recall/F1/confusion, written
// against (gold, predicted) label lists with direct arithmetic and no shared
// code with evaluate().
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "drel/relation.hpp"

namespace drel::test {

struct OracleMetrics {
  std::array<std::array<double, 4>, 4> confusion = {};
  std::array<double, 4> precision = {};
  std::array<double, 4> recall = {};
  std::array<double, 4> f1 = {};
  std::array<std::size_t, 4> support = {};
  double accuracy = 0;
  double macro_p = 0, macro_r = 0, macro_f1 = 0;
  double weighted_p = 0, weighted_r = 0, weighted_f1 = 0;
};

inline OracleMetrics oracle_metrics(const std::vector<drel::RelationLabel>& gold,
                                    const std::vector<drel::RelationLabel>& pred) {
  OracleMetrics m;
  std::size_t n = gold.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t g = drel::relation_index(gold[i]);
    std::size_t p = drel::relation_index(pred[i]);
    m.confusion[g][p] += 1.0;
    if (g == p) ++correct;
  }
  m.accuracy = static_cast<double>(correct) / static_cast<double>(n);
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t tp = 0, predicted_k = 0, gold_k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool is_gold = drel::relation_index(gold[i]) == k;
      bool is_pred = drel::relation_index(pred[i]) == k;
      if (is_gold) ++gold_k;
      if (is_pred) ++predicted_k;
      if (is_gold && is_pred) ++tp;
    }
    m.support[k] = gold_k;
    m.precision[k] = predicted_k == 0 ? 0.0
                                      : static_cast<double>(tp) / static_cast<double>(predicted_k);
    m.recall[k] = gold_k == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(gold_k);
    double pr = m.precision[k] + m.recall[k];
    m.f1[k] = pr == 0.0 ? 0.0 : 2.0 * m.precision[k] * m.recall[k] / pr;
    m.macro_p += m.precision[k] / 4.0;
    m.macro_r += m.recall[k] / 4.0;
    m.macro_f1 += m.f1[k] / 4.0;
    double w = static_cast<double>(gold_k) / static_cast<double>(n);
    m.weighted_p += w * m.precision[k];
    m.weighted_r += w * m.recall[k];
    m.weighted_f1 += w * m.f1[k];
  }
  return m;
}

}  // namespace drel::test
