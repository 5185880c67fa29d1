#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace drel {

// The four level-1 discourse relation classes. Declaration order is the
// deterministic tie-break order used by the classifier.
enum class RelationLabel { Comparison, Contingency, Expansion, Temporal };

inline constexpr std::size_t kNumRelations = 4;

inline constexpr std::array<RelationLabel, kNumRelations> kAllRelations = {
    RelationLabel::Comparison, RelationLabel::Contingency, RelationLabel::Expansion,
    RelationLabel::Temporal};

inline constexpr std::array<std::string_view, kNumRelations> kRelationNames = {
    "Comparison", "Contingency", "Expansion", "Temporal"};

inline std::string_view relation_name(RelationLabel r) {
  return kRelationNames[static_cast<std::size_t>(r)];
}

inline std::optional<RelationLabel> relation_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumRelations; ++i) {
    if (kRelationNames[i] == name) return kAllRelations[i];
  }
  return std::nullopt;
}

inline constexpr std::size_t relation_index(RelationLabel r) {
  return static_cast<std::size_t>(r);
}

}  // namespace drel
