// Named sparse one-hot feature vectors over the five dialogue feature
// families. The feature space is built from the names actually observed in
// training pairs, frozen, and serialized alongside any model trained on it;
// names unseen at build time are silently dropped at vectorization time.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "drel/errors.hpp"
#include "drel/extractor.hpp"
#include "drel/providers.hpp"

namespace drel {

enum class Side { Arg1, Arg2 };

inline std::string_view side_name(Side s) { return s == Side::Arg1 ? "arg1" : "arg2"; }

struct FeatureName {
  Family family = Family::DialogueAct;
  std::string value;
  Side side = Side::Arg1;

  auto key() const { return std::make_tuple(family_name(family), std::string_view(value), side_name(side)); }
  bool operator==(const FeatureName& o) const { return key() == o.key(); }
  bool operator<(const FeatureName& o) const { return key() < o.key(); }
};

class FeatureSpace {
 public:
  FeatureSpace() = default;

  // Deterministic order: sorted by (family name, value, side name). Frozen
  // on construction; index positions never change afterwards.
  static FeatureSpace from_names(std::vector<FeatureName> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    FeatureSpace space;
    space.names_ = std::move(names);
    for (std::size_t i = 0; i < space.names_.size(); ++i) {
      space.index_.emplace(space.names_[i], i);
    }
    return space;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<FeatureName>& names() const { return names_; }

  std::optional<std::size_t> index_of(const FeatureName& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::set<Family> families() const {
    std::set<Family> fams;
    for (const FeatureName& n : names_) fams.insert(n.family);
    return fams;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const FeatureName& n : names_) {
      arr.push_back({{"family", std::string(family_name(n.family))},
                     {"value", n.value},
                     {"side", std::string(side_name(n.side))}});
    }
    return arr;
  }

  static FeatureSpace from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw FormatError("feature space JSON must be an array");
    std::vector<FeatureName> names;
    for (const auto& item : arr) {
      FeatureName n;
      auto fam = family_from_name(item.at("family").get<std::string>());
      if (!fam) throw FormatError("unknown feature family: " + item.at("family").dump());
      n.family = *fam;
      n.value = item.at("value").get<std::string>();
      std::string side = item.at("side").get<std::string>();
      if (side != "arg1" && side != "arg2") throw FormatError("unknown side: " + side);
      n.side = side == "arg1" ? Side::Arg1 : Side::Arg2;
      names.push_back(std::move(n));
    }
    // preserve the serialized index order exactly
    FeatureSpace space;
    space.names_ = std::move(names);
    for (std::size_t i = 0; i < space.names_.size(); ++i) {
      space.index_.emplace(space.names_[i], i);
    }
    return space;
  }

  // Non-cryptographic digest binding models to the space they index into.
  std::string fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&](std::string_view s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      h ^= 0x1f;
      h *= 1099511628211ull;
    };
    for (const FeatureName& n : names_) {
      mix(family_name(n.family));
      mix(n.value);
      mix(side_name(n.side));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
  }

 private:
  std::vector<FeatureName> names_;
  std::map<FeatureName, std::size_t> index_;
};

// Active feature indices into a frozen space, sorted and unique.
struct FeatureVector {
  std::vector<std::size_t> active;

  bool operator==(const FeatureVector&) const = default;
};

namespace detail {

inline std::vector<FeatureName> names_for_pair(const RelationPair& pair,
                                               const ProviderRegistry& registry,
                                               const std::set<Family>& families) {
  std::vector<FeatureName> names;
  for (Family f : families) {
    const Provider& provider = registry.provider(f);
    if (!provider) continue;
    for (Side side : {Side::Arg1, Side::Arg2}) {
      ProviderInput input{side == Side::Arg1 ? pair.arg1 : pair.arg2, pair.topic};
      std::vector<std::string> labels = provider(input);
      if (family_is_single_valued(f) && labels.size() > 1) labels.resize(1);
      for (std::string& label : labels) {
        names.push_back(FeatureName{f, std::move(label), side});
      }
    }
  }
  return names;
}

}  // namespace detail

// Space over exactly the (family, value, side) names observed in the
// training pairs for the enabled families.
inline FeatureSpace build_feature_space(std::span<const RelationPair> pairs,
                                        const ProviderRegistry& registry,
                                        const std::set<Family>& families_enabled) {
  if (pairs.empty()) throw ValidationError("cannot build a feature space from zero pairs");
  if (families_enabled.empty()) throw ValidationError("no feature families enabled");
  std::vector<FeatureName> names;
  for (const RelationPair& pair : pairs) {
    auto pair_names = detail::names_for_pair(pair, registry, families_enabled);
    names.insert(names.end(), std::make_move_iterator(pair_names.begin()),
                 std::make_move_iterator(pair_names.end()));
  }
  return FeatureSpace::from_names(std::move(names));
}

// Providers run on arg1 and arg2 independently; names missing from the
// frozen space are dropped.
inline FeatureVector vectorize_pair(const RelationPair& pair, const FeatureSpace& space,
                                    const ProviderRegistry& registry) {
  FeatureVector v;
  auto names = detail::names_for_pair(pair, registry, space.families());
  for (const FeatureName& n : names) {
    if (auto idx = space.index_of(n)) v.active.push_back(*idx);
  }
  std::sort(v.active.begin(), v.active.end());
  v.active.erase(std::unique(v.active.begin(), v.active.end()), v.active.end());
  return v;
}

}  // namespace drel
