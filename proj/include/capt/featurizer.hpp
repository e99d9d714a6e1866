#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capt/capt_tree.hpp"
#include "capt/errors.hpp"

namespace capt {

struct FeaturizerParams {
  int ancestor_depth = 3;   // parent features reach this many levels up
  int sibling_window = 2;   // pair a token with the next N token leaves
  bool binary_counts = false;  // record presence instead of counts
  // chain variable uses by post-rename label instead of source name,
  // folding every renamed variable into one sequence
  bool varuse_merge_names = false;
};

// Sparse feature multiset. Immutable once built; entries are sorted by
// feature id, so dot products are merge joins. A vector remembers the
// configuration that produced it and refuses to mix with others.
class FeatureVector {
 public:
  using Entry = std::pair<std::string, std::uint64_t>;

  FeatureVector() = default;
  FeatureVector(std::string config_id, std::map<std::string, std::uint64_t> counts)
      : config_id_(std::move(config_id)) {
    items_.assign(counts.begin(), counts.end());  // map iterates sorted
  }

  // entries must already be sorted by feature id and free of duplicates
  static FeatureVector from_sorted(std::string config_id,
                                   std::vector<Entry> items) {
    FeatureVector v;
    v.config_id_ = std::move(config_id);
    v.items_ = std::move(items);
    return v;
  }

  const std::string& config_id() const { return config_id_; }
  const std::vector<Entry>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t distinct_count() const { return items_.size(); }
  std::uint64_t total_count() const {
    std::uint64_t n = 0;
    for (const auto& [f, c] : items_) n += c;
    return n;
  }

  std::uint64_t count_of(const std::string& feature) const {
    auto it = std::lower_bound(
        items_.begin(), items_.end(), feature,
        [](const Entry& e, const std::string& f) { return e.first < f; });
    return it != items_.end() && it->first == feature ? it->second : 0;
  }

  void merge(const FeatureVector& other) {
    if (config_id_.empty() && items_.empty()) config_id_ = other.config_id_;
    if (config_id_ != other.config_id_)
      throw UsageError("cannot merge feature vectors of configs " +
                       config_id_ + " and " + other.config_id_);
    std::vector<Entry> merged;
    merged.reserve(items_.size() + other.items_.size());
    auto a = items_.cbegin();
    auto b = other.items_.cbegin();
    while (a != items_.end() && b != other.items_.end()) {
      if (a->first < b->first)
        merged.push_back(*a++);
      else if (b->first < a->first)
        merged.push_back(*b++);
      else {
        merged.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    merged.insert(merged.end(), a, items_.cend());
    merged.insert(merged.end(), b, other.items_.cend());
    items_ = std::move(merged);
  }

 private:
  std::string config_id_;
  std::vector<Entry> items_;
};

// Similarity score: dot product of the two count vectors. Comparing
// vectors from different configurations is a usage error, the scores
// would be meaningless.
inline std::uint64_t dot(const FeatureVector& a, const FeatureVector& b) {
  if (a.config_id() != b.config_id())
    throw UsageError("cannot compare feature vectors of configs " +
                     a.config_id() + " and " + b.config_id());
  std::uint64_t sum = 0;
  auto i = a.items().begin();
  auto j = b.items().begin();
  while (i != a.items().end() && j != b.items().end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else
      sum += (i++)->second * (j++)->second;
  }
  return sum;
}

namespace detail {

// length-prefixed pair encoding keeps feature ids injective
inline std::string pair_feature(char tag, const std::string& a,
                                const std::string& b) {
  std::string s;
  s.reserve(a.size() + b.size() + 8);
  s += tag;
  s += ':';
  s += std::to_string(a.size());
  s += ':';
  s += a;
  s += b;
  return s;
}

}  // namespace detail

// Extracts Aroma-style features from a CAPT:
//   token features     one per token leaf, local variables as "#VAR"
//   parent features    (leaf, ancestor label) up to ancestor_depth
//   sibling features   (leaf, following leaf) within sibling_window
//   variable usage     (context of use i, context of use i+1) per name
// Suppressed nodes contribute nothing and are skipped when pairing.
inline FeatureVector featurize(const CaptTree& t, const FeaturizerParams& p) {
  const SptTree& spt = *t.spt;
  std::map<std::string, std::uint64_t> counts;
  auto add = [&](std::string f) {
    auto [it, fresh] = counts.emplace(std::move(f), 1);
    if (!fresh && !p.binary_counts) ++it->second;
  };

  auto effective = [&](std::size_t i) -> std::string {
    if (t.has_class(i) && t.class_of(i) == IdClass::LocalVar)
      return kLocalVarPlaceholder;
    return t.labels[i];
  };

  // token leaves in source order (preorder == leaf order for leaves)
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < spt.nodes.size(); ++i)
    if (spt.nodes[i].kind == SptKind::TokenLeaf && !t.suppressed[i])
      leaves.push_back(i);

  auto nearest_context = [&](std::size_t i) -> std::string {
    for (int a = spt.nodes[i].parent; a >= 0; a = spt.nodes[a].parent)
      if (!t.suppressed[a]) return t.labels[a];
    return std::string();
  };

  for (std::size_t li = 0; li < leaves.size(); ++li) {
    std::size_t i = leaves[li];
    std::string eff = effective(i);

    add("T:" + eff);

    int depth = 0;
    for (int a = spt.nodes[i].parent; a >= 0 && depth < p.ancestor_depth;
         a = spt.nodes[a].parent) {
      if (t.suppressed[a]) continue;
      add(detail::pair_feature('P', eff, t.labels[a]));
      ++depth;
    }

    for (int w = 1; w <= p.sibling_window; ++w) {
      if (li + w >= leaves.size()) break;
      add(detail::pair_feature('S', eff, effective(leaves[li + w])));
    }
  }

  // variable usage: consecutive uses of one variable, paired by the
  // label of the nearest surviving ancestor. Locals always take part;
  // globals join once the configuration folds them into "#VAR".
  std::map<std::string, std::vector<std::size_t>> uses;
  for (std::size_t i : leaves) {
    if (!t.has_class(i)) continue;
    IdClass cls = t.class_of(i);
    bool tracked = cls == IdClass::LocalVar ||
                   (cls == IdClass::GlobalVar && t.config.global_var == 3);
    if (tracked)
      uses[p.varuse_merge_names ? effective(i) : spt.nodes[i].label]
          .push_back(i);
  }
  for (const auto& [name, occ] : uses) {
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
      add(detail::pair_feature('V', nearest_context(occ[k]),
                               nearest_context(occ[k + 1])));
  }

  return FeatureVector(config_id(t.config), std::move(counts));
}

}  // namespace capt
