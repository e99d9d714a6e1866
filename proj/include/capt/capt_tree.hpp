#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capt/config.hpp"
#include "capt/errors.hpp"
#include "capt/scope.hpp"
#include "capt/spt.hpp"

namespace capt {

// A CAPT is an SPT plus a configuration: structure and token order are
// shared with the underlying SPT, only labels change and some nodes
// are marked suppressed. Suppressed nodes stay in the tree (spans and
// ordinals are preserved) but lose their labels; the featurizer skips
// them. Clearing the label keeps a suppressed global's source name out
// of the tree, so consistently renamed snippets produce identical
// CaptTrees under the suppressing options too.
struct CaptTree {
  const SptTree* spt = nullptr;
  CaptConfig config;
  std::vector<std::string> labels;   // by node index
  std::vector<bool> suppressed;      // by node index
  std::vector<std::int8_t> id_class;  // IdClass per node, -1 if none

  std::size_t size() const { return labels.size(); }
  const SptNode& node(std::size_t i) const { return spt->nodes[i]; }
  bool has_class(std::size_t i) const { return id_class[i] >= 0; }
  IdClass class_of(std::size_t i) const {
    return static_cast<IdClass>(id_class[i]);
  }
};

// Applies a configuration to an SPT. Categories apply in order
// annotation, compound, global_var, global_func, so e.g. replacing a
// compound label with "{#}" discards an annotation added before it.
inline CaptTree apply_config(const SptTree& spt, const ScopeMap& scope,
                             const CaptConfig& config) {
  validate_config(config);
  CaptTree t;
  t.spt = &spt;
  t.config = config;
  const std::size_t n = spt.nodes.size();
  t.labels.reserve(n);
  t.suppressed.assign(n, false);
  t.id_class.assign(n, -1);

  for (std::size_t i = 0; i < n; ++i) {
    const SptNode& node = spt.nodes[i];
    t.labels.push_back(node.label);
    if (node.kind == SptKind::TokenLeaf && node.syntax_type == "identifier") {
      auto it = scope.find(node.token_index);
      if (it == scope.end())
        throw InternalError("identifier leaf '" + node.label +
                            "' has no scope classification");
      t.id_class[i] = static_cast<std::int8_t>(it->second);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const SptNode& node = spt.nodes[i];

    if (node.kind == SptKind::Internal) {
      bool annotate =
          config.annotation == 1 ||
          (config.annotation == 2 &&
           t.labels[i].find_first_of("()") != std::string::npos);
      if (annotate) {
        t.labels[i] += '@';
        t.labels[i] += node.syntax_type;
      }
      if (node.syntax_type == "compound_statement") {
        if (config.compound == 1) t.suppressed[i] = true;
        if (config.compound == 2) t.labels[i] = "{#}";
      }
      continue;
    }

    if (t.id_class[i] < 0) continue;
    IdClass cls = t.class_of(i);
    if (cls == IdClass::GlobalVar) {
      if (config.global_var == 1) t.suppressed[i] = true;
      if (config.global_var == 2) t.labels[i] = "#GVAR";
      if (config.global_var == 3) t.labels[i] = kLocalVarPlaceholder;
    } else if (cls == IdClass::GlobalFunc) {
      if (config.global_func == 1) t.suppressed[i] = true;
      if (config.global_func == 2) t.labels[i] = "#EXFUNC";
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t.suppressed[i]) t.labels[i].clear();
  return t;
}

}  // namespace capt
