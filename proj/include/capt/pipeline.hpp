#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capt/capt_tree.hpp"
#include "capt/featurizer.hpp"
#include "capt/parser.hpp"
#include "capt/scope.hpp"
#include "capt/spt.hpp"

namespace capt {

// Source-to-vector glue. Parsing, scope analysis and SPT construction
// run once per snippet; every configuration then re-labels the cached
// trees, which is what makes sweeping 108 configs affordable.

struct PreparedFunction {
  SptTree spt;
  ScopeMap scope;
};

struct PreparedSnippet {
  std::string id;
  std::vector<PreparedFunction> functions;
};

// Keeps every cleanly parsed function definition in the file. Files
// admitted by lenient pruning may still carry broken functions; those
// get skipped here, matching what pruning counted.
inline PreparedSnippet prepare_snippet(std::string id,
                                       const std::string& source,
                                       Language lang) {
  PreparedSnippet out;
  out.id = std::move(id);
  SyntaxTree tree = parse_source(source, lang);
  for (const FunctionInfo& fn : functions_of(tree)) {
    if (!fn.clean) continue;
    PreparedFunction pf;
    pf.spt = build_spt(*fn.node, tree.lang);
    pf.scope = classify_identifiers(*fn.node);
    out.functions.push_back(std::move(pf));
  }
  return out;
}

// A snippet's vector is the sum over its functions. File-scope code
// (globals, includes) contributes nothing; a file with no clean
// functions yields an empty vector.
inline FeatureVector snippet_vector(const PreparedSnippet& s,
                                    const CaptConfig& cfg,
                                    const FeaturizerParams& params = {}) {
  FeatureVector acc(config_id(cfg), {});
  for (const PreparedFunction& f : s.functions) {
    CaptTree capt = apply_config(f.spt, f.scope, cfg);
    acc.merge(featurize(capt, params));
  }
  return acc;
}

}  // namespace capt
