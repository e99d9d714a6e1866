#pragma once

namespace capt {

inline constexpr const char* kToolVersion = "0.1.0";

// Version of the built-in tolerant C/C++ grammar. Bumped whenever node
// types, tree shapes or recovery rules change, since downstream labels
// (and therefore feature vectors) depend on them.
inline constexpr const char* kGrammarVersion = "builtin-c-cpp-1";

// Version of the identifier classification heuristic (see scope.hpp).
inline constexpr const char* kScopeHeuristicVersion = "scope-heuristic-1";

}  // namespace capt
