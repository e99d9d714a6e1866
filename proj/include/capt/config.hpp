#pragma once

#include <string>
#include <vector>

#include "capt/errors.hpp"

namespace capt {

// A transformation configuration: one option per category.
//   annotation   0 none | 1 annotate all internal nodes
//                       | 2 annotate parenthesis nodes
//   compound     0 keep | 1 drop compound-statement features
//                       | 2 replace label with "{#}"
//   global_var   0 keep | 1 drop | 2 "#GVAR" | 3 "#VAR"
//   global_func  0 keep | 1 drop | 2 "#EXFUNC"
// 0-0-0-0 is the untransformed baseline.
struct CaptConfig {
  int annotation = 0;
  int compound = 0;
  int global_var = 0;
  int global_func = 0;

  bool operator==(const CaptConfig&) const = default;
  bool is_baseline() const {
    return annotation == 0 && compound == 0 && global_var == 0 &&
           global_func == 0;
  }
};

inline constexpr int kAnnotationOptions = 3;
inline constexpr int kCompoundOptions = 3;
inline constexpr int kGlobalVarOptions = 4;
inline constexpr int kGlobalFuncOptions = 3;
inline constexpr int kConfigCount = kAnnotationOptions * kCompoundOptions *
                                    kGlobalVarOptions * kGlobalFuncOptions;

inline void validate_config(const CaptConfig& c) {
  auto check = [](int v, int n, const char* field) {
    if (v < 0 || v >= n)
      throw UsageError(std::string(field) + " option must be in 0.." +
                       std::to_string(n - 1) + ", got " + std::to_string(v));
  };
  check(c.annotation, kAnnotationOptions, "annotation");
  check(c.compound, kCompoundOptions, "compound");
  check(c.global_var, kGlobalVarOptions, "global_var");
  check(c.global_func, kGlobalFuncOptions, "global_func");
}

inline std::string config_id(const CaptConfig& c) {
  return std::to_string(c.annotation) + '-' + std::to_string(c.compound) +
         '-' + std::to_string(c.global_var) + '-' +
         std::to_string(c.global_func);
}

// "A-B-C-D" with single digit fields, e.g. "2-0-0-0"
inline CaptConfig parse_config_id(const std::string& id) {
  auto bad = [&](const std::string& why) -> UsageError {
    return UsageError("bad config id \"" + id + "\": " + why);
  };
  if (id.size() != 7 || id[1] != '-' || id[3] != '-' || id[5] != '-')
    throw bad("expected four dash-separated digits like 0-0-0-0");
  for (int i : {0, 2, 4, 6})
    if (id[i] < '0' || id[i] > '9') throw bad("expected digit fields");
  CaptConfig c;
  c.annotation = id[0] - '0';
  c.compound = id[2] - '0';
  c.global_var = id[4] - '0';
  c.global_func = id[6] - '0';
  try {
    validate_config(c);
  } catch (const UsageError& e) {
    throw bad(e.what());
  }
  return c;
}

// all 108 configurations in lexicographic order, 0-0-0-0 first
inline std::vector<CaptConfig> enumerate_configs() {
  std::vector<CaptConfig> out;
  out.reserve(kConfigCount);
  for (int a = 0; a < kAnnotationOptions; ++a)
    for (int b = 0; b < kCompoundOptions; ++b)
      for (int c = 0; c < kGlobalVarOptions; ++c)
        for (int d = 0; d < kGlobalFuncOptions; ++d)
          out.push_back(CaptConfig{a, b, c, d});
  return out;
}

}  // namespace capt
