#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "capt/featurizer.hpp"
#include "capt/pipeline.hpp"

using namespace capt;

namespace {

FeatureVector vec_of(const std::string& src, const std::string& cfg = "0-0-0-0",
                     FeaturizerParams params = {}) {
  PreparedSnippet snip = prepare_snippet("t.c", src, Language::C);
  REQUIRE_FALSE(snip.functions.empty());
  return snippet_vector(snip, parse_config_id(cfg), params);
}

}  // namespace

TEST_CASE("feature extraction, worked example") {
  // void t() { int a; a = a + 1; }
  // leaves: t  a  a  a  1, locals folded to #VAR
  FeatureVector v = vec_of("void t() {\n  int a;\n  a = a + 1;\n}\n");

  CHECK(v.count_of("T:t") == 1);
  CHECK(v.count_of("T:#VAR") == 3);
  CHECK(v.count_of("T:1") == 1);
  CHECK(v.count_of("T:a") == 0);  // source names never surface

  // parent pairs, up to three unsuppressed ancestors
  CHECK(v.count_of("P:1:t#()") == 1);
  CHECK(v.count_of("P:1:tvoid#{#}") == 1);
  CHECK(v.count_of("P:4:#VARint#;") == 1);
  CHECK(v.count_of("P:4:#VAR{#;#}") == 2);
  CHECK(v.count_of("P:4:#VARvoid#{#}") == 1);
  CHECK(v.count_of("P:4:#VAR#=#") == 2);
  CHECK(v.count_of("P:4:#VAR#;") == 2);
  CHECK(v.count_of("P:4:#VAR#+#") == 1);
  CHECK(v.count_of("P:1:1#+#") == 1);
  CHECK(v.count_of("P:1:1#=#") == 1);
  CHECK(v.count_of("P:1:1#;") == 1);
  // the literal's fourth ancestor {#;#} is out of reach
  CHECK(v.count_of("P:1:1{#;#}") == 0);

  // sibling pairs, window 2
  CHECK(v.count_of("S:1:t#VAR") == 2);
  CHECK(v.count_of("S:4:#VAR#VAR") == 3);
  CHECK(v.count_of("S:4:#VAR1") == 2);

  // consecutive uses of `a`, keyed by nearest ancestor labels
  CHECK(v.count_of("V:5:int#;#=#") == 1);
  CHECK(v.count_of("V:3:#=##+#") == 1);

  CHECK(v.distinct_count() == 19);
  CHECK(v.total_count() == 28);
}

TEST_CASE("keyword leaves contribute nothing") {
  FeatureVector v = vec_of("void t() {\n  while (1) {\n    f();\n  }\n}\n");
  // the while keyword appears in ancestor labels but never as a token
  CHECK(v.count_of("T:while") == 0);
  CHECK(v.count_of("T:(") == 0);
  CHECK(v.count_of("T:{") == 0);
  CHECK(v.count_of("T:;") == 0);
  CHECK(v.count_of("T:f") == 1);
  CHECK(v.count_of("T:1") == 1);
  CHECK(v.count_of("P:1:1while(#){#}") == 1);
  CHECK(v.count_of("S:1:1f") == 1);  // siblings skip the keywords between
  CHECK(v.distinct_count() == 14);
  CHECK(v.total_count() == 14);
}

TEST_CASE("pair encoding is injective") {
  // without the length prefix these would collide
  CHECK(detail::pair_feature('P', "ab", "c") !=
        detail::pair_feature('P', "a", "bc"));
  CHECK(detail::pair_feature('S', "x", "yz") !=
        detail::pair_feature('S', "xy", "z"));
  CHECK(detail::pair_feature('P', "a", "b") !=
        detail::pair_feature('S', "a", "b"));
}

TEST_CASE("binary counts record presence only") {
  FeaturizerParams p;
  p.binary_counts = true;
  FeatureVector counted = vec_of("void t() {\n  int a;\n  a = a + 1;\n}\n");
  FeatureVector binary =
      vec_of("void t() {\n  int a;\n  a = a + 1;\n}\n", "0-0-0-0", p);
  CHECK(binary.distinct_count() == counted.distinct_count());
  for (const auto& [f, c] : binary.items()) {
    CHECK(c == 1);
    CHECK(counted.count_of(f) >= 1);
  }
  CHECK(binary.total_count() == binary.distinct_count());
}

TEST_CASE("variable usage chains are per name unless merged") {
  const char* src =
      "void m() {\n"
      "  int x;\n"
      "  int y;\n"
      "  x = 1;\n"
      "  y = x;\n"
      "}\n";
  FeatureVector per_name = vec_of(src);
  CHECK(per_name.count_of("V:5:int#;#=#") == 2);  // x and y decl -> first use
  CHECK(per_name.count_of("V:3:#=##=#") == 1);    // x = 1 -> y = x
  CHECK(per_name.count_of("V:5:int#;int#;") == 0);

  FeaturizerParams p;
  p.varuse_merge_names = true;
  FeatureVector merged = vec_of(src, "0-0-0-0", p);
  // one chain over all five #VAR occurrences in token order
  CHECK(merged.count_of("V:5:int#;int#;") == 1);
  CHECK(merged.count_of("V:5:int#;#=#") == 1);
  CHECK(merged.count_of("V:3:#=##=#") == 2);
}

TEST_CASE("features are invariant under local renaming") {
  FeatureVector a = vec_of("void t() {\n  int x;\n  x = x + 1;\n}\n");
  FeatureVector b = vec_of("void t() {\n  int y;\n  y = y + 1;\n}\n");
  CHECK(a.items() == b.items());
}

TEST_CASE("renaming globals changes nothing once they are folded") {
  const char* f1 =
      "int global1;\n"
      "\n"
      "int f1() {\n"
      "  return (global1 + global1);\n"
      "}\n";
  FeatureVector kept = vec_of(f1, "0-0-0-0");
  CHECK(kept.count_of("T:global1") == 2);

  FeatureVector folded = vec_of(f1, "0-0-2-0");
  CHECK(folded.count_of("T:global1") == 0);
  CHECK(folded.count_of("T:#GVAR") >= 2);
}

TEST_CASE("suppressed nodes vanish from every feature family") {
  const char* src =
      "int shared;\n"
      "\n"
      "void t() {\n"
      "  shared = 1;\n"
      "}\n";
  FeatureVector dropped = vec_of(src, "0-0-1-0");
  CHECK(dropped.count_of("T:shared") == 0);
  for (const auto& [f, c] : dropped.items())
    CHECK(f.find("shared") == std::string::npos);

  // with the block suppressed, parents skip to the next live ancestor
  FeatureVector noblock = vec_of("void t() {\n  int a;\n}\n", "0-1-0-0");
  CHECK(noblock.count_of("P:4:#VAR{#}") == 0);
  CHECK(noblock.count_of("P:4:#VARint#;") == 1);
  CHECK(noblock.count_of("P:4:#VARvoid#{#}") == 1);
}

TEST_CASE("vectors carry their configuration id") {
  CHECK(vec_of("void t() { }", "2-0-0-0").config_id() == "2-0-0-0");
}
