#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "capt/spt.hpp"

using namespace capt;

namespace {

SptTree spt_of(const std::string& src, Language lang = Language::Cpp) {
  SyntaxTree t = parse_source(src, lang);
  return build_spt(*t.root, lang);
}

std::multiset<std::string> internal_labels(const SptTree& t) {
  std::multiset<std::string> out;
  for (const auto& n : t.nodes)
    if (n.kind == SptKind::Internal) out.insert(n.label);
  return out;
}

bool has_label(const SptTree& t, const std::string& label) {
  auto ls = internal_labels(t);
  return ls.count(label) > 0;
}

// Rebuilds an internal label from the stored children, following the
// documented scheme. Independent of the construction-time code path,
// which works on the unflattened build tree.
std::string label_oracle(const SptTree& t, std::size_t i) {
  const SptNode& n = t.nodes[i];
  if (n.syntax_type == "compound_statement") {
    std::string out = "{";
    bool first = true;
    for (int c : n.children) {
      if (t.nodes[c].kind == SptKind::KeywordLeaf) continue;
      if (!first) out += ';';
      out += '#';
      first = false;
    }
    return out + "}";
  }
  std::string out;
  for (int c : n.children) {
    const SptNode& ch = t.nodes[c];
    if (ch.kind == SptKind::KeywordLeaf)
      out += ch.label;
    else if (ch.kind == SptKind::Internal &&
             ch.syntax_type == "compound_statement")
      out += "{#}";
    else
      out += '#';
  }
  return out;
}

}  // namespace

TEST_CASE("canonical statement labels") {
  auto t = spt_of("void f() {\n"
                  "  int s = 0;\n"
                  "  for (int i = 0; i < n; i++) { s += i; }\n"
                  "  while (s) { s--; }\n"
                  "  do { s++; } while (s < 3);\n"
                  "  if (s) g();\n"
                  "  return;\n"
                  "}");
  CHECK(has_label(t, "int#;"));
  CHECK(has_label(t, "for(##;#){#}"));
  CHECK(has_label(t, "while(#){#}"));
  CHECK(has_label(t, "do{#}while(#);"));
  CHECK(has_label(t, "if(#)#"));
  CHECK(has_label(t, "#=#"));
  CHECK(has_label(t, "#+=#"));
}

TEST_CASE("expression labels") {
  auto t = spt_of("int f() {\n"
                  "  x = a + b * c[i];\n"
                  "  y = p.q->r;\n"
                  "  z = cond ? u : v;\n"
                  "  return std::max(a, b);\n"
                  "}");
  CHECK(has_label(t, "#+#"));
  CHECK(has_label(t, "#*#"));
  CHECK(has_label(t, "#[#]"));
  CHECK(has_label(t, "#.#"));
  CHECK(has_label(t, "#->#"));
  CHECK(has_label(t, "#?#:#"));
  CHECK(has_label(t, "#::#"));
  CHECK(has_label(t, "return#;"));
  CHECK(has_label(t, "(#,#)"));
}

TEST_CASE("for statement label variants") {
  CHECK(has_label(spt_of("void f() { for (i = 0; i < n; i++) { g(); } }"),
                  "for(#;#;#){#}"));
  CHECK(has_label(spt_of("void f() { for (;;) { g(); } }"), "for(;;){#}"));
}

TEST_CASE("switch and case labels") {
  auto t = spt_of("void f(int k) {\n"
                  "  switch (k) {\n"
                  "  case 1:\n"
                  "    g();\n"
                  "    break;\n"
                  "  default:\n"
                  "    h();\n"
                  "  }\n"
                  "}");
  CHECK(has_label(t, "switch(#){#}"));
  CHECK(has_label(t, "case#:##"));
  CHECK(has_label(t, "default:#"));
}

TEST_CASE("empty argument list splices into the call") {
  // both the declarator f() and the call g() collapse the same way
  auto t = spt_of("void f() { g(); }");
  std::vector<std::string> heads;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].kind != SptKind::Internal || t.nodes[i].label != "#()")
      continue;
    REQUIRE(t.nodes[i].children.size() == 3);
    CHECK(t.nodes[t.nodes[i].children[0]].kind == SptKind::TokenLeaf);
    CHECK(t.nodes[t.nodes[i].children[1]].label == "(");
    CHECK(t.nodes[t.nodes[i].children[2]].label == ")");
    heads.push_back(t.nodes[t.nodes[i].children[0]].label);
  }
  CHECK(heads == std::vector<std::string>{"f", "g"});
}

TEST_CASE("non-empty argument list stays a node") {
  auto t = spt_of("void f() { g(a); }");
  CHECK(has_label(t, "##"));
  CHECK(has_label(t, "(#)"));
}

TEST_CASE("single-child chains collapse") {
  auto t = spt_of("int f() { return 0; }");
  REQUIRE(!t.empty());
  CHECK(t.nodes[0].syntax_type == "function_definition");
}

TEST_CASE("preorder storage: ordinals, parents before children") {
  auto t = spt_of("int f(int a) { if (a) return a; return 0; }");
  REQUIRE(!t.empty());
  CHECK(t.ordinal_of(0) == 1);
  CHECK(t.nodes[0].parent == -1);
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    CHECK(t.nodes[i].parent >= 0);
    CHECK(static_cast<std::size_t>(t.nodes[i].parent) < i);
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (n.kind == SptKind::Internal)
      CHECK(n.children.size() >= 2);
    else
      CHECK(n.children.empty());
    for (int c : n.children) CHECK(t.nodes[c].parent == static_cast<int>(i));
  }
}

TEST_CASE("leaves reproduce the token stream in order") {
  const std::string src =
      "int f() { int x = g(1, 2); return x > 0 ? x : -x; }";
  auto t = spt_of(src);
  std::vector<std::string> leaf_labels;
  for (int i : leaves_in_order(t)) leaf_labels.push_back(t.nodes[i].label);
  std::vector<std::string> expected;
  for (const auto& tok : lex(src, Language::Cpp))
    if (tok.kind != TokenKind::Eof) expected.emplace_back(tok.text);
  CHECK(leaf_labels == expected);
}

TEST_CASE("token leaves carry ascending token indices") {
  auto t = spt_of("int f() { return a + b; }");
  std::uint32_t prev = 0;
  bool first = true;
  for (int i : token_leaves(t)) {
    if (!first) CHECK(t.nodes[i].token_index > prev);
    prev = t.nodes[i].token_index;
    first = false;
  }
}

TEST_CASE("internal labels match the reconstruction oracle") {
  const std::string sources[] = {
      "int f() { int s = 0; for (int i = 0; i < 9; i++) s += i; return s; }",
      "void g(char* s) { while (*s) { putchar(*s); s++; } }",
      "int h(int k) { switch (k) { case 0: return 1; default: return k; } }",
      "void q() { a[i][j] = b.c->d + (e ? f : g); }",
  };
  for (const auto& src : sources) {
    auto t = spt_of(src);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      if (t.nodes[i].kind == SptKind::Internal)
        CHECK(t.nodes[i].label == label_oracle(t, i));
  }
}

TEST_CASE("building from code with syntax errors is refused") {
  SyntaxTree t = parse_source("int f( { ;;;", Language::C);
  CHECK_THROWS_AS(build_spt(*t.root, Language::C), DataError);
}

TEST_CASE("dump format") {
  auto t = spt_of("void f() { g(); }");
  const std::string expected =
      "1 INTERNAL void#{#}\n"
      "2   KEYWORD_LEAF void\n"
      "3   INTERNAL #()\n"
      "4     TOKEN_LEAF f\n"
      "5     KEYWORD_LEAF (\n"
      "6     KEYWORD_LEAF )\n"
      "7   INTERNAL {#}\n"
      "8     KEYWORD_LEAF {\n"
      "9     INTERNAL #;\n"
      "10       INTERNAL #()\n"
      "11         TOKEN_LEAF g\n"
      "12         KEYWORD_LEAF (\n"
      "13         KEYWORD_LEAF )\n"
      "14       KEYWORD_LEAF ;\n"
      "15     KEYWORD_LEAF }\n";
  CHECK(dump_spt(t) == expected);
}
