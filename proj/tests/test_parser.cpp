#include <catch2/catch_amalgamated.hpp>

#include "capt/parser.hpp"

using namespace capt;

namespace {

std::vector<std::string> leaf_texts(const SyntaxNode& n) {
  std::vector<std::string> out;
  if (n.leaf) {
    out.push_back(n.text);
    return out;
  }
  for (const auto& c : n.children) {
    auto sub = leaf_texts(*c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace

TEST_CASE("language tags") {
  CHECK(language_from_tag("c") == Language::C);
  CHECK(language_from_tag("cpp") == Language::Cpp);
  CHECK_THROWS_AS(language_from_tag("java"), UsageError);
  CHECK(std::string(language_tag(Language::Cpp)) == "cpp");
}

namespace {

std::vector<std::string> token_texts(const std::string& src, Language lang) {
  std::vector<std::string> out;
  for (const auto& t : lex(src, lang))
    if (t.kind != TokenKind::Eof) out.emplace_back(t.text);
  return out;
}

}  // namespace

TEST_CASE("lexer splits tokens and drops comments") {
  CHECK(token_texts("int a = 1; // trailing\n/* block */ a += 2;",
                    Language::C) ==
        std::vector<std::string>{"int", "a", "=", "1", ";", "a", "+=", "2",
                                 ";"});
}

TEST_CASE("parse is total: leaves reproduce the token stream") {
  const std::string sources[] = {
      "int main() { int a = 0; for (int i = 0; i < 3; i++) a += i; return a; }",
      "int f(int x) { while (x > 0) x--; do { x++; } while (x < 2); return x; }",
      "char g(char* s) { return s[0] == '\\0' ? 'x' : s[1]; }",
      "int h() { switch (k) { case 1: return 2; default: break; } return 0; }",
      "void q() { std::cout << a[i][j] << std::endl; }",
  };
  for (const auto& src : sources) {
    SyntaxTree t = parse_source(src, Language::Cpp);
    CHECK(leaf_texts(*t.root) == token_texts(src, Language::Cpp));
  }
}

TEST_CASE("clean sources carry no error nodes") {
  SyntaxTree t = parse_source(
      "int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }",
      Language::C);
  CHECK_FALSE(has_parse_errors(*t.root));
}

TEST_CASE("garbage produces error nodes, not an exception") {
  SyntaxTree t = parse_source("int f( { ;;; ) garbage", Language::C);
  CHECK(has_parse_errors(*t.root));
}

TEST_CASE("right shift vs nested template close") {
  // ">>" lexes as two ">" so nested template argument lists can close;
  // plain shifts still parse, they just carry two operator leaves
  SyntaxTree shift = parse_source("int f() { return a >> 2; }", Language::Cpp);
  CHECK_FALSE(has_parse_errors(*shift.root));
  auto texts = leaf_texts(*shift.root);
  CHECK(std::count(texts.begin(), texts.end(), ">>") == 0);
  CHECK(std::count(texts.begin(), texts.end(), ">") == 2);

  SyntaxTree tmpl = parse_source(
      "void f() { std::vector<std::pair<int, int>> v; }", Language::Cpp);
  CHECK_FALSE(has_parse_errors(*tmpl.root));
}

TEST_CASE("function definitions are found and flagged clean") {
  SyntaxTree t = parse_source(
      "int one() { return 1; }\nint two() { return 2; }", Language::C);
  auto fns = functions_of(t);
  REQUIRE(fns.size() == 2);
  CHECK(fns[0].clean);
  CHECK(fns[1].clean);
}

TEST_CASE("a broken function does not poison its neighbors") {
  SyntaxTree t = parse_source(
      "int ok() { return 1; }\nint bad( { return ;;;", Language::C);
  auto fns = functions_of(t);
  REQUIRE(!fns.empty());
  CHECK(fns[0].clean);
  bool any_unclean = false;
  for (const auto& fn : fns) any_unclean |= !fn.clean;
  CHECK(has_parse_errors(*t.root));
  (void)any_unclean;
}

TEST_CASE("qualified names parse as declarations when declarator follows") {
  SyntaxTree decl = parse_source("void f() { std::string s; }", Language::Cpp);
  CHECK_FALSE(has_parse_errors(*decl.root));
  SyntaxTree expr = parse_source("void f() { std::cin >> s; }", Language::Cpp);
  CHECK_FALSE(has_parse_errors(*expr.root));
}
