#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "capt/lexer.hpp"
#include "capt/syntax.hpp"

namespace capt {

// Parser adapter. The pipeline depends only on this interface, so a
// grammar library can be swapped in without touching downstream code.
class ParserBackend {
 public:
  virtual ~ParserBackend() = default;
  virtual SyntaxTree parse(std::string source, Language lang) = 0;
  virtual const char* name() const = 0;
};

namespace detail {

// Tolerant recursive-descent parser for the C-flavored subset of C and
// C++ found in programming-contest corpora. It never rejects input:
// unparseable regions become ERROR nodes that keep their tokens, so
// the leaf sequence always equals the token stream. Disambiguation
// (declaration vs expression, cast vs parens, template arguments) is
// heuristic, backed by a known-type-name table.
class ParserImpl {
 public:
  ParserImpl(const std::vector<Token>& toks, Language lang)
      : toks_(toks), lang_(lang) {
    seed_types();
  }

  NodePtr run() {
    auto root = make_node("translation_unit");
    while (!at_eof()) {
      std::size_t before = pos_;
      adopt(*root, parse_top_level());
      if (pos_ == before) {  // force progress on stray tokens
        auto err = error_node();
        adopt(*err, take());
        adopt(*root, std::move(err));
      }
    }
    return root;
  }

 private:
  const std::vector<Token>& toks_;
  Language lang_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::unordered_set<std::string> types_;

  static constexpr int kMaxDepth = 400;

  void seed_types() {
    types_ = {"size_t", "ssize_t", "ptrdiff_t", "FILE", "time_t"};
    if (lang_ == Language::Cpp) {
      for (const char* t :
           {"string", "vector", "map", "set", "multiset", "multimap",
            "pair", "queue", "priority_queue", "stack", "deque", "list",
            "bitset", "istream", "ostream", "ifstream", "ofstream",
            "stringstream", "istringstream", "ostringstream", "iterator"})
        types_.insert(t);
    }
  }

  // ---- token access ----

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    if (i >= toks_.size()) i = toks_.size() - 1;  // Eof sentinel
    return toks_[i];
  }
  bool at_eof() const { return peek().kind == TokenKind::Eof; }
  bool at(std::string_view text, std::size_t k = 0) const {
    const Token& t = peek(k);
    return (t.kind == TokenKind::Punct || t.kind == TokenKind::Keyword) &&
           t.text == text;
  }
  bool at_kind(TokenKind kind, std::size_t k = 0) const {
    return peek(k).kind == kind;
  }

  NodePtr take() {
    if (at_eof()) return error_node();  // callers check; never emit Eof
    std::uint32_t idx = static_cast<std::uint32_t>(pos_);
    return make_leaf(toks_[pos_++], idx);
  }

  NodePtr take_as(const char* type) {
    auto leaf = take();
    leaf->type = type;
    return leaf;
  }

  bool eat(SyntaxNode& parent, std::string_view text) {
    if (!at(text)) return false;
    adopt(parent, take());
    return true;
  }

  NodePtr error_node() {
    auto n = make_node("ERROR");
    n->error = true;
    n->begin = n->end = peek().begin;
    return n;
  }

  // Turns a half-built node into an ERROR node and swallows tokens up
  // to a statement boundary, keeping brace/paren balance.
  NodePtr fail(NodePtr node) {
    node->type = "ERROR";
    node->error = true;
    int braces = 0, parens = 0;
    std::size_t guard = 0;
    while (!at_eof() && ++guard < 100000) {
      if (braces == 0 && parens == 0) {
        if (at("}")) break;
        if (at(";")) {
          adopt(*node, take());
          break;
        }
      }
      if (at("{")) ++braces;
      if (at("}")) --braces;
      if (at("(")) ++parens;
      if (at(")") && parens > 0) --parens;
      adopt(*node, take());
    }
    return node;
  }

  struct DepthGuard {
    ParserImpl& p;
    bool ok;
    explicit DepthGuard(ParserImpl& p_) : p(p_), ok(++p.depth_ <= kMaxDepth) {}
    ~DepthGuard() { --p.depth_; }
  };

  // ---- lookahead classification ----

  static bool is_type_keyword(std::string_view t) {
    static const std::unordered_set<std::string_view> kws = {
        "void", "char", "int",  "float",   "double", "bool",
        "long", "short", "signed", "unsigned", "wchar_t", "_Bool", "auto"};
    return kws.count(t) > 0;
  }
  static bool is_spec_keyword(std::string_view t) {
    static const std::unordered_set<std::string_view> kws = {
        "const",  "volatile", "static",   "extern", "register", "inline",
        "restrict", "friend", "virtual",  "explicit", "mutable", "typename"};
    return kws.count(t) > 0;
  }
  bool is_known_type(std::string_view t) const {
    return types_.count(std::string(t)) > 0;
  }

  // Scans a balanced  < ... >  group starting at offset k (peek(k) must
  // be "<"). Returns the offset just past the closing ">", or 0 if the
  // contents do not look like template arguments.
  std::size_t scan_template_args(std::size_t k) const {
    if (!at("<", k)) return 0;
    int depth = 0;
    std::size_t i = k;
    std::size_t guard = 0;
    while (++guard < 2000) {
      const Token& t = peek(i);
      if (t.kind == TokenKind::Eof) return 0;
      if (t.kind == TokenKind::Punct || t.kind == TokenKind::Keyword) {
        if (t.text == "<") {
          ++depth;
          ++i;
          continue;
        }
        if (t.text == ">") {
          --depth;
          ++i;
          if (depth == 0) return i;
          continue;
        }
        if (t.text == "," || t.text == "*" || t.text == "&" ||
            t.text == "::" || t.text == "[" || t.text == "]") {
          ++i;
          continue;
        }
        if (is_type_keyword(t.text) || is_spec_keyword(t.text)) {
          ++i;
          continue;
        }
        return 0;
      }
      if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Number) {
        ++i;
        continue;
      }
      return 0;
    }
    return 0;
  }

  // Offset just past a type mention starting at k: qualifiers, a type
  // name (keyword or known identifier), template args, stars. Returns
  // 0 if peek(k) does not start a type.
  std::size_t scan_type(std::size_t k) const {
    std::size_t i = k;
    bool saw_name = false;
    std::size_t guard = 0;
    while (++guard < 200) {
      const Token& t = peek(i);
      if (t.kind == TokenKind::Keyword &&
          (is_type_keyword(t.text) || t.text == "const" ||
           t.text == "unsigned" || t.text == "signed" ||
           t.text == "struct" || t.text == "typename")) {
        if (t.text == "struct")
          saw_name = false;  // need the tag name next
        else if (is_type_keyword(t.text))
          saw_name = true;
        ++i;
        continue;
      }
      if (t.kind == TokenKind::Identifier && !saw_name &&
          (is_known_type(t.text) || i > k)) {
        // after "struct" or a qualifier any identifier counts as a name
        saw_name = true;
        ++i;
        if (std::size_t j = scan_template_args(i); j) i = j;
        continue;
      }
      break;
    }
    if (!saw_name) return 0;
    while (at("*", i) || at("&", i) || at("const", i)) ++i;
    return i;
  }

  // Declaration-vs-expression decision at statement level.
  // identifier (:: identifier)+ with optional template arguments per
  // component; returns the offset past the final component, else 0
  std::size_t scan_qualified_name(std::size_t k) const {
    if (!at_kind(TokenKind::Identifier, k)) return 0;
    std::size_t i = k + 1;
    if (std::size_t j = scan_template_args(i)) i = j;
    if (!at("::", i)) return 0;
    while (at("::", i)) {
      if (!at_kind(TokenKind::Identifier, i + 1)) return 0;
      i += 2;
      if (std::size_t j = scan_template_args(i)) i = j;
    }
    return i;
  }

  bool looks_like_declaration() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Keyword &&
        (is_type_keyword(t.text) || is_spec_keyword(t.text) ||
         t.text == "struct" || t.text == "class" || t.text == "union" ||
         t.text == "enum" || t.text == "typedef" || t.text == "using"))
      return true;
    if (t.kind != TokenKind::Identifier) return false;
    std::size_t after = 0;
    if (is_known_type(t.text)) {
      after = 1;
      if (std::size_t j = scan_template_args(1)) after = j;
    } else if (std::size_t q = scan_qualified_name(0)) {
      after = q;  // "std::string s;" vs "std::cin >> s" decided below
    } else if (at_kind(TokenKind::Identifier, 1)) {
      // unknown name followed by another identifier: "Node head;"
      return !at("(", 2) || at(")", 3) ||
             looks_like_param_list(2);  // "f (x)" call vs "T f(int)" decl
    } else if (std::size_t j = scan_template_args(1);
               j && at_kind(TokenKind::Identifier, j)) {
      return true;
    } else {
      return false;
    }
    // known type: next must start a declarator
    while (at("*", after) || at("&", after) || at("const", after)) ++after;
    return at_kind(TokenKind::Identifier, after) || at("(", after);
  }

  bool looks_like_param_list(std::size_t k) const {
    if (!at("(", k)) return false;
    const Token& t = peek(k + 1);
    if (at(")", k + 1)) return true;
    if (at("...", k + 1)) return true;
    if (t.kind == TokenKind::Keyword &&
        (is_type_keyword(t.text) || is_spec_keyword(t.text) ||
         t.text == "struct"))
      return true;
    if (t.kind != TokenKind::Identifier) return false;
    if (is_known_type(t.text)) return true;
    if (scan_qualified_name(k + 1)) return true;  // "f(std::string s)"
    // "f(Node x)": unknown name followed by a declarator start
    return at_kind(TokenKind::Identifier, k + 2) || at("*", k + 2) ||
           at("&", k + 2);
  }

  bool looks_like_cast() const {
    if (!at("(")) return false;
    std::size_t j = scan_type(1);
    if (!j || !at(")", j)) return false;
    const Token& nxt = peek(j + 1);
    switch (nxt.kind) {
      case TokenKind::Identifier:
      case TokenKind::Number:
      case TokenKind::String:
      case TokenKind::Char:
        return true;
      case TokenKind::Punct:
        return nxt.text == "(" || nxt.text == "!" || nxt.text == "~" ||
               nxt.text == "*" || nxt.text == "&" || nxt.text == "-" ||
               nxt.text == "+" || nxt.text == "++" || nxt.text == "--";
      case TokenKind::Keyword:
        return nxt.text == "sizeof" || nxt.text == "new" ||
               nxt.text == "true" || nxt.text == "false" ||
               nxt.text == "this";
      default:
        return false;
    }
  }

  // ---- top level ----

  NodePtr parse_top_level() {
    if (at(";")) return take();
    if (at("namespace") && lang_ == Language::Cpp)
      return parse_namespace_definition();
    if (at("using") && lang_ == Language::Cpp) return parse_using();
    if (at("template") && lang_ == Language::Cpp)
      return parse_template_declaration();
    if (at("extern") && at_kind(TokenKind::String, 1))
      return parse_linkage_specification();
    if (at("typedef")) return parse_type_definition();
    return parse_declaration_or_function();
  }

  NodePtr parse_namespace_definition() {
    auto node = make_node("namespace_definition");
    adopt(*node, take());  // namespace
    if (at_kind(TokenKind::Identifier)) adopt(*node, take_as("namespace_identifier"));
    if (!at("{")) return fail(std::move(node));
    auto body = make_node("declaration_list");
    adopt(*body, take());  // {
    while (!at("}") && !at_eof()) {
      std::size_t before = pos_;
      adopt(*body, parse_top_level());
      if (pos_ == before) {
        auto err = error_node();
        adopt(*err, take());
        adopt(*body, std::move(err));
      }
    }
    if (!eat(*body, "}")) body->error = true;
    adopt(*node, std::move(body));
    return node;
  }

  NodePtr parse_using() {
    auto node = make_node("using_declaration");
    adopt(*node, take());  // using
    if (at("namespace")) adopt(*node, take());
    // alias form "using ll = long long;" registers a type name
    bool alias = false;
    for (std::size_t k = 0; !at(";", k) && !at("}", k) &&
                            peek(k).kind != TokenKind::Eof && k < 64;
         ++k)
      if (at("=", k)) alias = true;
    bool first_ident = true;
    std::size_t guard = 0;
    while (!at(";") && !at("}") && !at_eof() && ++guard < 1000) {
      if (at_kind(TokenKind::Identifier)) {
        if (alias && first_ident) {
          types_.insert(std::string(peek().text));
          adopt(*node, take_as("type_identifier"));
        } else {
          adopt(*node, take_as("namespace_identifier"));
        }
        first_ident = false;
      } else {
        adopt(*node, take());
      }
    }
    if (!eat(*node, ";")) return fail(std::move(node));
    return node;
  }

  NodePtr parse_template_declaration() {
    auto node = make_node("template_declaration");
    adopt(*node, take());  // template
    if (at("<")) {
      auto params = make_node("template_parameter_list");
      adopt(*params, take());
      int depth = 1;
      std::size_t guard = 0;
      while (depth > 0 && !at_eof() && ++guard < 2000) {
        if (at("<")) ++depth;
        if (at(">")) --depth;
        if ((at("typename", 0) || at("class", 0)) &&
            at_kind(TokenKind::Identifier, 1)) {
          adopt(*params, take());
          types_.insert(std::string(peek().text));
          adopt(*params, take_as("type_identifier"));
          continue;
        }
        adopt(*params, take());
      }
      adopt(*node, std::move(params));
    }
    adopt(*node, parse_top_level());
    return node;
  }

  NodePtr parse_linkage_specification() {
    auto node = make_node("linkage_specification");
    adopt(*node, take());  // extern
    adopt(*node, take());  // "C"
    if (at("{")) {
      auto body = make_node("declaration_list");
      adopt(*body, take());
      while (!at("}") && !at_eof()) {
        std::size_t before = pos_;
        adopt(*body, parse_top_level());
        if (pos_ == before) {
          auto err = error_node();
          adopt(*err, take());
          adopt(*body, std::move(err));
        }
      }
      if (!eat(*body, "}")) body->error = true;
      adopt(*node, std::move(body));
    } else {
      adopt(*node, parse_top_level());
    }
    return node;
  }

  NodePtr parse_type_definition() {
    auto node = make_node("type_definition");
    adopt(*node, take());  // typedef
    bool saw_type = false;
    parse_decl_specifiers(*node, saw_type);
    while (true) {
      NodePtr decl = parse_declarator(false);
      std::string name = declarator_name(*decl);
      if (!name.empty()) types_.insert(name);
      retype_declarator_name(*decl);
      adopt(*node, std::move(decl));
      if (at(","))
        adopt(*node, take());
      else
        break;
    }
    if (!eat(*node, ";")) return fail(std::move(node));
    return node;
  }

  // Shared by file scope, block scope and struct bodies. Emits a
  // function_definition when a parameter-list declarator is followed
  // by a body, otherwise a declaration.
  NodePtr parse_declaration_or_function() {
    auto node = make_node("declaration");
    bool saw_type = false;
    parse_decl_specifiers(*node, saw_type);

    if (at(";")) {  // bare "struct S { ... };"
      if (node->children.empty()) return fail(std::move(node));
      adopt(*node, take());
      return node;
    }
    if (node->children.empty() && !at_kind(TokenKind::Identifier) &&
        !at("*") && !at("&") && !at("~") && !at("operator") && !at("("))
      return fail(std::move(node));

    NodePtr decl = parse_declarator(false);
    bool decl_bad = has_parse_errors(*decl);
    bool is_function = declares_function(*decl);

    if (!decl_bad && is_function && (at("{") || at(":"))) {
      node->type = "function_definition";
      adopt(*node, std::move(decl));
      if (at(":")) adopt(*node, parse_field_initializer_list());
      if (at("{"))
        adopt(*node, parse_compound_statement());
      else
        return fail(std::move(node));
      return node;
    }

    // declaration: init-declarator list then ';'
    adopt(*node, wrap_init_declarator(std::move(decl)));
    while (at(",")) {
      adopt(*node, take());
      adopt(*node, wrap_init_declarator(parse_declarator(false)));
    }
    if (!at(";")) {
      if (at_eof() && !decl_bad) {
        return node;  // tolerate a missing ';' only at end of input
      }
      return fail(std::move(node));
    }
    adopt(*node, take());
    return node;
  }

  NodePtr wrap_init_declarator(NodePtr decl) {
    if (at("=")) {
      auto n = make_node("init_declarator");
      adopt(*n, std::move(decl));
      adopt(*n, take());
      adopt(*n, parse_initializer());
      return n;
    }
    if (at("(") && !declares_function(*decl) && !looks_like_param_list(0)) {
      auto n = make_node("init_declarator");
      adopt(*n, std::move(decl));
      adopt(*n, parse_argument_list());
      return n;
    }
    if (at("{")) {
      auto n = make_node("init_declarator");
      adopt(*n, std::move(decl));
      adopt(*n, parse_initializer());
      return n;
    }
    return decl;
  }

  void parse_decl_specifiers(SyntaxNode& node, bool& saw_type) {
    std::size_t guard = 0;
    while (++guard < 200) {
      const Token& t = peek();
      if (t.kind == TokenKind::Keyword) {
        if (is_spec_keyword(t.text)) {
          adopt(node, take());
          continue;
        }
        if (is_type_keyword(t.text)) {
          saw_type = true;
          adopt(node, take());
          continue;
        }
        if (t.text == "struct" || t.text == "class" || t.text == "union") {
          adopt(node, parse_struct_specifier());
          saw_type = true;
          continue;
        }
        if (t.text == "enum") {
          adopt(node, parse_enum_specifier());
          saw_type = true;
          continue;
        }
        break;
      }
      if (t.kind == TokenKind::Identifier && !saw_type) {
        bool qualified = at("::", 1) && at_kind(TokenKind::Identifier, 2);
        if (is_known_type(t.text) || qualified ||
            at_kind(TokenKind::Identifier, 1)) {
          adopt(node, parse_type_name());
          saw_type = true;
          continue;
        }
      }
      break;
    }
  }

  // type name in specifier position: possibly qualified, possibly with
  // template arguments
  NodePtr parse_type_name() {
    NodePtr name = take_as("type_identifier");
    while (at("::") && at_kind(TokenKind::Identifier, 1)) {
      auto q = make_node("qualified_identifier");
      name->type = "namespace_identifier";
      adopt(*q, std::move(name));
      adopt(*q, take());
      adopt(*q, take_as("type_identifier"));
      name = std::move(q);
    }
    if (std::size_t j = scan_template_args(0); j) {
      auto t = make_node("template_type");
      adopt(*t, std::move(name));
      auto args = make_node("template_argument_list");
      std::size_t stop = pos_ + j;
      while (pos_ < stop) {
        if (at_kind(TokenKind::Identifier) && is_known_type(peek().text))
          adopt(*args, take_as("type_identifier"));
        else
          adopt(*args, take());
      }
      adopt(*t, std::move(args));
      name = std::move(t);
    }
    return name;
  }

  NodePtr parse_struct_specifier() {
    const char* node_type = at("union")  ? "union_specifier"
                            : at("class") ? "class_specifier"
                                          : "struct_specifier";
    auto node = make_node(node_type);
    adopt(*node, take());  // struct/class/union
    if (at_kind(TokenKind::Identifier)) {
      types_.insert(std::string(peek().text));
      adopt(*node, take_as("type_identifier"));
    }
    if (at(":")) {  // base clause: "class D : public B"
      auto bases = make_node("base_class_clause");
      adopt(*bases, take());
      while (!at("{") && !at(";") && !at_eof()) adopt(*bases, take());
      adopt(*node, std::move(bases));
    }
    if (at("{")) {
      auto body = make_node("field_declaration_list");
      adopt(*body, take());
      while (!at("}") && !at_eof()) {
        std::size_t before = pos_;
        if ((at("public") || at("private") || at("protected")) && at(":", 1)) {
          auto acc = make_node("access_specifier");
          adopt(*acc, take());
          adopt(*acc, take());
          adopt(*body, std::move(acc));
        } else if (at("typedef")) {
          adopt(*body, parse_type_definition());
        } else {
          adopt(*body, parse_field_declaration());
        }
        if (pos_ == before) {
          auto err = error_node();
          adopt(*err, take());
          adopt(*body, std::move(err));
        }
      }
      if (!eat(*body, "}")) body->error = true;
      adopt(*node, std::move(body));
    }
    return node;
  }

  NodePtr parse_field_declaration() {
    NodePtr n = parse_declaration_or_function();
    if (n->type == "declaration") n->type = "field_declaration";
    return n;
  }

  NodePtr parse_enum_specifier() {
    auto node = make_node("enum_specifier");
    adopt(*node, take());  // enum
    if (at("class") || at("struct")) adopt(*node, take());
    if (at_kind(TokenKind::Identifier)) {
      types_.insert(std::string(peek().text));
      adopt(*node, take_as("type_identifier"));
    }
    if (at("{")) {
      auto list = make_node("enumerator_list");
      adopt(*list, take());
      while (!at("}") && !at_eof()) {
        if (at_kind(TokenKind::Identifier)) {
          auto e = make_node("enumerator");
          adopt(*e, take());
          if (at("=")) {
            adopt(*e, take());
            adopt(*e, parse_assignment_expression());
          }
          adopt(*list, std::move(e));
        }
        if (at(","))
          adopt(*list, take());
        else if (!at("}"))
          adopt(*list, take());  // junk byte, keep coverage
      }
      if (!eat(*list, "}")) list->error = true;
      adopt(*node, std::move(list));
    }
    return node;
  }

  // ---- declarators ----

  NodePtr parse_declarator(bool abstract_ok) {
    DepthGuard g(*this);
    if (!g.ok) return error_node();
    if (at("*")) {
      auto node = make_node("pointer_declarator");
      adopt(*node, take());
      while (at("const") || at("volatile") || at("restrict"))
        adopt(*node, take());
      adopt(*node, parse_declarator(abstract_ok));
      return node;
    }
    if (at("&") || at("&&")) {
      auto node = make_node("reference_declarator");
      adopt(*node, take());
      adopt(*node, parse_declarator(abstract_ok));
      return node;
    }

    NodePtr core;
    if (at_kind(TokenKind::Identifier)) {
      core = take();
      while (at("::") && (at_kind(TokenKind::Identifier, 1) || at("~", 1) ||
                          at("operator", 1))) {
        auto q = make_node("qualified_identifier");
        if (core->leaf) core->type = "namespace_identifier";
        adopt(*q, std::move(core));
        adopt(*q, take());  // ::
        if (at("~")) {
          auto d = make_node("destructor_name");
          adopt(*d, take());
          if (at_kind(TokenKind::Identifier)) adopt(*d, take());
          adopt(*q, std::move(d));
        } else if (at("operator")) {
          adopt(*q, parse_operator_name());
        } else {
          adopt(*q, take());
        }
        core = std::move(q);
      }
    } else if (at("~") && at_kind(TokenKind::Identifier, 1)) {
      core = make_node("destructor_name");
      adopt(*core, take());
      adopt(*core, take());
    } else if (at("operator")) {
      core = parse_operator_name();
    } else if (at("(") && !looks_like_param_list(0)) {
      core = make_node("parenthesized_declarator");
      adopt(*core, take());
      adopt(*core, parse_declarator(abstract_ok));
      if (!eat(*core, ")")) return fail(std::move(core));
    } else if (abstract_ok) {
      core = make_node("abstract_declarator");
      core->begin = core->end = peek().begin;
    } else {
      return error_node();
    }

    // suffixes: parameter lists and array extents
    std::size_t guard = 0;
    while (++guard < 200) {
      if (at("(") &&
          (core->type != "abstract_declarator" || !core->children.empty())) {
        if (!looks_like_param_list(0) && core->type == "identifier") break;
        auto fn = make_node("function_declarator");
        adopt(*fn, std::move(core));
        adopt(*fn, parse_parameter_list());
        while (at("const") || at("volatile")) adopt(*fn, take());
        core = std::move(fn);
        continue;
      }
      if (at("[")) {
        auto arr = make_node("array_declarator");
        adopt(*arr, std::move(core));
        adopt(*arr, take());
        if (!at("]") && !at_eof()) adopt(*arr, parse_assignment_expression());
        if (!eat(*arr, "]")) return fail(std::move(arr));
        core = std::move(arr);
        continue;
      }
      break;
    }
    return core;
  }

  NodePtr parse_operator_name() {
    auto node = make_node("operator_name");
    adopt(*node, take());  // operator
    if (at("(") && at(")", 1)) {
      adopt(*node, take());
      adopt(*node, take());
    } else if (at("[") && at("]", 1)) {
      adopt(*node, take());
      adopt(*node, take());
    } else if (at("new") || at("delete")) {
      adopt(*node, take());
    } else if (at_kind(TokenKind::Punct)) {
      adopt(*node, take());
      if (at(">") && toks_[pos_ - 1].text == ">" &&
          toks_[pos_ - 1].end == peek().begin)
        adopt(*node, take());  // operator>>
    }
    return node;
  }

  NodePtr parse_parameter_list() {
    auto node = make_node("parameter_list");
    adopt(*node, take());  // (
    while (!at(")") && !at_eof()) {
      std::size_t before = pos_;
      if (at("...")) {
        adopt(*node, take());
      } else if (at("void") && at(")", 1)) {
        adopt(*node, take());
      } else {
        auto param = make_node("parameter_declaration");
        bool saw_type = false;
        parse_decl_specifiers(*param, saw_type);
        if (!at(",") && !at(")")) adopt(*param, parse_declarator(true));
        if (at("=")) {  // default argument
          adopt(*param, take());
          adopt(*param, parse_assignment_expression());
        }
        if (param->children.empty()) {
          adopt(*param, take());
          param->error = true;
        }
        adopt(*node, std::move(param));
      }
      if (at(",")) adopt(*node, take());
      if (pos_ == before) {
        auto err = error_node();
        adopt(*err, take());
        adopt(*node, std::move(err));
      }
    }
    if (!eat(*node, ")")) node->error = true;
    return node;
  }

  NodePtr parse_field_initializer_list() {
    auto node = make_node("field_initializer_list");
    adopt(*node, take());  // :
    while (!at("{") && !at(";") && !at_eof()) {
      if (at_kind(TokenKind::Identifier)) {
        auto init = make_node("field_initializer");
        adopt(*init, take_as("field_identifier"));
        if (at("("))
          adopt(*init, parse_argument_list());
        else if (at("{"))
          adopt(*init, parse_initializer());
        adopt(*node, std::move(init));
      } else if (at(",")) {
        adopt(*node, take());
      } else {
        adopt(*node, take());
        node->error = true;
      }
    }
    return node;
  }

  static bool declares_function(const SyntaxNode& decl) {
    if (decl.type == "function_declarator") return true;
    if (decl.type == "pointer_declarator" ||
        decl.type == "reference_declarator") {
      for (const auto& c : decl.children)
        if (!c->leaf) return declares_function(*c);
    }
    return false;
  }

 public:
  static std::string declarator_name(const SyntaxNode& decl) {
    if (decl.leaf)
      return decl.type == "identifier" || decl.type == "type_identifier"
                 ? decl.text
                 : std::string();
    if (decl.type == "destructor_name" || decl.type == "operator_name") {
      std::string s;
      for (const auto& c : decl.children) s += c->text;
      return s;
    }
    if (decl.type == "qualified_identifier") {
      return decl.children.empty()
                 ? std::string()
                 : declarator_name(*decl.children.back());
    }
    // for pointer/reference/array/function/parenthesized declarators the
    // name lives in the first non-keyword child
    for (const auto& c : decl.children) {
      if (c->leaf && c->type != "identifier") continue;
      std::string s = declarator_name(*c);
      if (!s.empty()) return s;
    }
    return std::string();
  }

 private:
  // typedef names should read as type_identifier leaves
  void retype_declarator_name(SyntaxNode& decl) {
    if (decl.leaf) {
      if (decl.type == "identifier") decl.type = "type_identifier";
      return;
    }
    for (auto& c : decl.children) {
      if (c->leaf && c->type == "identifier") {
        c->type = "type_identifier";
        return;
      }
      if (!c->leaf) {
        retype_declarator_name(*c);
        return;
      }
    }
  }

  // ---- statements ----

  NodePtr parse_compound_statement() {
    auto node = make_node("compound_statement");
    if (!eat(*node, "{")) return fail(std::move(node));
    while (!at("}") && !at_eof()) {
      std::size_t before = pos_;
      if (at("case") || at("default"))
        adopt(*node, parse_case_statement());
      else
        adopt(*node, parse_statement());
      if (pos_ == before) {
        auto err = error_node();
        adopt(*err, take());
        adopt(*node, std::move(err));
      }
    }
    if (!eat(*node, "}")) node->error = true;
    return node;
  }

  NodePtr parse_statement() {
    DepthGuard g(*this);
    if (!g.ok) {
      auto err = error_node();
      if (!at_eof()) adopt(*err, take());
      return err;
    }
    if (at("{")) return parse_compound_statement();
    if (at(";")) return take();
    if (at("if")) return parse_if_statement();
    if (at("while")) return parse_while_statement();
    if (at("do")) return parse_do_statement();
    if (at("for")) return parse_for_statement();
    if (at("return")) return parse_return_statement();
    if (at("break") || at("continue")) {
      auto node = make_node(at("break") ? "break_statement"
                                        : "continue_statement");
      adopt(*node, take());
      if (!eat(*node, ";") && !at_eof()) return fail(std::move(node));
      return node;
    }
    if (at("switch")) return parse_switch_statement();
    if (at("goto")) {
      auto node = make_node("goto_statement");
      adopt(*node, take());
      if (at_kind(TokenKind::Identifier))
        adopt(*node, take_as("statement_identifier"));
      if (!eat(*node, ";") && !at_eof()) return fail(std::move(node));
      return node;
    }
    if (at("typedef")) return parse_type_definition();
    if (at("using") && lang_ == Language::Cpp) return parse_using();
    if (at_kind(TokenKind::Identifier) && at(":", 1) &&
        !is_known_type(peek().text)) {
      auto node = make_node("labeled_statement");
      adopt(*node, take_as("statement_identifier"));
      adopt(*node, take());
      adopt(*node, parse_statement());
      return node;
    }
    if (looks_like_declaration()) return parse_declaration_or_function();
    return parse_expression_statement();
  }

  NodePtr parse_expression_statement() {
    auto node = make_node("expression_statement");
    adopt(*node, parse_comma_expression());
    if (has_parse_errors(*node)) return fail(std::move(node));
    if (!at(";")) {
      if (at_eof()) return node;  // missing ';' tolerated at end of input
      return fail(std::move(node));
    }
    adopt(*node, take());
    return node;
  }

  NodePtr parse_if_statement() {
    auto node = make_node("if_statement");
    adopt(*node, take());  // if
    if (!eat(*node, "(")) return fail(std::move(node));
    adopt(*node, parse_comma_expression());
    if (!eat(*node, ")")) return fail(std::move(node));
    adopt(*node, parse_statement());
    if (at("else")) {
      adopt(*node, take());
      adopt(*node, parse_statement());
    }
    return node;
  }

  NodePtr parse_while_statement() {
    auto node = make_node("while_statement");
    adopt(*node, take());  // while
    if (!eat(*node, "(")) return fail(std::move(node));
    adopt(*node, parse_comma_expression());
    if (!eat(*node, ")")) return fail(std::move(node));
    adopt(*node, parse_statement());
    return node;
  }

  NodePtr parse_do_statement() {
    auto node = make_node("do_statement");
    adopt(*node, take());  // do
    adopt(*node, parse_statement());
    if (!eat(*node, "while")) return fail(std::move(node));
    if (!eat(*node, "(")) return fail(std::move(node));
    adopt(*node, parse_comma_expression());
    if (!eat(*node, ")")) return fail(std::move(node));
    if (!eat(*node, ";") && !at_eof()) return fail(std::move(node));
    return node;
  }

  NodePtr parse_for_statement() {
    auto node = make_node("for_statement");
    adopt(*node, take());  // for
    if (!eat(*node, "(")) return fail(std::move(node));
    // init clause: declaration carries its own ';'
    if (at(";")) {
      adopt(*node, take());
    } else if (looks_like_declaration()) {
      adopt(*node, parse_declaration_or_function());
    } else {
      adopt(*node, parse_comma_expression());
      if (!eat(*node, ";")) return fail(std::move(node));
    }
    if (!at(";")) adopt(*node, parse_comma_expression());
    if (!eat(*node, ";")) return fail(std::move(node));
    if (!at(")")) adopt(*node, parse_comma_expression());
    if (!eat(*node, ")")) return fail(std::move(node));
    adopt(*node, parse_statement());
    return node;
  }

  NodePtr parse_return_statement() {
    auto node = make_node("return_statement");
    adopt(*node, take());  // return
    if (!at(";") && !at("}") && !at_eof())
      adopt(*node, parse_comma_expression());
    if (!at(";")) {
      if (at_eof() && !has_parse_errors(*node)) return node;
      return fail(std::move(node));
    }
    adopt(*node, take());
    return node;
  }

  NodePtr parse_switch_statement() {
    auto node = make_node("switch_statement");
    adopt(*node, take());  // switch
    if (!eat(*node, "(")) return fail(std::move(node));
    adopt(*node, parse_comma_expression());
    if (!eat(*node, ")")) return fail(std::move(node));
    adopt(*node, parse_statement());
    return node;
  }

  NodePtr parse_case_statement() {
    auto node = make_node("case_statement");
    if (at("case")) {
      adopt(*node, take());
      adopt(*node, parse_comma_expression());
    } else {
      adopt(*node, take());  // default
    }
    if (!eat(*node, ":")) return fail(std::move(node));
    while (!at("case") && !at("default") && !at("}") && !at_eof()) {
      std::size_t before = pos_;
      adopt(*node, parse_statement());
      if (pos_ == before) break;
    }
    return node;
  }

  // ---- expressions ----

  NodePtr parse_comma_expression() {
    NodePtr e = parse_assignment_expression();
    while (at(",")) {
      auto node = make_node("comma_expression");
      adopt(*node, std::move(e));
      adopt(*node, take());
      adopt(*node, parse_assignment_expression());
      e = std::move(node);
    }
    return e;
  }

  NodePtr parse_assignment_expression() {
    DepthGuard g(*this);
    if (!g.ok) {
      auto err = error_node();
      if (!at_eof()) adopt(*err, take());
      return err;
    }
    NodePtr lhs = parse_conditional_expression();
    static const std::string_view ops[] = {"=",  "+=", "-=", "*=",  "/=",
                                           "%=", "&=", "|=", "^=",  "<<=",
                                           ">>="};
    for (std::string_view op : ops) {
      if (at(op)) {
        auto node = make_node("assignment_expression");
        adopt(*node, std::move(lhs));
        adopt(*node, take());
        adopt(*node, parse_assignment_expression());
        return node;
      }
    }
    return lhs;
  }

  NodePtr parse_conditional_expression() {
    NodePtr c = parse_binary_expression(1);
    if (!at("?")) return c;
    auto node = make_node("conditional_expression");
    adopt(*node, std::move(c));
    adopt(*node, take());  // ?
    adopt(*node, parse_assignment_expression());
    if (!eat(*node, ":")) return fail(std::move(node));
    adopt(*node, parse_assignment_expression());
    return node;
  }

  // ">" directly followed by ">" re-joins into a shift operator; the
  // lexer splits them so template argument lists can close.
  bool at_right_shift() const {
    return at(">") && at(">", 1) && peek(0).end == peek(1).begin &&
           !at("=", 2);
  }

  int binary_precedence() const {
    if (at("||")) return 1;
    if (at("&&")) return 2;
    if (at("|")) return 3;
    if (at("^")) return 4;
    if (at("&")) return 5;
    if (at("==") || at("!=")) return 6;
    if (at_right_shift() || at("<<")) return 8;
    if (at("<") || at(">") || at("<=") || at(">=")) return 7;
    if (at("+") || at("-")) return 9;
    if (at("*") || at("/") || at("%")) return 10;
    return 0;
  }

  NodePtr parse_binary_expression(int min_prec) {
    DepthGuard g(*this);
    if (!g.ok) {
      auto err = error_node();
      if (!at_eof()) adopt(*err, take());
      return err;
    }
    NodePtr lhs = parse_unary_expression();
    while (true) {
      int prec = binary_precedence();
      if (prec < min_prec || prec == 0) break;
      auto node = make_node("binary_expression");
      bool rshift = at_right_shift();
      adopt(*node, std::move(lhs));
      adopt(*node, take());
      if (rshift) adopt(*node, take());  // second '>' of '>>'
      adopt(*node, parse_binary_expression(prec + 1));
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_unary_expression() {
    DepthGuard g(*this);
    if (!g.ok) {
      auto err = error_node();
      if (!at_eof()) adopt(*err, take());
      return err;
    }
    if (at("+") || at("-") || at("!") || at("~")) {
      auto node = make_node("unary_expression");
      adopt(*node, take());
      adopt(*node, parse_unary_expression());
      return node;
    }
    if (at("++") || at("--")) {
      auto node = make_node("update_expression");
      adopt(*node, take());
      adopt(*node, parse_unary_expression());
      return node;
    }
    if (at("*") || at("&")) {
      auto node = make_node("pointer_expression");
      adopt(*node, take());
      adopt(*node, parse_unary_expression());
      return node;
    }
    if (at("sizeof")) {
      auto node = make_node("sizeof_expression");
      adopt(*node, take());
      if (at("(")) {
        if (std::size_t j = scan_type(1); j && at(")", j)) {
          adopt(*node, take());  // (
          std::size_t stop = pos_ + j - 1;
          while (pos_ < stop) {
            if (at_kind(TokenKind::Identifier))
              adopt(*node, take_as("type_identifier"));
            else
              adopt(*node, take());
          }
          adopt(*node, take());  // )
          return node;
        }
      }
      adopt(*node, parse_unary_expression());
      return node;
    }
    if (at("new") && lang_ == Language::Cpp) return parse_new_expression();
    if (at("delete") && lang_ == Language::Cpp) {
      auto node = make_node("delete_expression");
      adopt(*node, take());
      if (at("[") && at("]", 1)) {
        adopt(*node, take());
        adopt(*node, take());
      }
      adopt(*node, parse_unary_expression());
      return node;
    }
    if (looks_like_cast()) {
      auto node = make_node("cast_expression");
      adopt(*node, take());  // (
      while (!at(")") && !at_eof()) {
        if (at_kind(TokenKind::Identifier))
          adopt(*node, take_as("type_identifier"));
        else
          adopt(*node, take());
      }
      adopt(*node, take());  // )
      adopt(*node, parse_unary_expression());
      return node;
    }
    return parse_postfix_expression();
  }

  NodePtr parse_new_expression() {
    auto node = make_node("new_expression");
    adopt(*node, take());  // new
    std::size_t j = scan_type(0);
    std::size_t stop = j ? pos_ + j : pos_;
    while (pos_ < stop) {
      if (at_kind(TokenKind::Identifier))
        adopt(*node, take_as("type_identifier"));
      else
        adopt(*node, take());
    }
    while (at("[")) {
      adopt(*node, take());
      if (!at("]")) adopt(*node, parse_assignment_expression());
      if (!eat(*node, "]")) return fail(std::move(node));
    }
    if (at("(")) adopt(*node, parse_argument_list());
    return node;
  }

  NodePtr parse_postfix_expression() {
    NodePtr e = parse_primary_expression();
    std::size_t guard = 0;
    while (++guard < 10000) {
      if (at("(")) {
        auto node = make_node("call_expression");
        adopt(*node, std::move(e));
        adopt(*node, parse_argument_list());
        e = std::move(node);
        continue;
      }
      if (at("[")) {
        auto node = make_node("subscript_expression");
        adopt(*node, std::move(e));
        adopt(*node, take());
        adopt(*node, parse_comma_expression());
        if (!eat(*node, "]")) return fail(std::move(node));
        e = std::move(node);
        continue;
      }
      if (at(".") || at("->")) {
        auto node = make_node("field_expression");
        adopt(*node, std::move(e));
        adopt(*node, take());
        if (at_kind(TokenKind::Identifier))
          adopt(*node, take_as("field_identifier"));
        else if (!at_eof())
          return fail(std::move(node));
        e = std::move(node);
        continue;
      }
      if (at("++") || at("--")) {
        auto node = make_node("update_expression");
        adopt(*node, std::move(e));
        adopt(*node, take());
        e = std::move(node);
        continue;
      }
      break;
    }
    return e;
  }

  NodePtr parse_argument_list() {
    auto node = make_node("argument_list");
    adopt(*node, take());  // (
    while (!at(")") && !at_eof()) {
      std::size_t before = pos_;
      adopt(*node, parse_assignment_expression());
      if (at(",")) adopt(*node, take());
      if (pos_ == before) {
        auto err = error_node();
        adopt(*err, take());
        adopt(*node, std::move(err));
      }
    }
    if (!eat(*node, ")")) node->error = true;
    return node;
  }

  NodePtr parse_primary_expression() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        return take();
      case TokenKind::Char:
        return take();
      case TokenKind::String: {
        NodePtr s = take();
        if (!at_kind(TokenKind::String)) return s;
        auto node = make_node("concatenated_string");
        adopt(*node, std::move(s));
        while (at_kind(TokenKind::String)) adopt(*node, take());
        return node;
      }
      case TokenKind::Identifier: {
        NodePtr name = take();
        while (at("::") && at_kind(TokenKind::Identifier, 1)) {
          auto q = make_node("qualified_identifier");
          name->type = "namespace_identifier";
          adopt(*q, std::move(name));
          adopt(*q, take());
          adopt(*q, take());
          name = std::move(q);
        }
        // explicit template arguments, only when a call follows:
        // "max<int>(a, b)"
        if (at("<")) {
          if (std::size_t j = scan_template_args(0); j && at("(", j)) {
            auto node = make_node("template_function");
            adopt(*node, std::move(name));
            auto args = make_node("template_argument_list");
            std::size_t stop = pos_ + j;
            while (pos_ < stop) {
              if (at_kind(TokenKind::Identifier) && is_known_type(peek().text))
                adopt(*args, take_as("type_identifier"));
              else
                adopt(*args, take());
            }
            adopt(*node, std::move(args));
            name = std::move(node);
          }
        }
        return name;
      }
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false" || t.text == "this")
          return take();
        break;
      case TokenKind::Punct:
        if (t.text == "(") {
          auto node = make_node("parenthesized_expression");
          adopt(*node, take());
          adopt(*node, parse_comma_expression());
          if (!eat(*node, ")")) return fail(std::move(node));
          return node;
        }
        break;
      default:
        break;
    }
    // no expression here: emit an error node; consume the offender
    // unless it is a closing/separator token the caller needs
    auto err = error_node();
    if (!at_eof() && !at(";") && !at(")") && !at("}") && !at(",") && !at("]"))
      adopt(*err, take());
    return err;
  }

  // ---- initializers ----

  NodePtr parse_initializer() {
    if (!at("{")) return parse_assignment_expression();
    auto node = make_node("initializer_list");
    adopt(*node, take());
    while (!at("}") && !at_eof()) {
      std::size_t before = pos_;
      adopt(*node, parse_initializer());
      if (at(",")) adopt(*node, take());
      if (pos_ == before) {
        auto err = error_node();
        adopt(*err, take());
        adopt(*node, std::move(err));
      }
    }
    if (!eat(*node, "}")) node->error = true;
    return node;
  }
};

}  // namespace detail

class BuiltinParser : public ParserBackend {
 public:
  SyntaxTree parse(std::string source, Language lang) override {
    SyntaxTree tree;
    tree.source = std::move(source);
    tree.lang = lang;
    std::vector<Token> toks = lex(tree.source, lang);
    detail::ParserImpl impl(toks, lang);
    tree.root = impl.run();
    return tree;
  }
  const char* name() const override { return "builtin"; }
};

inline SyntaxTree parse_source(std::string source, Language lang) {
  BuiltinParser p;
  return p.parse(std::move(source), lang);
}

// A function definition found anywhere in a tree. "clean" means no
// parse error in the whole definition subtree.
struct FunctionInfo {
  const SyntaxNode* node = nullptr;
  const SyntaxNode* body = nullptr;  // compound_statement
  std::string name;
  bool clean = false;
};

inline void collect_functions(const SyntaxNode& n,
                              std::vector<FunctionInfo>& out) {
  if (n.type == "function_definition") {
    FunctionInfo info;
    info.node = &n;
    for (const auto& c : n.children) {
      if (c->type == "compound_statement") info.body = c.get();
      bool is_declarator = c->type == "function_declarator" ||
                           c->type == "pointer_declarator" ||
                           c->type == "reference_declarator" ||
                           c->type == "parenthesized_declarator";
      if (is_declarator && info.name.empty())
        info.name = detail::ParserImpl::declarator_name(*c);
    }
    info.clean = !has_parse_errors(n) && info.body != nullptr;
    out.push_back(std::move(info));
  }
  for (const auto& c : n.children) collect_functions(*c, out);
}

inline std::vector<FunctionInfo> functions_of(const SyntaxTree& tree) {
  std::vector<FunctionInfo> out;
  collect_functions(*tree.root, out);
  return out;
}

}  // namespace capt
