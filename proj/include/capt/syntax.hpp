#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "capt/lexer.hpp"

namespace capt {

// Concrete syntax tree node. Leaves correspond 1:1 to lexed tokens, in
// source order; internal nodes carry a grammar rule name. Anonymous
// leaves (keywords, punctuation) have type == text.
struct SyntaxNode {
  std::string type;
  bool leaf = false;
  bool error = false;  // ERROR node or bad token
  TokenKind token_kind = TokenKind::Eof;
  std::string text;               // leaf only
  std::uint32_t begin = 0, end = 0;  // source byte span
  std::uint32_t token_index = 0;  // leaf position in the token stream
  std::vector<std::unique_ptr<SyntaxNode>> children;
};

using NodePtr = std::unique_ptr<SyntaxNode>;

struct SyntaxTree {
  std::string source;
  Language lang = Language::C;
  NodePtr root;
};

inline NodePtr make_leaf(const Token& tok, std::uint32_t token_index = 0) {
  auto n = std::make_unique<SyntaxNode>();
  n->leaf = true;
  n->token_kind = tok.kind;
  n->text.assign(tok.text);
  n->begin = tok.begin;
  n->end = tok.end;
  n->token_index = token_index;
  switch (tok.kind) {
    case TokenKind::Identifier: n->type = "identifier"; break;
    case TokenKind::Number: n->type = "number_literal"; break;
    case TokenKind::String: n->type = "string_literal"; break;
    case TokenKind::Char: n->type = "char_literal"; break;
    case TokenKind::Bad:
      n->type = "error_token";
      n->error = true;
      break;
    default: n->type = n->text; break;  // keywords, punctuation
  }
  return n;
}

inline NodePtr make_node(std::string type) {
  auto n = std::make_unique<SyntaxNode>();
  n->type = std::move(type);
  return n;
}

inline void adopt(SyntaxNode& parent, NodePtr child) {
  if (!child) return;
  if (parent.children.empty()) {
    parent.begin = child->begin;
    parent.end = child->end;
  } else {
    if (child->begin < parent.begin) parent.begin = child->begin;
    if (child->end > parent.end) parent.end = child->end;
  }
  parent.children.push_back(std::move(child));
}

// A leaf whose text is itself a reserved word or a fixed grammar token
// (type == text) is a keyword leaf; all others carry program data.
inline bool is_keyword_leaf(const SyntaxNode& n, Language lang) {
  if (!n.leaf) return false;
  if (n.type == n.text && !n.text.empty()) return true;
  return is_reserved_word(n.text, lang);
}

inline bool has_parse_errors(const SyntaxNode& n) {
  if (n.error) return true;
  for (const auto& c : n.children)
    if (has_parse_errors(*c)) return true;
  return false;
}

inline void collect_leaves(const SyntaxNode& n,
                           std::vector<const SyntaxNode*>& out) {
  if (n.leaf) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_leaves(*c, out);
}

inline std::vector<const SyntaxNode*> leaves_of(const SyntaxNode& root) {
  std::vector<const SyntaxNode*> out;
  collect_leaves(root, out);
  return out;
}

// True when the tree's leaves reproduce exactly the non-trivia token
// stream of the source, each leaf matching its span. This is the
// lossless-parse check: tokens survive, only trivia lives in the gaps.
inline bool covers_all_tokens(const SyntaxTree& tree) {
  std::vector<Token> toks = lex(tree.source, tree.lang);
  toks.pop_back();  // Eof
  std::vector<const SyntaxNode*> lv = leaves_of(*tree.root);
  if (lv.size() != toks.size()) return false;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (lv[i]->begin != toks[i].begin || lv[i]->end != toks[i].end)
      return false;
    if (lv[i]->text != toks[i].text) return false;
  }
  return true;
}

}  // namespace capt
