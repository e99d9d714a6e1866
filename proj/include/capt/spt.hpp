#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "capt/errors.hpp"
#include "capt/parser.hpp"
#include "capt/syntax.hpp"

namespace capt {

// Simplified parse tree. Leaves are exactly the program tokens of the
// region. Keyword leaves are reserved words and fixed punctuation;
// token leaves carry program data (names, literals). Internal node
// labels summarize their children: keyword children appear verbatim,
// compound-statement children as "{#}", everything else as "#".
enum class SptKind : std::uint8_t { Internal, KeywordLeaf, TokenLeaf };

inline const char* spt_kind_name(SptKind k) {
  switch (k) {
    case SptKind::Internal: return "INTERNAL";
    case SptKind::KeywordLeaf: return "KEYWORD_LEAF";
    default: return "TOKEN_LEAF";
  }
}

struct SptNode {
  SptKind kind = SptKind::Internal;
  std::string label;
  std::string syntax_type;        // originating grammar rule / leaf type
  int parent = -1;                // index into SptTree::nodes
  std::vector<int> children;
  std::uint32_t token_index = 0;  // token leaves: position in token stream
};

// Nodes are stored in preorder, so the 1-based ordinal of a node is
// its index plus one.
struct SptTree {
  std::vector<SptNode> nodes;
  Language lang = Language::C;

  bool empty() const { return nodes.empty(); }
  std::size_t ordinal_of(std::size_t index) const { return index + 1; }
};

namespace detail {

struct SptBuild {
  SptKind kind = SptKind::Internal;
  std::string label;
  std::string syntax_type;
  std::uint32_t token_index = 0;
  bool keyword_only = true;  // no token leaf in this subtree
  std::vector<std::unique_ptr<SptBuild>> children;
};

inline bool is_list_node_type(const std::string& t) {
  return t == "parameter_list" || t == "argument_list" ||
         t == "template_argument_list" || t == "template_parameter_list" ||
         t == "initializer_list" || t == "enumerator_list" ||
         t == "field_declaration_list" || t == "declaration_list";
}

inline std::string spt_label_of(const SptBuild& n) {
  if (n.syntax_type == "compound_statement") {
    // arity encoding: one slot per statement child
    std::string label = "{";
    bool first = true;
    for (const auto& c : n.children) {
      if (c->kind == SptKind::KeywordLeaf) continue;  // braces, stray ';'
      if (!first) label += ';';
      label += '#';
      first = false;
    }
    label += '}';
    return label;
  }
  std::string label;
  for (const auto& c : n.children) {
    if (c->kind == SptKind::KeywordLeaf) {
      label += c->label;
    } else if (c->syntax_type == "compound_statement") {
      label += "{#}";  // bodies look alike regardless of length
    } else {
      label += '#';
    }
  }
  return label;
}

inline std::unique_ptr<SptBuild> build_spt_node(const SyntaxNode& n,
                                                Language lang) {
  auto b = std::make_unique<SptBuild>();
  b->syntax_type = n.type;
  if (n.leaf) {
    b->label = n.text;
    if (is_keyword_leaf(n, lang)) {
      b->kind = SptKind::KeywordLeaf;
    } else {
      b->kind = SptKind::TokenLeaf;
      b->token_index = n.token_index;
      b->keyword_only = false;
    }
    return b;
  }
  for (const auto& child : n.children) {
    auto c = build_spt_node(*child, lang);
    if (!c) continue;
    b->keyword_only = b->keyword_only && c->keyword_only;
    // An argument or parameter list carrying nothing but fixed tokens
    // dissolves: its punctuation joins this node's children, so "f()"
    // becomes "#()" rather than "##". Keeps one '#' per child that
    // holds program tokens.
    if (c->kind == SptKind::Internal && c->keyword_only &&
        is_list_node_type(c->syntax_type)) {
      for (auto& grandchild : c->children)
        b->children.push_back(std::move(grandchild));
      continue;
    }
    b->children.push_back(std::move(c));
  }
  if (b->children.empty()) return nullptr;  // no tokens beneath
  if (b->children.size() == 1) return std::move(b->children.front());
  b->label = spt_label_of(*b);
  return b;
}

inline void flatten_spt(const SptBuild& b, int parent, SptTree& tree) {
  int index = static_cast<int>(tree.nodes.size());
  SptNode node;
  node.kind = b.kind;
  node.label = b.label;
  node.syntax_type = b.syntax_type;
  node.parent = parent;
  node.token_index = b.token_index;
  tree.nodes.push_back(std::move(node));
  if (parent >= 0) tree.nodes[parent].children.push_back(index);
  for (const auto& c : b.children) flatten_spt(*c, index, tree);
}

}  // namespace detail

// Builds the SPT of a clean syntax subtree. Single-child chains are
// collapsed and tokenless subtrees dropped, so every remaining node
// covers at least one program token.
inline SptTree build_spt(const SyntaxNode& root, Language lang) {
  if (has_parse_errors(root))
    throw DataError("cannot build a parse-tree summary from code with syntax errors");
  SptTree tree;
  tree.lang = lang;
  auto b = detail::build_spt_node(root, lang);
  if (b) detail::flatten_spt(*b, -1, tree);
  return tree;
}

inline SptTree build_spt(const SyntaxTree& tree) {
  return build_spt(*tree.root, tree.lang);
}

inline std::vector<int> token_leaves(const SptTree& tree) {
  std::vector<int> out;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].kind == SptKind::TokenLeaf)
      out.push_back(static_cast<int>(i));
  return out;
}

inline std::vector<int> leaves_in_order(const SptTree& tree) {
  std::vector<int> out;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].kind != SptKind::Internal)
      out.push_back(static_cast<int>(i));
  return out;
}

inline void dump_spt_node(const SptTree& tree, int index, int depth,
                          std::string& out) {
  const SptNode& n = tree.nodes[index];
  out += std::to_string(index + 1);
  out += ' ';
  for (int i = 0; i < depth; ++i) out += "  ";
  out += spt_kind_name(n.kind);
  out += ' ';
  out += n.label;
  out += '\n';
  for (int c : n.children) dump_spt_node(tree, c, depth + 1, out);
}

// One line per node, preorder: "<ordinal> <kind> <label>", children
// indented under their parent.
inline std::string dump_spt(const SptTree& tree) {
  std::string out;
  if (!tree.nodes.empty()) dump_spt_node(tree, 0, 0, out);
  return out;
}

}  // namespace capt
