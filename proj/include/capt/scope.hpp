#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "capt/syntax.hpp"

namespace capt {

// Heuristic identifier classification, per function definition. No
// real symbol resolution: a name is local when a parameter or an
// in-scope declaration binds it, in source order, with block scoping
// (a binding dies at the end of its block). Unbound names are globals;
// the callee position of a call makes an unbound name a function.
enum class IdClass : std::uint8_t { LocalVar, GlobalVar, GlobalFunc };

inline const char* id_class_name(IdClass c) {
  switch (c) {
    case IdClass::LocalVar: return "LOCAL_VAR";
    case IdClass::GlobalVar: return "GLOBAL_VAR";
    default: return "GLOBAL_FUNC";
  }
}

// token index -> classification, covering every plain identifier leaf
// of the analyzed subtree. Field, type, namespace and label names have
// their own leaf types and stay out of the map.
using ScopeMap = std::unordered_map<std::uint32_t, IdClass>;

namespace detail {

class ScopeAnalyzer {
 public:
  ScopeMap analyze(const SyntaxNode& fn) {
    map_.clear();
    scopes_.clear();
    scopes_.emplace_back();  // function scope: parameters land here
    if (fn.type == "function_definition")
      walk_function_definition(fn);
    else
      walk(fn);
    return std::move(map_);
  }

 private:
  ScopeMap map_;
  std::vector<std::unordered_set<std::string>> scopes_;

  static bool is_declarator_type(const std::string& t) {
    return t == "pointer_declarator" || t == "reference_declarator" ||
           t == "array_declarator" || t == "function_declarator" ||
           t == "parenthesized_declarator" || t == "init_declarator";
  }

  bool is_local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (it->count(name)) return true;
    return false;
  }

  void classify_use(const SyntaxNode& n) {
    map_[n.token_index] =
        is_local(n.text) ? IdClass::LocalVar : IdClass::GlobalVar;
  }

  void bind_name(const SyntaxNode& n) {
    scopes_.back().insert(n.text);
    map_[n.token_index] = IdClass::LocalVar;
  }

  // Binds the name inside a declarator; expressions hanging off it
  // (array sizes, initializers, constructor arguments) are uses.
  void bind_declarator(const SyntaxNode& n) {
    if (n.leaf) {
      if (n.type == "identifier") bind_name(n);
      return;
    }
    if (n.type == "init_declarator" || n.type == "array_declarator") {
      bool bound = false;
      for (const auto& c : n.children) {
        if (!bound && (c->type == "identifier" || is_declarator_type(c->type))) {
          bind_declarator(*c);
          bound = true;
        } else {
          walk(*c);
        }
      }
      return;
    }
    if (n.type == "function_declarator") {
      // a local function-pointer or prototype: bind the name, then
      // let the parameter list bind its own names
      bool bound = false;
      for (const auto& c : n.children) {
        if (!bound && (c->type == "identifier" || is_declarator_type(c->type))) {
          bind_declarator(*c);
          bound = true;
        } else {
          walk(*c);
        }
      }
      return;
    }
    for (const auto& c : n.children) bind_declarator(*c);
  }

  void walk_declaration(const SyntaxNode& n) {
    for (const auto& c : n.children) {
      if (c->leaf) {
        if (c->type == "identifier") bind_name(*c);
        continue;  // keywords, type names, ',', ';'
      }
      if (is_declarator_type(c->type))
        bind_declarator(*c);
      else
        walk(*c);  // struct/enum specifiers and other spec parts
    }
  }

  void walk_parameter_declaration(const SyntaxNode& n) {
    bool past_default = false;
    for (const auto& c : n.children) {
      if (c->leaf) {
        if (c->text == "=") past_default = true;
        if (c->type == "identifier" && !past_default) bind_name(*c);
        if (c->type == "identifier" && past_default) classify_use(*c);
        continue;
      }
      if (is_declarator_type(c->type) && !past_default)
        bind_declarator(*c);
      else
        walk(*c);
    }
  }

  void walk_function_definition(const SyntaxNode& n) {
    for (const auto& c : n.children) {
      if (c->leaf) continue;  // return type keywords
      if (c->type == "function_declarator" ||
          c->type == "pointer_declarator" ||
          c->type == "reference_declarator" ||
          c->type == "parenthesized_declarator") {
        mark_function_name(*c);
      } else {
        walk(*c);  // initializer list, body
      }
    }
  }

  // the defined name itself reads as a function
  void mark_function_name(const SyntaxNode& n) {
    if (n.leaf) {
      if (n.type == "identifier") map_[n.token_index] = IdClass::GlobalFunc;
      return;
    }
    if (n.type == "parameter_list") {
      walk(n);
      return;
    }
    if (n.type == "qualified_identifier") {
      if (!n.children.empty()) mark_function_name(*n.children.back());
      return;
    }
    for (const auto& c : n.children) mark_function_name(*c);
  }

  void walk_call(const SyntaxNode& n) {
    const SyntaxNode* callee =
        n.children.empty() ? nullptr : n.children.front().get();
    while (callee && !callee->leaf) {
      if (callee->type == "qualified_identifier") {
        callee = callee->children.empty() ? nullptr
                                          : callee->children.back().get();
        continue;
      }
      if (callee->type == "template_function") {
        walk(*callee->children[1]);  // template arguments
        callee = callee->children.front().get();
        continue;
      }
      break;
    }
    bool handled = false;
    if (callee && callee->leaf && callee->type == "identifier") {
      map_[callee->token_index] = is_local(callee->text)
                                      ? IdClass::LocalVar
                                      : IdClass::GlobalFunc;
      handled = true;
    }
    bool first = true;
    for (const auto& c : n.children) {
      if (first && handled) {
        first = false;
        continue;  // callee classified above
      }
      if (first && !handled) {
        first = false;
        walk(*c);
        continue;
      }
      walk(*c);
    }
  }

  void walk(const SyntaxNode& n) {
    if (n.leaf) {
      if (n.type == "identifier") classify_use(n);
      return;
    }
    if (n.type == "compound_statement" || n.type == "for_statement") {
      scopes_.emplace_back();
      for (const auto& c : n.children) walk(*c);
      scopes_.pop_back();
      return;
    }
    if (n.type == "declaration" || n.type == "field_declaration") {
      walk_declaration(n);
      return;
    }
    if (n.type == "parameter_declaration") {
      walk_parameter_declaration(n);
      return;
    }
    if (n.type == "enumerator") {
      for (const auto& c : n.children) {
        if (c->leaf && c->type == "identifier")
          bind_name(*c);
        else
          walk(*c);
      }
      return;
    }
    if (n.type == "call_expression") {
      walk_call(n);
      return;
    }
    if (n.type == "function_definition") {
      walk_function_definition(n);
      return;
    }
    for (const auto& c : n.children) walk(*c);
  }
};

}  // namespace detail

inline ScopeMap classify_identifiers(const SyntaxNode& subtree) {
  detail::ScopeAnalyzer a;
  return a.analyze(subtree);
}

inline constexpr const char* kLocalVarPlaceholder = "#VAR";

}  // namespace capt
