#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "capt/errors.hpp"

namespace capt {

enum class Language { C, Cpp };

inline Language language_from_tag(std::string_view tag) {
  if (tag == "c") return Language::C;
  if (tag == "cpp") return Language::Cpp;
  throw UsageError("unsupported language tag: \"" + std::string(tag) +
                   "\" (expected \"c\" or \"cpp\")");
}

inline const char* language_tag(Language lang) {
  return lang == Language::C ? "c" : "cpp";
}

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,  // reserved word of the language
  Number,
  String,
  Char,
  Punct,
  Bad,  // unterminated literal, stray byte
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string_view text;  // view into the lexed source
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

inline bool is_reserved_word(std::string_view s, Language lang) {
  static const std::unordered_set<std::string_view> c_words = {
      "auto",     "break",   "case",     "char",   "const",    "continue",
      "default",  "do",      "double",   "else",   "enum",     "extern",
      "float",    "for",     "goto",     "if",     "inline",   "int",
      "long",     "register", "restrict", "return", "short",   "signed",
      "sizeof",   "static",  "struct",   "switch", "typedef",  "union",
      "unsigned", "void",    "volatile", "while",  "_Bool",
  };
  static const std::unordered_set<std::string_view> cpp_words = {
      "bool",        "catch",   "class",            "const_cast",
      "delete",      "dynamic_cast", "explicit",    "false",
      "friend",      "mutable", "namespace",        "new",
      "operator",    "private", "protected",        "public",
      "reinterpret_cast", "static_cast", "template", "this",
      "throw",       "true",    "try",              "typename",
      "using",       "virtual", "wchar_t",
  };
  if (c_words.count(s)) return true;
  return lang == Language::Cpp && cpp_words.count(s) > 0;
}

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

// Multi-character operators, longest first within each leading char.
// ">>" is intentionally absent: it is lexed as two ">" tokens so that
// nested template argument lists close without special casing; the
// expression parser re-joins adjacent ">" into a shift operator.
inline std::size_t punct_length(std::string_view rest) {
  auto starts = [&](std::string_view p) { return rest.substr(0, p.size()) == p; };
  if (starts("...")) return 3;
  if (starts("<<=") || starts(">>=") || starts("->*")) return 3;
  if (starts("->") || starts("++") || starts("--") || starts("<<") ||
      starts("<=") || starts(">=") || starts("==") || starts("!=") ||
      starts("&&") || starts("||") || starts("+=") || starts("-=") ||
      starts("*=") || starts("/=") || starts("%=") || starts("&=") ||
      starts("^=") || starts("|=") || starts("::") || starts(".*"))
    return 2;
  static const std::string_view singles = "{}()[];,.<>+-*/%&|^!~=?:#";
  if (!rest.empty() && singles.find(rest[0]) != std::string_view::npos) return 1;
  return 0;
}

}  // namespace detail

// Lexes source into tokens. Whitespace, comments and preprocessor lines
// are trivia: they produce no tokens and survive only in the gaps
// between token spans. The token list always ends with an Eof token.
inline std::vector<Token> lex(std::string_view src, Language lang) {
  using namespace detail;
  std::vector<Token> out;
  const std::size_t n = src.size();
  std::size_t i = 0;
  bool at_line_start = true;

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, src.substr(begin, end - begin),
                        static_cast<std::uint32_t>(begin),
                        static_cast<std::uint32_t>(end)});
  };

  while (i < n) {
    char c = src[i];

    if (c == '\n') {
      at_line_start = true;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v' ||
        c == '\x1a') {  // 0x1A: DOS end-of-file marker, seen in old corpora
      ++i;
      continue;
    }

    // Preprocessor directive: '#' first on its line, through any
    // backslash-continued line ends.
    if (c == '#' && at_line_start) {
      while (i < n) {
        if (src[i] == '\\' && i + 1 < n &&
            (src[i + 1] == '\n' ||
             (src[i + 1] == '\r' && i + 2 < n && src[i + 2] == '\n'))) {
          i += src[i + 1] == '\n' ? 2 : 3;
          continue;
        }
        if (src[i] == '\n') break;
        ++i;
      }
      continue;
    }

    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      i = i + 1 < n ? i + 2 : n;
      continue;
    }

    at_line_start = false;

    if (is_ident_start(c)) {
      std::size_t b = i;
      while (i < n && is_ident_char(src[i])) ++i;
      std::string_view word = src.substr(b, i - b);
      push(is_reserved_word(word, lang) ? TokenKind::Keyword
                                        : TokenKind::Identifier,
           b, i);
      continue;
    }

    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(src[i + 1]))) {
      // pp-number: letters, digits, dots, and signs after an exponent.
      std::size_t b = i;
      ++i;
      while (i < n) {
        char d = src[i];
        if (is_ident_char(d) || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') &&
                   (src[i - 1] == 'e' || src[i - 1] == 'E' ||
                    src[i - 1] == 'p' || src[i - 1] == 'P')) {
          ++i;
        } else {
          break;
        }
      }
      push(TokenKind::Number, b, i);
      continue;
    }

    if (c == '"' || c == '\'') {
      std::size_t b = i;
      char quote = c;
      ++i;
      bool closed = false;
      while (i < n) {
        if (src[i] == '\\' && i + 1 < n) {
          i += 2;
          continue;
        }
        if (src[i] == quote) {
          ++i;
          closed = true;
          break;
        }
        if (src[i] == '\n') break;  // unterminated on this line
        ++i;
      }
      push(closed ? (quote == '"' ? TokenKind::String : TokenKind::Char)
                  : TokenKind::Bad,
           b, i);
      continue;
    }

    if (std::size_t len = punct_length(src.substr(i)); len > 0) {
      push(TokenKind::Punct, i, i + len);
      i += len;
      continue;
    }

    // Stray byte (non-ASCII outside a literal, control char, backslash
    // outside a directive). One Bad token per byte.
    push(TokenKind::Bad, i, i + 1);
    ++i;
  }

  push(TokenKind::Eof, n, n);
  return out;
}

}  // namespace capt
