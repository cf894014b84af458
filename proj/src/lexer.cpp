// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace census {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "int_literal";
    case TokenKind::FloatLiteral: return "float_literal";
    case TokenKind::StringLiteral: return "string_literal";
    case TokenKind::CharLiteral: return "char_literal";
    case TokenKind::Comment: return "comment";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punct: return "punct";
    case TokenKind::Newline: return "newline";
    case TokenKind::Indent: return "indent";
    case TokenKind::Dedent: return "dedent";
  }
  return "identifier";
}

std::optional<TokenKind> parse_token_kind(std::string_view name) {
  static const std::array<TokenKind, 12> kinds = {
      TokenKind::Keyword,      TokenKind::Identifier, TokenKind::IntLiteral,
      TokenKind::FloatLiteral, TokenKind::StringLiteral, TokenKind::CharLiteral,
      TokenKind::Comment,      TokenKind::Operator,   TokenKind::Punct,
      TokenKind::Newline,      TokenKind::Indent,     TokenKind::Dedent,
  };
  for (TokenKind k : kinds) {
    if (token_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

using StrSet = std::unordered_set<std::string_view>;

const StrSet& java_keywords() {
  static const StrSet k = {
      "abstract", "assert",   "boolean",   "break",      "byte",     "case",
      "catch",    "char",     "class",     "const",      "continue", "default",
      "do",       "double",   "else",      "enum",       "extends",  "final",
      "finally",  "float",    "for",       "goto",       "if",       "implements",
      "import",   "instanceof", "int",     "interface",  "long",     "native",
      "new",      "package",  "private",   "protected",  "public",   "return",
      "short",    "static",   "strictfp",  "super",      "switch",   "synchronized",
      "this",     "throw",    "throws",    "transient",  "try",      "void",
      "volatile", "while",
  };
  return k;
}

const StrSet& cpp_keywords() {
  static const StrSet k = {
      "alignas",   "alignof",   "and",        "and_eq",   "asm",          "auto",
      "bitand",    "bitor",     "bool",       "break",    "case",         "catch",
      "char",      "char8_t",   "char16_t",   "char32_t", "class",        "compl",
      "concept",   "const",     "consteval",  "constexpr", "constinit",   "const_cast",
      "continue",  "co_await",  "co_return",  "co_yield", "decltype",     "default",
      "delete",    "do",        "double",     "dynamic_cast", "else",     "enum",
      "explicit",  "export",    "extern",     "false",    "float",        "for",
      "friend",    "goto",      "if",         "inline",   "int",          "long",
      "mutable",   "namespace", "new",        "noexcept", "not",          "not_eq",
      "nullptr",   "operator",  "or",         "or_eq",    "private",      "protected",
      "public",    "register",  "reinterpret_cast", "requires", "return", "short",
      "signed",    "sizeof",    "static",     "static_assert", "static_cast", "struct",
      "switch",    "template",  "this",       "thread_local", "throw",    "true",
      "try",       "typedef",   "typeid",     "typename", "union",        "unsigned",
      "using",     "virtual",   "void",       "volatile", "wchar_t",      "while",
      "xor",       "xor_eq",
  };
  return k;
}

const StrSet& python_keywords() {
  static const StrSet k = {
      "False", "None",   "True",  "and",    "as",     "assert", "async",
      "await", "break",  "class", "continue", "def",  "del",    "elif",
      "else",  "except", "finally", "for",  "from",   "global", "if",
      "import", "in",    "is",    "lambda", "nonlocal", "not",  "or",
      "pass",  "raise",  "return", "try",   "while",  "with",   "yield",
  };
  return k;
}

const StrSet& keywords_for(SourceLanguage lang) {
  switch (lang) {
    case SourceLanguage::Java: return java_keywords();
    case SourceLanguage::Cpp: return cpp_keywords();
    case SourceLanguage::Python: return python_keywords();
  }
  return java_keywords();
}

struct FixedTok {
  std::string_view text;
  TokenKind kind;
};

// Each table is ordered by descending lexeme length so a linear scan
// implements maximal munch.
const std::vector<FixedTok>& fixed_tokens(SourceLanguage lang) {
  static const std::vector<FixedTok> java = {
      {">>>=", TokenKind::Operator},
      {">>>", TokenKind::Operator}, {"<<=", TokenKind::Operator}, {">>=", TokenKind::Operator},
      {"==", TokenKind::Operator},  {"!=", TokenKind::Operator},  {"<=", TokenKind::Operator},
      {">=", TokenKind::Operator},  {"&&", TokenKind::Operator},  {"||", TokenKind::Operator},
      {"++", TokenKind::Operator},  {"--", TokenKind::Operator},  {"+=", TokenKind::Operator},
      {"-=", TokenKind::Operator},  {"*=", TokenKind::Operator},  {"/=", TokenKind::Operator},
      {"%=", TokenKind::Operator},  {"&=", TokenKind::Operator},  {"|=", TokenKind::Operator},
      {"^=", TokenKind::Operator},  {"<<", TokenKind::Operator},  {">>", TokenKind::Operator},
      {"->", TokenKind::Operator},  {"::", TokenKind::Operator},
      {"=", TokenKind::Operator},   {"+", TokenKind::Operator},   {"-", TokenKind::Operator},
      {"*", TokenKind::Operator},   {"/", TokenKind::Operator},   {"%", TokenKind::Operator},
      {"<", TokenKind::Operator},   {">", TokenKind::Operator},   {"!", TokenKind::Operator},
      {"&", TokenKind::Operator},   {"|", TokenKind::Operator},   {"^", TokenKind::Operator},
      {"~", TokenKind::Operator},   {"?", TokenKind::Operator},   {":", TokenKind::Operator},
      {"(", TokenKind::Punct},      {")", TokenKind::Punct},      {"{", TokenKind::Punct},
      {"}", TokenKind::Punct},      {"[", TokenKind::Punct},      {"]", TokenKind::Punct},
      {";", TokenKind::Punct},      {",", TokenKind::Punct},      {".", TokenKind::Punct},
      {"@", TokenKind::Punct},
  };
  static const std::vector<FixedTok> cpp = {
      {"<<=", TokenKind::Operator}, {">>=", TokenKind::Operator}, {"<=>", TokenKind::Operator},
      {"->*", TokenKind::Operator}, {"...", TokenKind::Punct},
      {"::", TokenKind::Operator},  {"->", TokenKind::Operator},  {".*", TokenKind::Operator},
      {"==", TokenKind::Operator},  {"!=", TokenKind::Operator},  {"<=", TokenKind::Operator},
      {">=", TokenKind::Operator},  {"&&", TokenKind::Operator},  {"||", TokenKind::Operator},
      {"++", TokenKind::Operator},  {"--", TokenKind::Operator},  {"+=", TokenKind::Operator},
      {"-=", TokenKind::Operator},  {"*=", TokenKind::Operator},  {"/=", TokenKind::Operator},
      {"%=", TokenKind::Operator},  {"&=", TokenKind::Operator},  {"|=", TokenKind::Operator},
      {"^=", TokenKind::Operator},  {"<<", TokenKind::Operator},  {">>", TokenKind::Operator},
      {"##", TokenKind::Punct},
      {"=", TokenKind::Operator},   {"+", TokenKind::Operator},   {"-", TokenKind::Operator},
      {"*", TokenKind::Operator},   {"/", TokenKind::Operator},   {"%", TokenKind::Operator},
      {"<", TokenKind::Operator},   {">", TokenKind::Operator},   {"!", TokenKind::Operator},
      {"&", TokenKind::Operator},   {"|", TokenKind::Operator},   {"^", TokenKind::Operator},
      {"~", TokenKind::Operator},   {"?", TokenKind::Operator},   {":", TokenKind::Operator},
      {"(", TokenKind::Punct},      {")", TokenKind::Punct},      {"{", TokenKind::Punct},
      {"}", TokenKind::Punct},      {"[", TokenKind::Punct},      {"]", TokenKind::Punct},
      {";", TokenKind::Punct},      {",", TokenKind::Punct},      {".", TokenKind::Punct},
      {"#", TokenKind::Punct},
  };
  static const std::vector<FixedTok> python = {
      {"**=", TokenKind::Operator}, {"//=", TokenKind::Operator}, {"<<=", TokenKind::Operator},
      {">>=", TokenKind::Operator}, {"...", TokenKind::Punct},
      {"**", TokenKind::Operator},  {"//", TokenKind::Operator},  {"<<", TokenKind::Operator},
      {">>", TokenKind::Operator},  {"<=", TokenKind::Operator},  {">=", TokenKind::Operator},
      {"==", TokenKind::Operator},  {"!=", TokenKind::Operator},  {"+=", TokenKind::Operator},
      {"-=", TokenKind::Operator},  {"*=", TokenKind::Operator},  {"/=", TokenKind::Operator},
      {"%=", TokenKind::Operator},  {"@=", TokenKind::Operator},  {"&=", TokenKind::Operator},
      {"|=", TokenKind::Operator},  {"^=", TokenKind::Operator},  {":=", TokenKind::Operator},
      {"->", TokenKind::Operator},
      {"=", TokenKind::Operator},   {"+", TokenKind::Operator},   {"-", TokenKind::Operator},
      {"*", TokenKind::Operator},   {"/", TokenKind::Operator},   {"%", TokenKind::Operator},
      {"@", TokenKind::Operator},   {"&", TokenKind::Operator},   {"|", TokenKind::Operator},
      {"^", TokenKind::Operator},   {"~", TokenKind::Operator},   {"<", TokenKind::Operator},
      {">", TokenKind::Operator},
      {"(", TokenKind::Punct},      {")", TokenKind::Punct},      {"[", TokenKind::Punct},
      {"]", TokenKind::Punct},      {"{", TokenKind::Punct},      {"}", TokenKind::Punct},
      {",", TokenKind::Punct},      {":", TokenKind::Punct},      {".", TokenKind::Punct},
      {";", TokenKind::Punct},
  };
  switch (lang) {
    case SourceLanguage::Java: return java;
    case SourceLanguage::Cpp: return cpp;
    case SourceLanguage::Python: return python;
  }
  return java;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

struct Lexer {
  std::string_view src;
  SourceLanguage lang;
  LexOptions opts;

  std::size_t pos = 0;
  int line = 1;
  int col = 1;
  bool line_dirty = false;           // any token emitted since last newline
  bool at_line_start = true;         // python: indent processing pending
  bool suppress_next_indent = false; // python: after explicit line join
  int bracket_depth = 0;             // python: implicit line joining
  std::vector<int> indents{0};

  std::vector<Token> toks;
  std::vector<LexDiagnostic> errs;

  char peek(std::size_t off = 0) const {
    return pos + off < src.size() ? src[pos + off] : '\0';
  }
  bool eof() const { return pos >= src.size(); }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos < src.size(); ++i) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool ident_start(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           (lang == SourceLanguage::Java && c == '$') ||
           static_cast<unsigned char>(c) >= 0x80;
  }
  bool ident_cont(char c) const { return ident_start(c) || is_digit(c); }

  void emit(TokenKind kind, std::size_t start, int l, int c) {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(src.substr(start, pos - start));
    t.line = l;
    t.column = c;
    if ((kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral) &&
        !opts.keep_literal_contents) {
      t.lexeme = kind == TokenKind::StringLiteral ? "\"\"" : "''";
    }
    if (kind == TokenKind::Comment && !opts.keep_comments) return;
    line_dirty = true;
    toks.push_back(std::move(t));
  }

  void error(std::string message, int l, int c) { errs.push_back({std::move(message), l, c}); }

  // ---- python indentation ----

  void handle_line_start() {
    const std::size_t ws_start = pos;
    while (peek() == ' ' || peek() == '\t') advance();
    const char c = peek();
    if (c == '\0' || c == '\n' || c == '\r' || c == '#') return;  // blank or comment-only line
    if (suppress_next_indent) {
      suppress_next_indent = false;
      return;
    }
    int width = 0;
    for (std::size_t i = ws_start; i < pos; ++i) {
      width = src[i] == '\t' ? (width / 8 + 1) * 8 : width + 1;
    }
    if (width > indents.back()) {
      indents.push_back(width);
      Token t;
      t.kind = TokenKind::Indent;
      t.lexeme = std::string(src.substr(ws_start, pos - ws_start));
      t.line = line;
      t.column = 1;
      toks.push_back(std::move(t));
    } else {
      while (width < indents.back()) {
        indents.pop_back();
        toks.push_back({TokenKind::Dedent, "", line, 1});
        if (indents.back() < width) {
          error("inconsistent dedent", line, 1);
          indents.push_back(width);
          break;
        }
      }
    }
  }

  // ---- comments ----

  void line_comment() {  // java/cpp "//" or python "#", cursor at the marker
    const std::size_t start = pos;
    const int l = line, c = col;
    while (!eof() && peek() != '\n') advance();
    emit(TokenKind::Comment, start, l, c);
  }

  void block_comment() {
    const std::size_t start = pos;
    const int l = line, c = col;
    advance(2);  // "/*"
    bool closed = false;
    while (!eof()) {
      if (peek() == '*' && peek(1) == '/') {
        advance(2);
        closed = true;
        break;
      }
      advance();
    }
    if (!closed) error("unterminated block comment", l, c);
    emit(TokenKind::Comment, start, l, c);
  }

  void directive() {  // cpp '#' at start of line; consumed as one token
    const std::size_t start = pos;
    const int l = line, c = col;
    while (!eof() && peek() != '\n') {
      if (peek() == '\\' && peek(1) == '\n') {
        advance(2);
        continue;
      }
      advance();
    }
    emit(TokenKind::Comment, start, l, c);
  }

  // ---- literals ----

  void number() {
    const std::size_t start = pos;
    const int l = line, c = col;
    bool is_float = false;

    auto digit_run = [&](auto pred) {
      while (pred(peek()) || peek() == '_' ||
             (lang == SourceLanguage::Cpp && peek() == '\'' && pred(peek(1)))) {
        advance();
      }
    };

    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance(2);
      digit_run(is_hex_digit);
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      advance(2);
      digit_run(is_digit);
    } else if (lang == SourceLanguage::Python && peek() == '0' &&
               (peek(1) == 'o' || peek(1) == 'O')) {
      advance(2);
      digit_run(is_digit);
    } else {
      digit_run(is_digit);
      if (peek() == '.') {
        const char after = peek(1);
        const bool fraction = is_digit(after);
        const bool bare_dot = !fraction && after != '.' && !ident_cont(after);
        const bool suffix_dot = !fraction && (lang != SourceLanguage::Python) &&
                                (after == 'f' || after == 'F' || after == 'd' || after == 'D' ||
                                 after == 'e' || after == 'E');
        if (fraction || bare_dot || suffix_dot) {
          is_float = true;
          advance();
          digit_run(is_digit);
        }
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
        is_float = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        digit_run(is_digit);
      }
    }

    // type suffixes
    if (lang == SourceLanguage::Java) {
      if (peek() == 'l' || peek() == 'L') advance();
      while (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D') {
        is_float = true;
        advance();
      }
    } else if (lang == SourceLanguage::Cpp) {
      while (peek() == 'u' || peek() == 'U' || peek() == 'l' || peek() == 'L') advance();
      while (peek() == 'f' || peek() == 'F') {
        is_float = true;
        advance();
      }
    } else {
      if (peek() == 'j' || peek() == 'J') {
        is_float = true;
        advance();
      }
    }
    emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, l, c);
  }

  // Cursor sits at the opening quote; the prefix (if any) starts at
  // `start`. Raw C++ strings disable escape handling.
  void string_literal(std::size_t start, int l, int c, bool raw) {
    const char quote = peek();
    const bool triple = lang == SourceLanguage::Python && peek(1) == quote && peek(2) == quote;
    advance(triple ? 3 : 1);

    if (raw && lang == SourceLanguage::Cpp) {  // R"delim( ... )delim"
      std::string delim;
      while (!eof() && peek() != '(' && peek() != '\n') {
        delim.push_back(peek());
        advance();
      }
      if (peek() != '(') {
        error("malformed raw string delimiter", l, c);
        emit(TokenKind::StringLiteral, start, l, c);
        return;
      }
      advance();
      const std::string closer = ")" + delim + "\"";
      bool closed = false;
      while (!eof()) {
        if (src.compare(pos, closer.size(), closer) == 0) {
          advance(closer.size());
          closed = true;
          break;
        }
        advance();
      }
      if (!closed) error("unterminated raw string literal", l, c);
      emit(TokenKind::StringLiteral, start, l, c);
      return;
    }

    bool closed = false;
    while (!eof()) {
      const char ch = peek();
      if (!triple && ch == '\n') break;
      if (triple && ch == quote && peek(1) == quote && peek(2) == quote) {
        advance(3);
        closed = true;
        break;
      }
      if (ch == '\\' && pos + 1 < src.size()) {
        advance(2);
        continue;
      }
      if (!triple && ch == quote) {
        advance();
        closed = true;
        break;
      }
      advance();
    }
    const bool char_kind =
        quote == '\'' && lang != SourceLanguage::Python;
    if (!closed) {
      error(char_kind ? "unterminated character literal" : "unterminated string literal", l, c);
    }
    emit(char_kind ? TokenKind::CharLiteral : TokenKind::StringLiteral, start, l, c);
  }

  bool is_string_prefix(std::string_view word) const {
    if (lang == SourceLanguage::Cpp) {
      return word == "L" || word == "u" || word == "U" || word == "u8" || word == "R" ||
             word == "LR" || word == "uR" || word == "UR" || word == "u8R";
    }
    if (lang == SourceLanguage::Python) {
      if (word.size() > 2) return false;
      return std::all_of(word.begin(), word.end(), [](char ch) {
        return ch == 'r' || ch == 'R' || ch == 'b' || ch == 'B' || ch == 'u' || ch == 'U' ||
               ch == 'f' || ch == 'F';
      });
    }
    return false;
  }

  void word() {
    const std::size_t start = pos;
    const int l = line, c = col;
    while (!eof() && ident_cont(peek())) advance();
    std::string_view w = src.substr(start, pos - start);

    if ((peek() == '"' || peek() == '\'') && is_string_prefix(w)) {
      const bool raw = w.find('R') != std::string_view::npos;
      string_literal(start, l, c, raw);
      return;
    }
    emit(keywords_for(lang).count(w) ? TokenKind::Keyword : TokenKind::Identifier, start, l, c);
  }

  void fixed_or_unknown() {
    for (const FixedTok& ft : fixed_tokens(lang)) {
      if (src.compare(pos, ft.text.size(), ft.text) == 0) {
        const std::size_t start = pos;
        const int l = line, c = col;
        advance(ft.text.size());
        if (lang == SourceLanguage::Python && ft.text.size() == 1) {
          const char b = ft.text[0];
          if (b == '(' || b == '[' || b == '{') ++bracket_depth;
          if ((b == ')' || b == ']' || b == '}') && bracket_depth > 0) --bracket_depth;
        }
        emit(ft.kind, start, l, c);
        return;
      }
    }
    const std::size_t start = pos;
    const int l = line, c = col;
    error("unexpected character", l, c);
    advance();
    emit(TokenKind::Punct, start, l, c);
  }

  void run() {
    while (!eof()) {
      if (lang == SourceLanguage::Python && at_line_start && bracket_depth == 0) {
        handle_line_start();
        if (eof()) break;
      }
      at_line_start = false;

      const char c = peek();
      if (c == '\n') {
        if (lang == SourceLanguage::Python) {
          const std::size_t start = pos;
          const int l = line, cc = col;
          advance();
          Token t;
          t.kind = TokenKind::Newline;
          t.lexeme = std::string(src.substr(start, pos - start));
          t.line = l;
          t.column = cc;
          toks.push_back(std::move(t));
        } else {
          advance();
        }
        at_line_start = true;
        line_dirty = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
        continue;
      }
      if (lang != SourceLanguage::Python && c == '/' && peek(1) == '/') {
        line_comment();
        continue;
      }
      if (lang != SourceLanguage::Python && c == '/' && peek(1) == '*') {
        block_comment();
        continue;
      }
      if (lang == SourceLanguage::Python && c == '#') {
        line_comment();
        continue;
      }
      if (lang == SourceLanguage::Cpp && c == '#' && !line_dirty) {
        directive();
        continue;
      }
      if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        number();
        continue;
      }
      if (c == '"' || c == '\'') {
        string_literal(pos, line, col, /*raw=*/false);
        continue;
      }
      if (ident_start(c)) {
        word();
        continue;
      }
      if (lang == SourceLanguage::Python && c == '\\') {
        // explicit line join: the backslash is its own token, the newline
        // that follows is treated as plain whitespace
        const std::size_t start = pos;
        const int l = line, cc = col;
        advance();
        emit(TokenKind::Punct, start, l, cc);
        if (peek() == '\r') advance();
        if (peek() == '\n') {
          advance();
          suppress_next_indent = true;
          at_line_start = true;
        } else {
          error("unexpected character", l, cc);
        }
        continue;
      }
      fixed_or_unknown();
    }
    if (lang == SourceLanguage::Python) {
      while (indents.size() > 1) {
        indents.pop_back();
        toks.push_back({TokenKind::Dedent, "", line, col});
      }
    }
  }
};

}  // namespace

LexResult lex(std::string_view source, SourceLanguage language, const LexOptions& options) {
  Lexer lx;
  lx.src = source;
  lx.lang = language;
  lx.opts = options;
  lx.run();
  return {std::move(lx.toks), std::move(lx.errs)};
}

bool reconstruct(const std::vector<Token>& tokens, std::string_view original) {
  auto is_gap = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  };
  std::size_t pos = 0;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Dedent || t.lexeme.empty()) continue;
    const std::string& lx = t.lexeme;
    for (;;) {
      if (pos + lx.size() <= original.size() && original.compare(pos, lx.size(), lx) == 0) break;
      if (pos < original.size() && is_gap(original[pos])) {
        ++pos;
        continue;
      }
      return false;
    }
    pos += lx.size();
  }
  while (pos < original.size() && is_gap(original[pos])) ++pos;
  return pos == original.size();
}

std::vector<Token> normalize_stream(std::vector<Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (Token& t : tokens) {
    if (t.kind == TokenKind::Comment) continue;
    t.line = 0;
    t.column = 0;
    out.push_back(std::move(t));
  }
  return out;
}

bool is_reserved_word(SourceLanguage language, std::string_view word) {
  return keywords_for(language).count(word) > 0;
}

}  // namespace census
