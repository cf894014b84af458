// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "census/corpus.hpp"

namespace census {

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  Comment,
  Operator,
  Punct,
  Newline,
  Indent,
  Dedent,
};

std::string_view token_kind_name(TokenKind kind);
std::optional<TokenKind> parse_token_kind(std::string_view name);

// `lexeme` is the exact source text. Dedent is the one zero-width kind: it
// marks a structural boundary that has no text of its own, so its lexeme is
// empty and reconstruct() skips it.
struct Token {
  TokenKind kind = TokenKind::Identifier;
  std::string lexeme;
  int line = 1;
  int column = 1;

  bool operator==(const Token&) const = default;
};

struct LexOptions {
  bool keep_comments = true;
  bool keep_literal_contents = true;
};

struct LexDiagnostic {
  std::string message;
  int line = 1;
  int column = 1;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<LexDiagnostic> errors;
};

// Maximal-munch tokenizer over detokenized source text. Unterminated
// literals/comments are recorded in `errors` (the consumed text still
// becomes a token) and lexing continues. Pure function; safe to call
// concurrently.
LexResult lex(std::string_view source, SourceLanguage language, const LexOptions& options = {});

// True iff concatenating the token lexemes, with only whitespace allowed in
// the gaps, reproduces `original` byte-for-byte. Requires tokens produced
// with keep_comments and keep_literal_contents enabled.
bool reconstruct(const std::vector<Token>& tokens, std::string_view original);

// Drops Comment tokens and erases positions so streams compare by
// (kind, lexeme) only.
std::vector<Token> normalize_stream(std::vector<Token> tokens);

bool is_reserved_word(SourceLanguage language, std::string_view word);

}  // namespace census
