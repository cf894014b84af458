// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace census {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class IngestError : public Error {
 public:
  explicit IngestError(const std::string& m) : Error("E_INGEST", m) {}
};

class StructureError : public Error {
 public:
  explicit StructureError(const std::string& m) : Error("E_STRUCTURE", m) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error("E_CONFIG", m) {}
};

class DiffError : public Error {
 public:
  explicit DiffError(const std::string& m) : Error("E_DIFF", m) {}
};

enum class SourceLanguage { Java, Cpp, Python };

std::string_view language_name(SourceLanguage lang);
std::optional<SourceLanguage> parse_language(std::string_view name);

// One corpus entry. `raw` is the tokenized one-line body as stored in the
// dataset (after the optional title has been split off); `source` is the
// detokenized multi-line text derived from it.
struct Example {
  long long index = 0;
  std::optional<std::string> title;
  std::string raw;
  std::string source;
  SourceLanguage language = SourceLanguage::Java;

  bool operator==(const Example&) const = default;
};

enum class IngestLayout { TokenizedLines, PlainSource };

struct IngestFormat {
  IngestLayout layout = IngestLayout::TokenizedLines;
  std::optional<std::string> title_separator;  // disabled by default
  std::string newline_marker = "NEW_LINE";
  std::string indent_marker = "INDENT";
  std::string dedent_marker = "DEDENT";
  int indent_width = 4;

  bool operator==(const IngestFormat&) const = default;
};

// Immutable after construction; safe to share across concurrent readers.
struct Corpus {
  SourceLanguage language = SourceLanguage::Java;
  std::vector<Example> examples;
  std::string origin;
  long long skipped_blank_lines = 0;
  long long physical_lines = 0;
  std::vector<std::string> diagnostics;

  bool operator==(const Corpus&) const = default;
};

struct TitleSplit {
  std::optional<std::string> title;
  std::string body;
};

// Splits on the first occurrence of `separator`; both sides are trimmed.
// Absence of the separator is not an error.
TitleSplit split_title(std::string_view raw, std::string_view separator);

// Converts one tokenized line to source text. For Python the structural
// markers in `fmt` become physical newlines and indentation; for Java/C++
// the line is returned unchanged. Deterministic and total except for a
// dedent below level zero, which throws StructureError.
std::string detokenize(std::string_view raw, SourceLanguage lang, const IngestFormat& fmt = {});

Corpus ingest_text(std::string_view text, SourceLanguage lang, const IngestFormat& fmt,
                   std::string origin);

Corpus ingest_corpus(const std::string& path, SourceLanguage lang, const IngestFormat& fmt = {});

}  // namespace census
