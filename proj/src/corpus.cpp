// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "census/util.hpp"

namespace census {

std::string_view language_name(SourceLanguage lang) {
  switch (lang) {
    case SourceLanguage::Java: return "java";
    case SourceLanguage::Cpp: return "cpp";
    case SourceLanguage::Python: return "python";
  }
  return "java";
}

std::optional<SourceLanguage> parse_language(std::string_view name) {
  if (name == "java") return SourceLanguage::Java;
  if (name == "cpp" || name == "c++" || name == "cxx") return SourceLanguage::Cpp;
  if (name == "python" || name == "py" || name == "python3") return SourceLanguage::Python;
  return std::nullopt;
}

TitleSplit split_title(std::string_view raw, std::string_view separator) {
  if (separator.empty()) throw ConfigError("title separator must be non-empty");
  const auto p = raw.find(separator);
  if (p == std::string_view::npos) return {std::nullopt, std::string(raw)};
  std::string title = trim(raw.substr(0, p));
  std::string body = trim(raw.substr(p + separator.size()));
  TitleSplit out;
  if (!title.empty()) out.title = std::move(title);
  out.body = std::move(body);
  return out;
}

namespace {

// Shared by the strict and lenient paths; `clamp` keeps going on dedent
// underflow instead of throwing.
std::string detokenize_python(std::string_view raw, const IngestFormat& fmt, bool clamp) {
  std::string out;
  out.reserve(raw.size());
  int level = 0;
  bool need_indent = true;
  bool pending_sep = false;
  long long field_no = 0;

  std::size_t start = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i != raw.size() && raw[i] != ' ') continue;
    std::string_view field = raw.substr(start, i - start);
    start = i + 1;
    ++field_no;
    if (field == fmt.newline_marker) {
      out.push_back('\n');
      need_indent = true;
      pending_sep = false;
    } else if (field == fmt.indent_marker) {
      ++level;
    } else if (field == fmt.dedent_marker) {
      --level;
      if (level < 0) {
        if (!clamp) {
          throw StructureError("dedent below indentation level zero at token " +
                               std::to_string(field_no));
        }
        level = 0;
      }
    } else {
      if (need_indent) {
        out.append(static_cast<std::size_t>(level) * static_cast<std::size_t>(fmt.indent_width),
                   ' ');
        need_indent = false;
      } else if (pending_sep) {
        out.push_back(' ');
      }
      out.append(field);
      pending_sep = true;
    }
  }
  return out;
}

}  // namespace

std::string detokenize(std::string_view raw, SourceLanguage lang, const IngestFormat& fmt) {
  if (lang != SourceLanguage::Python) return std::string(raw);
  return detokenize_python(raw, fmt, /*clamp=*/false);
}

Corpus ingest_text(std::string_view text, SourceLanguage lang, const IngestFormat& fmt,
                   std::string origin) {
  Corpus corpus;
  corpus.language = lang;
  corpus.origin = std::move(origin);

  if (fmt.layout == IngestLayout::PlainSource) {
    if (auto bad = utf8_invalid_offset(text)) {
      long long line = 1 + static_cast<long long>(
                               std::count(text.begin(), text.begin() + static_cast<long>(*bad), '\n'));
      throw IngestError(corpus.origin + ": invalid UTF-8 at line " + std::to_string(line));
    }
    corpus.physical_lines = static_cast<long long>(std::count(text.begin(), text.end(), '\n'));
    if (!text.empty() && text.back() != '\n') ++corpus.physical_lines;
    if (!is_blank(text)) {
      Example ex;
      ex.index = 0;
      ex.raw = std::string(text);
      ex.source = std::string(text);
      ex.language = lang;
      corpus.examples.push_back(std::move(ex));
    }
    return corpus;
  }

  std::size_t line_start = 0;
  long long line_no = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != '\n') continue;
    if (i == text.size() && i == line_start) break;  // no trailing fragment
    std::string_view line = text.substr(line_start, i - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line_start = i + 1;
    ++line_no;
    ++corpus.physical_lines;

    if (auto bad = utf8_invalid_offset(line)) {
      throw IngestError(corpus.origin + ": invalid UTF-8 at line " + std::to_string(line_no));
    }
    if (is_blank(line)) {
      ++corpus.skipped_blank_lines;
      continue;
    }

    std::optional<std::string> title;
    std::string body(line);
    if (fmt.title_separator) {
      TitleSplit ts = split_title(line, *fmt.title_separator);
      title = std::move(ts.title);
      body = std::move(ts.body);
    }
    if (is_blank(body)) {
      corpus.diagnostics.push_back("line " + std::to_string(line_no) +
                                   ": empty body after title split; skipped");
      ++corpus.skipped_blank_lines;
      continue;
    }

    Example ex;
    ex.index = static_cast<long long>(corpus.examples.size());
    ex.title = std::move(title);
    ex.language = lang;
    if (lang == SourceLanguage::Python) {
      try {
        ex.source = detokenize_python(body, fmt, /*clamp=*/false);
      } catch (const StructureError& e) {
        corpus.diagnostics.push_back("example " + std::to_string(ex.index) + ": " + e.what());
        ex.source = detokenize_python(body, fmt, /*clamp=*/true);
      }
    } else {
      ex.source = body;
    }
    ex.raw = std::move(body);
    corpus.examples.push_back(std::move(ex));
  }
  return corpus;
}

Corpus ingest_corpus(const std::string& path, SourceLanguage lang, const IngestFormat& fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IngestError("cannot read file: " + path);
  return ingest_text(buf.str(), lang, fmt, path);
}

}  // namespace census
