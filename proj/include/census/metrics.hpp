// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "census/corpus.hpp"
#include "census/lexer.hpp"

namespace census {

struct SymbolEntry {
  std::string name;
  std::set<TokenKind> match_kinds;

  bool operator==(const SymbolEntry&) const = default;
};

// The census row set. The default ships the published occurrence-table rows,
// which mix punctuation, true keywords, and plain identifiers such as
// "sort" or "Integer"; word rows therefore match both Keyword and
// Identifier kinds so the spec stays language-agnostic.
struct SymbolSpec {
  std::vector<SymbolEntry> symbols;

  static SymbolSpec table1_default();
  static SymbolSpec load(const std::string& path);
  std::string fingerprint() const;

  bool operator==(const SymbolSpec&) const = default;
};

struct OccurrenceTable {
  std::string corpus_id;
  std::map<std::string, long long> counts;
  std::vector<std::string> order;  // row order from the SymbolSpec, for rendering
  long long example_count = 0;
  std::vector<std::string> diagnostics;

  bool operator==(const OccurrenceTable&) const = default;
};

// Token-level counting: literal contents and comments never contribute, and
// "++" does not increment "+". Lex errors become diagnostics; the affected
// examples still count their valid tokens.
OccurrenceTable count_symbols(const Corpus& corpus, const SymbolSpec& spec, int jobs = 1);

// Cross-check mode: plain non-overlapping substring counts over the
// detokenized source (word-boundary guarded for identifier-like names).
// Includes literals and comments by construction.
OccurrenceTable count_symbols_raw(const Corpus& corpus, const SymbolSpec& spec, int jobs = 1);

// Entrywise sum; used for the additivity property over corpus concatenation.
OccurrenceTable sum_tables(const OccurrenceTable& a, const OccurrenceTable& b);

struct LocStats {
  std::vector<long long> per_example;
  long long total = 0;
  double mean = 0.0;

  bool operator==(const LocStats&) const = default;
};

// Length proxy: semicolon tokens for Java/C++, physical line breaks for
// Python.
long long loc_proxy(const Example& example);

LocStats corpus_loc_stats(const Corpus& corpus, int jobs = 1);

}  // namespace census
