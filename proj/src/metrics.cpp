// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "census/util.hpp"

namespace census {

namespace {

const std::set<TokenKind> kSymbolKinds = {TokenKind::Operator, TokenKind::Punct};
const std::set<TokenKind> kWordKinds = {TokenKind::Keyword, TokenKind::Identifier};

bool identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool word_like(std::string_view name) {
  return !name.empty() && identifier_char(name.front()) && identifier_char(name.back());
}

}  // namespace

SymbolSpec SymbolSpec::table1_default() {
  SymbolSpec spec;
  for (const char* s : {";", "{", "}", "[", "]", "(", ")", "+", "-", "*", "/", "++", "--"}) {
    spec.symbols.push_back({s, kSymbolKinds});
  }
  for (const char* w :
       {"for", "if", "else", "while", "repeat", "return", "switch", "case", "break", "continue",
        "try", "int", "double", "float", "char", "bool", "Integer", "String", "sort", "equals"}) {
    spec.symbols.push_back({w, kWordKinds});
  }
  return spec;
}

SymbolSpec SymbolSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open symbol spec: " + path);
  SymbolSpec spec;
  std::string line;
  long long line_no = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream fields(t);
    std::string name, kinds_csv;
    fields >> name >> kinds_csv;
    if (name.empty() || kinds_csv.empty()) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected '<name> <kind,kind,...>'");
    }
    if (!seen.insert(name).second) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": duplicate symbol '" + name + "'");
    }
    SymbolEntry entry;
    entry.name = name;
    for (const std::string& k : split(kinds_csv, ',')) {
      auto kind = parse_token_kind(k);
      if (!kind) {
        throw ConfigError(path + ":" + std::to_string(line_no) + ": unknown token kind '" + k +
                          "'");
      }
      entry.match_kinds.insert(*kind);
    }
    spec.symbols.push_back(std::move(entry));
  }
  return spec;
}

std::string SymbolSpec::fingerprint() const {
  std::string canon;
  for (const SymbolEntry& e : symbols) {
    canon += e.name;
    canon += '\x1f';
    for (TokenKind k : e.match_kinds) {
      canon += token_kind_name(k);
      canon += ',';
    }
    canon += '\x1e';
  }
  return fnv1a64_hex(canon);
}

namespace {

struct SpecIndex {
  // lexeme -> indices into spec.symbols
  std::unordered_map<std::string_view, std::vector<std::size_t>> by_name;

  explicit SpecIndex(const SymbolSpec& spec) {
    for (std::size_t i = 0; i < spec.symbols.size(); ++i) {
      by_name[spec.symbols[i].name].push_back(i);
    }
  }
};

OccurrenceTable make_table(const Corpus& corpus, const SymbolSpec& spec) {
  OccurrenceTable table;
  table.corpus_id = corpus.origin;
  table.example_count = static_cast<long long>(corpus.examples.size());
  for (const SymbolEntry& e : spec.symbols) {
    table.counts[e.name] = 0;
    table.order.push_back(e.name);
  }
  return table;
}

using CountRow = std::vector<long long>;

OccurrenceTable aggregate(const Corpus& corpus, const SymbolSpec& spec,
                          const std::vector<CountRow>& rows,
                          const std::vector<std::vector<std::string>>& diags) {
  OccurrenceTable table = make_table(corpus, spec);
  for (const CountRow& row : rows) {
    for (std::size_t i = 0; i < spec.symbols.size(); ++i) {
      table.counts[spec.symbols[i].name] += row[i];
    }
  }
  for (const auto& d : diags) {
    table.diagnostics.insert(table.diagnostics.end(), d.begin(), d.end());
  }
  return table;
}

}  // namespace

OccurrenceTable count_symbols(const Corpus& corpus, const SymbolSpec& spec, int jobs) {
  const SpecIndex index(spec);
  std::vector<CountRow> rows(corpus.examples.size(), CountRow(spec.symbols.size(), 0));
  std::vector<std::vector<std::string>> diags(corpus.examples.size());

  parallel_for(corpus.examples.size(), jobs, [&](std::size_t i) {
    const Example& ex = corpus.examples[i];
    LexResult lr = lex(ex.source, ex.language);
    for (const LexDiagnostic& e : lr.errors) {
      diags[i].push_back("example " + std::to_string(ex.index) + " line " +
                         std::to_string(e.line) + " col " + std::to_string(e.column) + ": " +
                         e.message);
    }
    for (const Token& t : lr.tokens) {
      auto it = index.by_name.find(t.lexeme);
      if (it == index.by_name.end()) continue;
      for (std::size_t si : it->second) {
        if (spec.symbols[si].match_kinds.count(t.kind)) rows[i][si] += 1;
      }
    }
  });
  return aggregate(corpus, spec, rows, diags);
}

OccurrenceTable count_symbols_raw(const Corpus& corpus, const SymbolSpec& spec, int jobs) {
  std::vector<CountRow> rows(corpus.examples.size(), CountRow(spec.symbols.size(), 0));
  std::vector<std::vector<std::string>> diags(corpus.examples.size());

  parallel_for(corpus.examples.size(), jobs, [&](std::size_t i) {
    const std::string& text = corpus.examples[i].source;
    for (std::size_t si = 0; si < spec.symbols.size(); ++si) {
      const std::string& name = spec.symbols[si].name;
      const bool word = word_like(name);
      long long n = 0;
      std::size_t pos = 0;
      while ((pos = text.find(name, pos)) != std::string::npos) {
        bool ok = true;
        if (word) {
          if (pos > 0 && identifier_char(text[pos - 1])) ok = false;
          const std::size_t end = pos + name.size();
          if (end < text.size() && identifier_char(text[end])) ok = false;
        }
        if (ok) {
          ++n;
          pos += name.size();  // non-overlapping
        } else {
          ++pos;
        }
      }
      rows[i][si] = n;
    }
  });
  return aggregate(corpus, spec, rows, diags);
}

OccurrenceTable sum_tables(const OccurrenceTable& a, const OccurrenceTable& b) {
  OccurrenceTable out = a;
  out.corpus_id = a.corpus_id + "+" + b.corpus_id;
  out.example_count += b.example_count;
  for (const auto& [name, n] : b.counts) {
    if (!out.counts.count(name)) out.order.push_back(name);
    out.counts[name] += n;
  }
  out.diagnostics.insert(out.diagnostics.end(), b.diagnostics.begin(), b.diagnostics.end());
  return out;
}

long long loc_proxy(const Example& example) {
  if (example.language == SourceLanguage::Python) {
    return static_cast<long long>(
        std::count(example.source.begin(), example.source.end(), '\n'));
  }
  LexResult lr = lex(example.source, example.language);
  long long n = 0;
  for (const Token& t : lr.tokens) {
    if (t.kind == TokenKind::Punct && t.lexeme == ";") ++n;
  }
  return n;
}

LocStats corpus_loc_stats(const Corpus& corpus, int jobs) {
  LocStats stats;
  stats.per_example.assign(corpus.examples.size(), 0);
  parallel_for(corpus.examples.size(), jobs, [&](std::size_t i) {
    stats.per_example[i] = loc_proxy(corpus.examples[i]);
  });
  for (long long n : stats.per_example) stats.total += n;
  stats.mean = corpus.examples.empty()
                   ? 0.0
                   : static_cast<double>(stats.total) / static_cast<double>(corpus.examples.size());
  return stats;
}

}  // namespace census
