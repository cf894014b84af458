// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "census/corpus.hpp"
#include "census/features.hpp"
#include "census/metrics.hpp"
#include "census/report.hpp"

namespace census::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIoError = 2;
constexpr int kStrictViolation = 3;

struct CommonOpts {
  std::string input;
  std::string lang = "java";
  std::string layout = "tokenized-lines";
  std::string title_sep;
  std::string out;
  std::string render_fmt = "json";
  std::string symbols_path;
  std::string catalog_path;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_catalog, bool wants_symbols) {
  cmd->add_option("input", o.input, "input corpus file")->required();
  cmd->add_option("--lang", o.lang, "source language: java|cpp|python")->required();
  cmd->add_option("--format", o.layout, "ingest format: tokenized-lines|plain-source")
      ->default_val("tokenized-lines");
  cmd->add_option("--title-sep", o.title_sep,
                  "title separator (e.g. '|'); titles are split off each line");
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--render", o.render_fmt, "output format: json|csv|markdown")
      ->default_val("json");
  cmd->add_option("--jobs", o.jobs, "worker threads (default 1)")->default_val(1);
  if (wants_symbols) {
    cmd->add_option("--symbols", o.symbols_path, "symbol spec file (default: built-in table)");
  }
  if (wants_catalog) {
    cmd->add_option("--catalog", o.catalog_path, "elementary catalog JSON (default: built-in)");
  }
}

SourceLanguage resolve_language(const std::string& name) {
  auto lang = parse_language(name);
  if (!lang) throw ConfigError("unknown language: " + name);
  return *lang;
}

IngestFormat resolve_format(const CommonOpts& o) {
  IngestFormat fmt;
  if (o.layout == "tokenized-lines") fmt.layout = IngestLayout::TokenizedLines;
  else if (o.layout == "plain-source") fmt.layout = IngestLayout::PlainSource;
  else throw ConfigError("unknown ingest format: " + o.layout);
  if (!o.title_sep.empty()) fmt.title_separator = o.title_sep;
  return fmt;
}

RenderFormat resolve_render(const std::string& name) {
  auto fmt = parse_render_format(name);
  if (!fmt) throw ConfigError("unknown render format: " + name);
  return *fmt;
}

SymbolSpec resolve_symbols(const CommonOpts& o) {
  return o.symbols_path.empty() ? SymbolSpec::table1_default() : SymbolSpec::load(o.symbols_path);
}

ElementaryCatalog resolve_catalog(const CommonOpts& o) {
  return o.catalog_path.empty() ? ElementaryCatalog::defaults()
                                : ElementaryCatalog::load(o.catalog_path);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IngestError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw IngestError("cannot write output file: " + out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"codecensus: language-feature census over program corpora"};
  app.require_subcommand(1);

  CommonOpts audit_opts, count_opts, classify_opts;
  bool strict = false;
  bool raw_substring = false;
  long long first_n = -1;
  std::vector<std::string> diff_inputs;
  std::string diff_out;
  std::string diff_render = "json";

  CLI::App* audit = app.add_subcommand("audit", "full corpus audit report");
  add_common(audit, audit_opts, /*catalog=*/true, /*symbols=*/true);
  audit->add_flag("--strict", strict, "exit 3 when an absence flag is violated");

  CLI::App* count = app.add_subcommand("count", "symbol occurrence table only");
  add_common(count, count_opts, /*catalog=*/false, /*symbols=*/true);
  count->add_flag("--raw-substring", raw_substring,
                  "count by naive substring scan instead of tokens (cross-check mode)");

  CLI::App* classify = app.add_subcommand("classify", "feature tier histogram");
  add_common(classify, classify_opts, /*catalog=*/true, /*symbols=*/false);
  classify->add_option("--first", first_n, "classify only the first N examples");

  CLI::App* diff_cmd = app.add_subcommand("diff", "entrywise delta of two audit reports");
  diff_cmd->add_option("reports", diff_inputs, "two report JSON files")->expected(2);
  diff_cmd->add_option("--out", diff_out, "output path (default: stdout)");
  diff_cmd->add_option("--render", diff_render, "output format: json|csv|markdown")
      ->default_val("json");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  try {
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: [E_USAGE] " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (audit->parsed()) {
      const CommonOpts& o = audit_opts;
      Corpus corpus = ingest_corpus(o.input, resolve_language(o.lang), resolve_format(o));
      AuditReport report =
          build_report(corpus, resolve_symbols(o), resolve_catalog(o), o.jobs);
      write_output(o.out, render(report, resolve_render(o.render_fmt)));
      if (strict && report.has_violations()) {
        std::cerr << "error: [E_STRICT] absence flag violated (see report)\n";
        return kStrictViolation;
      }
      return kOk;
    }
    if (count->parsed()) {
      const CommonOpts& o = count_opts;
      Corpus corpus = ingest_corpus(o.input, resolve_language(o.lang), resolve_format(o));
      SymbolSpec spec = resolve_symbols(o);
      OccurrenceTable table = raw_substring ? count_symbols_raw(corpus, spec, o.jobs)
                                            : count_symbols(corpus, spec, o.jobs);
      write_output(o.out, render_table(table, resolve_render(o.render_fmt)));
      return kOk;
    }
    if (classify->parsed()) {
      const CommonOpts& o = classify_opts;
      Corpus corpus = ingest_corpus(o.input, resolve_language(o.lang), resolve_format(o));
      std::optional<long long> first;
      if (first_n >= 0) {
        first = std::min<long long>(first_n, static_cast<long long>(corpus.examples.size()));
      }
      TierHistogram hist = tier_histogram(corpus, resolve_catalog(o), first, o.jobs);
      const long long considered =
          first ? *first : static_cast<long long>(corpus.examples.size());
      write_output(o.out, render_tiers(corpus.origin, considered, hist,
                                       resolve_render(o.render_fmt)));
      return kOk;
    }
    if (diff_cmd->parsed()) {
      AuditReport left = parse_report(read_file(diff_inputs[0]));
      AuditReport right = parse_report(read_file(diff_inputs[1]));
      DiffReport d = diff(left, right);
      write_output(diff_out, render(d, resolve_render(diff_render)));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: [" << e.code() << "] " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: [E_INTERNAL] " << e.what() << "\n";
    return kIoError;
  }
  std::cerr << "error: [E_USAGE] no command given\n";
  return kUsage;
}

}  // namespace census::cli
