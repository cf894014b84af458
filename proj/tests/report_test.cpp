// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/report.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace census;
using census::testing::fixture_path;
using census::testing::make_corpus;

namespace {

Corpus mini_java() {
  IngestFormat fmt;
  fmt.title_separator = "|";
  return ingest_corpus(fixture_path("mini_java.tok"), SourceLanguage::Java, fmt);
}

AuditReport mini_report() {
  return build_report(mini_java(), SymbolSpec::table1_default(), ElementaryCatalog::defaults());
}

}  // namespace

TEST_CASE("build_report: aggregates are mutually consistent") {
  AuditReport r = mini_report();
  CHECK(r.example_count == 4);
  CHECK(r.occurrence_table.example_count == r.example_count);
  CHECK(static_cast<long long>(r.loc_stats.per_example.size()) == r.example_count);
  long long tier_total = 0;
  for (const auto& [t, n] : r.tier_histogram) tier_total += n;
  CHECK(tier_total == r.example_count);
  CHECK(r.class_definition_count == 0);
  REQUIRE(r.absence_flags.size() == 1);
  CHECK(r.absence_flags[0].symbol == "class");
  CHECK_FALSE(r.has_violations());
  CHECK(!r.catalog_fingerprint.empty());
  CHECK(!r.symbol_spec_fingerprint.empty());
  CHECK(r.catalog.contains("java"));
}

TEST_CASE("build_report: empty corpus gives an all-zero report") {
  AuditReport r = build_report(make_corpus({}, SourceLanguage::Java),
                               SymbolSpec::table1_default(), ElementaryCatalog::defaults());
  CHECK(r.example_count == 0);
  CHECK(r.loc_stats.total == 0);
  for (const auto& [name, n] : r.occurrence_table.counts) CHECK(n == 0);
  for (const auto& [t, n] : r.tier_histogram) CHECK(n == 0);
  for (const auto& [k, n] : r.call_histogram_total) CHECK(n == 0);
}

TEST_CASE("build_report: concatenation equals entrywise sum") {
  Corpus a = make_corpus({"int f ( int x ) { return x + 1 ; }"}, SourceLanguage::Java, "a");
  Corpus b = make_corpus({"int g ( int k ) { switch ( k ) { } return 0 ; }",
                          "int h ( int x ) { return h ( x - 1 ) ; }"},
                         SourceLanguage::Java, "b");
  Corpus ab = a;
  for (const Example& ex : b.examples) {
    Example copy = ex;
    copy.index = static_cast<long long>(ab.examples.size());
    ab.examples.push_back(copy);
  }
  SymbolSpec spec = SymbolSpec::table1_default();
  ElementaryCatalog cat = ElementaryCatalog::defaults();
  AuditReport ra = build_report(a, spec, cat);
  AuditReport rb = build_report(b, spec, cat);
  AuditReport rab = build_report(ab, spec, cat);

  CHECK(rab.example_count == ra.example_count + rb.example_count);
  CHECK(rab.loc_stats.total == ra.loc_stats.total + rb.loc_stats.total);
  CHECK(rab.class_definition_count == ra.class_definition_count + rb.class_definition_count);
  for (const auto& [name, n] : rab.occurrence_table.counts) {
    CHECK(n == ra.occurrence_table.counts.at(name) + rb.occurrence_table.counts.at(name));
  }
  for (const auto& [t, n] : rab.tier_histogram) {
    CHECK(n == ra.tier_histogram.at(t) + rb.tier_histogram.at(t));
  }
  for (const auto& [k, n] : rab.call_histogram_total) {
    CHECK(n == ra.call_histogram_total.at(k) + rb.call_histogram_total.at(k));
  }
}

TEST_CASE("render: JSON round-trip is lossless") {
  AuditReport r = mini_report();
  AuditReport back = parse_report(render(r, RenderFormat::Json));
  CHECK(back == r);
}

TEST_CASE("render: JSON output is byte-stable") {
  AuditReport r1 = mini_report();
  AuditReport r2 = mini_report();
  CHECK(render(r1, RenderFormat::Json) == render(r2, RenderFormat::Json));
}

TEST_CASE("render: markdown and csv carry the same numbers as JSON") {
  AuditReport r = mini_report();
  const std::string md = render(r, RenderFormat::Markdown);
  const std::string csv = render(r, RenderFormat::Csv);
  for (const auto& [name, n] : r.occurrence_table.counts) {
    if (name == ";" || name == "for" || name == "switch" || name == "int") {
      CHECK(md.find("| " + name + " | " + std::to_string(n) + " |") != std::string::npos);
      CHECK(csv.find("\"count\",\"" + name + "\",\"" + std::to_string(n) + "\"") !=
            std::string::npos);
    }
  }
  CHECK(md.find("| Programs | " + std::to_string(r.example_count) + " |") != std::string::npos);
}

TEST_CASE("render: all-zero report keeps the CSV header and zero rows") {
  AuditReport r = build_report(make_corpus({}, SourceLanguage::Java),
                               SymbolSpec::table1_default(), ElementaryCatalog::defaults());
  const std::string csv = render(r, RenderFormat::Csv);
  CHECK(csv.rfind("\"section\",\"name\",\"value\"\n", 0) == 0);
  CHECK(csv.find("\"count\",\";\",\"0\"") != std::string::npos);
}

TEST_CASE("render: violated absence flags lead the markdown output") {
  Corpus c = make_corpus({"class Foo { }"}, SourceLanguage::Java);
  AuditReport r =
      build_report(c, SymbolSpec::table1_default(), ElementaryCatalog::defaults());
  CHECK(r.has_violations());
  const std::string md = render(r, RenderFormat::Markdown);
  const auto violation_pos = md.find("VIOLATION");
  const auto table_pos = md.find("## Occurrences");
  REQUIRE(violation_pos != std::string::npos);
  REQUIRE(table_pos != std::string::npos);
  CHECK(violation_pos < table_pos);
}

TEST_CASE("diff: self-diff is identically zero") {
  AuditReport r = mini_report();
  DiffReport d = diff(r, r);
  CHECK(d.example_count_delta == 0);
  CHECK(d.loc_total_delta == 0);
  CHECK(d.class_definition_count_delta == 0);
  for (const auto& [name, n] : d.count_deltas) CHECK(n == 0);
  for (const auto& [t, n] : d.tier_deltas) CHECK(n == 0);
  for (const auto& [k, n] : d.call_deltas) CHECK(n == 0);
}

TEST_CASE("diff: zero report on the left reproduces the right") {
  AuditReport zero = build_report(make_corpus({}, SourceLanguage::Java),
                                  SymbolSpec::table1_default(), ElementaryCatalog::defaults());
  AuditReport r = mini_report();
  DiffReport d = diff(zero, r);
  CHECK(d.example_count_delta == r.example_count);
  for (const auto& [name, n] : d.count_deltas) {
    CHECK(n == r.occurrence_table.counts.at(name));
  }
}

TEST_CASE("diff: antisymmetric under swap") {
  Corpus a = make_corpus({"int f ( ) { return 1 ; }"}, SourceLanguage::Java, "a");
  Corpus b = make_corpus({"int g ( int k ) { switch ( k ) { } return 0 ; }", "int h ( ) { }"},
                         SourceLanguage::Java, "b");
  SymbolSpec spec = SymbolSpec::table1_default();
  ElementaryCatalog cat = ElementaryCatalog::defaults();
  AuditReport ra = build_report(a, spec, cat);
  AuditReport rb = build_report(b, spec, cat);
  DiffReport ab = diff(ra, rb);
  DiffReport ba = diff(rb, ra);
  CHECK(ab.example_count_delta == -ba.example_count_delta);
  CHECK(ab.loc_total_delta == -ba.loc_total_delta);
  for (const auto& [name, n] : ab.count_deltas) CHECK(n == -ba.count_deltas.at(name));
  for (const auto& [t, n] : ab.tier_deltas) CHECK(n == -ba.tier_deltas.at(t));
  for (const auto& [k, n] : ab.call_deltas) CHECK(n == -ba.call_deltas.at(k));
}

TEST_CASE("diff: mismatched symbol specs are an error naming both fingerprints") {
  AuditReport r = mini_report();
  AuditReport other = r;
  other.symbol_spec_fingerprint = "0000000000000000";
  try {
    diff(r, other);
    FAIL("expected DiffError");
  } catch (const DiffError& e) {
    const std::string msg = e.what();
    CHECK(msg.find(r.symbol_spec_fingerprint) != std::string::npos);
    CHECK(msg.find("0000000000000000") != std::string::npos);
  }
}

TEST_CASE("parse_report: invalid JSON is a config error") {
  CHECK_THROWS_AS(parse_report("{ nope"), ConfigError);
  CHECK_THROWS_AS(parse_report("{}"), ConfigError);
}

TEST_CASE("render_table and render_tiers formats") {
  AuditReport r = mini_report();
  const std::string tj = render_table(r.occurrence_table, RenderFormat::Json);
  CHECK(tj.find("\"counts\"") != std::string::npos);
  const std::string tc = render_table(r.occurrence_table, RenderFormat::Csv);
  CHECK(tc.rfind("\"section\"", 0) == 0);
  const std::string tm = render_table(r.occurrence_table, RenderFormat::Markdown);
  CHECK(tm.find("| Programs | 4 |") != std::string::npos);

  const std::string hj = render_tiers("x", 4, r.tier_histogram, RenderFormat::Json);
  CHECK(hj.find("\"tiers\"") != std::string::npos);
  const std::string hm = render_tiers("x", 4, r.tier_histogram, RenderFormat::Markdown);
  CHECK(hm.find("| elementary | 1 |") != std::string::npos);
}
