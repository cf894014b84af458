// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/corpus.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace census;
using census::testing::write_temp_file;

TEST_CASE("split_title: separator present takes first occurrence") {
  auto r = split_title(
      "EFFICIENTLY COMPUTE SUMS OF DIAGONALS OF A MATRIX | static void printDiagonalSums", "|");
  REQUIRE(r.title.has_value());
  CHECK(*r.title == "EFFICIENTLY COMPUTE SUMS OF DIAGONALS OF A MATRIX");
  CHECK(r.body == "static void printDiagonalSums");
}

TEST_CASE("split_title: absent separator leaves body unchanged") {
  auto r = split_title("static void f ( ) { }", "|");
  CHECK_FALSE(r.title.has_value());
  CHECK(r.body == "static void f ( ) { }");
}

TEST_CASE("split_title: splits on the first occurrence only") {
  auto r = split_title("a | b | c", "|");
  REQUIRE(r.title.has_value());
  CHECK(*r.title == "a");
  CHECK(r.body == "b | c");
}

TEST_CASE("split_title: empty separator is a config error") {
  CHECK_THROWS_AS(split_title("x", ""), ConfigError);
}

TEST_CASE("detokenize: python markers become newlines and indentation") {
  CHECK(detokenize("def f ( ) : NEW_LINE INDENT return 0", SourceLanguage::Python) ==
        "def f ( ) :\n    return 0");
}

TEST_CASE("detokenize: line with no markers is returned unchanged") {
  const std::string line = "x = 1 + 2";
  CHECK(detokenize(line, SourceLanguage::Python) == line);
  CHECK(detokenize(line, SourceLanguage::Java) == line);
  // double spaces survive the round trip as well
  CHECK(detokenize("a  b", SourceLanguage::Python) == "a  b");
}

TEST_CASE("detokenize: dedent below level zero is a structural error") {
  CHECK_THROWS_AS(detokenize("INDENT DEDENT DEDENT", SourceLanguage::Python), StructureError);
}

TEST_CASE("detokenize: deterministic and idempotent") {
  const std::string raw = "def f ( n ) : NEW_LINE INDENT return n NEW_LINE DEDENT";
  const std::string once = detokenize(raw, SourceLanguage::Python);
  CHECK(once == detokenize(raw, SourceLanguage::Python));
  CHECK(detokenize(once, SourceLanguage::Python) == once);
}

TEST_CASE("ingest_text: counts non-empty lines, skips blanks") {
  Corpus c = ingest_text("int a ;\n\nint b ;\n", SourceLanguage::Java, {}, "synthetic");
  CHECK(c.examples.size() == 2);
  CHECK(c.skipped_blank_lines == 1);
  CHECK(c.physical_lines == 3);
  CHECK(c.examples[0].index == 0);
  CHECK(c.examples[1].index == 1);
  CHECK(c.examples[1].raw == "int b ;");
}

TEST_CASE("ingest_text: empty input yields an empty corpus") {
  Corpus c = ingest_text("", SourceLanguage::Java, {}, "empty");
  CHECK(c.examples.empty());
  CHECK(c.physical_lines == 0);
}

TEST_CASE("ingest_text: title separator populates titles") {
  IngestFormat fmt;
  fmt.title_separator = "|";
  Corpus c = ingest_text("SUM | int s ;\nno separator here ;\n", SourceLanguage::Java, fmt, "t");
  REQUIRE(c.examples.size() == 2);
  REQUIRE(c.examples[0].title.has_value());
  CHECK(*c.examples[0].title == "SUM");
  CHECK(c.examples[0].raw == "int s ;");
  CHECK_FALSE(c.examples[1].title.has_value());
}

TEST_CASE("ingest_text: empty body after title split is skipped with a diagnostic") {
  IngestFormat fmt;
  fmt.title_separator = "|";
  Corpus c = ingest_text("ONLY TITLE |\nx ;\n", SourceLanguage::Java, fmt, "t");
  CHECK(c.examples.size() == 1);
  REQUIRE(c.diagnostics.size() == 1);
  CHECK(c.diagnostics[0].find("line 1") != std::string::npos);
  // line bookkeeping still balances
  CHECK(static_cast<long long>(c.examples.size()) + c.skipped_blank_lines == c.physical_lines);
}

TEST_CASE("ingest_text: plain source is one example") {
  IngestFormat fmt;
  fmt.layout = IngestLayout::PlainSource;
  const std::string src = "int f ( ) {\n  return 0 ;\n}\n";
  Corpus c = ingest_text(src, SourceLanguage::Java, fmt, "plain");
  REQUIRE(c.examples.size() == 1);
  CHECK(c.examples[0].source == src);
  CHECK(c.examples[0].raw == src);

  Corpus empty = ingest_text(" \n \n", SourceLanguage::Java, fmt, "blank");
  CHECK(empty.examples.empty());
}

TEST_CASE("ingest_text: structural marker error keeps the example with a diagnostic") {
  Corpus c = ingest_text("x = 1 NEW_LINE DEDENT\n", SourceLanguage::Python, {}, "bad");
  REQUIRE(c.examples.size() == 1);
  REQUIRE(c.diagnostics.size() == 1);
  CHECK(c.diagnostics[0].find("example 0") != std::string::npos);
  CHECK(c.diagnostics[0].find("dedent below indentation level zero") != std::string::npos);
}

TEST_CASE("ingest_text: detokenize(raw) equals source for every ingested example") {
  IngestFormat fmt;
  fmt.title_separator = "|";
  Corpus c = ingest_corpus(census::testing::fixture_path("mini_python.tok"),
                           SourceLanguage::Python, fmt);
  REQUIRE(c.examples.size() == 2);
  for (const Example& ex : c.examples) {
    CHECK(detokenize(ex.raw, ex.language, fmt) == ex.source);
  }
}

TEST_CASE("ingest_corpus: ingesting the same file twice is deterministic") {
  IngestFormat fmt;
  fmt.title_separator = "|";
  const std::string path = census::testing::fixture_path("mini_java.tok");
  Corpus a = ingest_corpus(path, SourceLanguage::Java, fmt);
  Corpus b = ingest_corpus(path, SourceLanguage::Java, fmt);
  CHECK(a == b);
  CHECK(a.examples.size() == 4);
  CHECK(a.skipped_blank_lines == 1);
}

TEST_CASE("ingest_corpus: missing file is an ingest error naming the path") {
  try {
    ingest_corpus("/nonexistent/corpus.tok", SourceLanguage::Java);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/corpus.tok") != std::string::npos);
  }
}

TEST_CASE("ingest_corpus: invalid UTF-8 is an ingest error naming the line") {
  std::string bytes = "int a ;\nint \xff b ;\n";
  const std::string path = write_temp_file(bytes, ".tok");
  try {
    ingest_corpus(path, SourceLanguage::Java);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("property: examples plus skipped blanks equals physical lines") {
  std::mt19937 rng(20260810);
  for (int iter = 0; iter < 50; ++iter) {
    std::string text;
    long long lines = 0;
    const int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      if (rng() % 3 == 0) text += "   ";
      else text += "int x" + std::to_string(i) + " ;";
      text += '\n';
      ++lines;
    }
    Corpus c = ingest_text(text, SourceLanguage::Java, {}, "gen");
    CHECK(c.physical_lines == lines);
    CHECK(static_cast<long long>(c.examples.size()) + c.skipped_blank_lines == lines);
  }
}
