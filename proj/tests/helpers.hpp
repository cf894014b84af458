// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "census/corpus.hpp"

namespace census::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CENSUS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes content to a fresh file under the system temp dir and returns its
// path. Files are tiny; cleanup is left to the OS temp policy.
inline std::string write_temp_file(const std::string& content, const std::string& suffix = ".txt") {
  static std::atomic<unsigned> counter{0};
  const auto dir = std::filesystem::temp_directory_path();
  const auto path =
      dir / ("codecensus_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)) + suffix);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

inline Example make_example(const std::string& raw, SourceLanguage lang, long long index = 0) {
  Example ex;
  ex.index = index;
  ex.raw = raw;
  ex.source = detokenize(raw, lang);
  ex.language = lang;
  return ex;
}

inline Corpus make_corpus(const std::vector<std::string>& raws, SourceLanguage lang,
                          const std::string& origin = "synthetic") {
  Corpus corpus;
  corpus.language = lang;
  corpus.origin = origin;
  corpus.physical_lines = static_cast<long long>(raws.size());
  for (const std::string& raw : raws) {
    corpus.examples.push_back(
        make_example(raw, lang, static_cast<long long>(corpus.examples.size())));
  }
  return corpus;
}

}  // namespace census::testing
