// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include <string>
#include <vector>

#include "census/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return census::cli::run(args);
}
