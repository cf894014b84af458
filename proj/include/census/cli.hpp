// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <string>
#include <vector>

namespace census::cli {

// Exit codes: 0 success, 1 usage error, 2 I/O or ingest error, 3 absence
// violation under --strict. `args` is argv-style including the program name.
int run(const std::vector<std::string>& args);

}  // namespace census::cli
