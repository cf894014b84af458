// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace census {

// 64-bit FNV-1a. Used for config fingerprints, not security.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data);

std::string trim(std::string_view s);
bool is_blank(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Byte offset of the first structurally invalid UTF-8 sequence, if any.
std::optional<std::size_t> utf8_invalid_offset(std::string_view s);

// Runs fn(i) for every i in [0, n) across at most `jobs` threads.
// Callers write results into per-index slots; any later merge must be done
// in index order so the outcome is independent of the schedule.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace census
