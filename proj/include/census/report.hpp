// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <string>
#include <vector>

#include "census/corpus.hpp"
#include "census/features.hpp"
#include "census/metrics.hpp"

namespace census {

enum class RenderFormat { Json, Csv, Markdown };
std::optional<RenderFormat> parse_render_format(std::string_view name);

struct AbsenceFlag {
  std::string symbol;
  bool expected_absent = true;
  long long observed = 0;

  bool violated() const { return expected_absent && observed > 0; }
  bool operator==(const AbsenceFlag&) const = default;
};

struct UserCrossSite {
  long long example_index = 0;
  int line = 1;
  std::string callee;

  bool operator==(const UserCrossSite&) const = default;
};

struct AuditReport {
  std::string corpus_id;
  long long example_count = 0;
  OccurrenceTable occurrence_table;
  LocStats loc_stats;
  TierHistogram tier_histogram;
  CallHistogram call_histogram_total;
  long long class_definition_count = 0;
  std::vector<ClassSite> class_definition_sites;
  std::vector<UserCrossSite> user_cross_sites;
  std::vector<AbsenceFlag> absence_flags;
  std::string catalog_fingerprint;
  std::string symbol_spec_fingerprint;
  nlohmann::json catalog;  // effective catalog, embedded for auditability
  std::vector<std::string> diagnostics;

  bool has_violations() const;
  bool operator==(const AuditReport&) const = default;
};

AuditReport build_report(const Corpus& corpus, const SymbolSpec& spec,
                         const ElementaryCatalog& catalog, int jobs = 1);

// JSON is the canonical lossless form: keys sorted, no locale formatting.
std::string render(const AuditReport& report, RenderFormat format);
AuditReport parse_report(const std::string& json_text);

struct DiffReport {
  std::string left_id;
  std::string right_id;
  long long example_count_delta = 0;
  std::map<std::string, long long> count_deltas;
  long long loc_total_delta = 0;
  double loc_mean_delta = 0.0;
  TierHistogram tier_deltas;
  CallHistogram call_deltas;
  long long class_definition_count_delta = 0;

  bool operator==(const DiffReport&) const = default;
};

// Entrywise right - left. Both reports must share a symbol-spec fingerprint.
DiffReport diff(const AuditReport& left, const AuditReport& right);
std::string render(const DiffReport& d, RenderFormat format);

// Standalone renders for the count/classify pipelines.
std::string render_table(const OccurrenceTable& table, RenderFormat format);
std::string render_tiers(const std::string& corpus_id, long long considered,
                         const TierHistogram& hist, RenderFormat format);

}  // namespace census
