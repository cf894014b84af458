// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "census/util.hpp"

namespace census {

namespace {

bool word_like(std::string_view name) {
  auto ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  return !name.empty() && ident(name.front()) && ident(name.back());
}

std::string csv_field(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  nlohmann::json j = v;
  return j.dump();
}

std::string format_mean_1dp(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

nlohmann::json tiers_to_json(const TierHistogram& hist) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [tier, n] : hist) j[std::string(tier_name(tier))] = n;
  return j;
}

TierHistogram tiers_from_json(const nlohmann::json& j) {
  TierHistogram hist;
  for (Tier t : {Tier::Elementary, Tier::ElementaryPlusMath, Tier::ElementaryPlusRecursion,
                 Tier::ElementaryPlusMathAndRecursion, Tier::Sophisticated}) {
    hist[t] = j.value(std::string(tier_name(t)), 0LL);
  }
  return hist;
}

nlohmann::json calls_to_json(const CallHistogram& hist) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [kind, n] : hist) j[std::string(call_kind_name(kind))] = n;
  return j;
}

CallHistogram calls_from_json(const nlohmann::json& j) {
  CallHistogram hist;
  for (CallKind k :
       {CallKind::SelfRecursive, CallKind::UserCross, CallKind::Library, CallKind::Unresolved}) {
    hist[k] = j.value(std::string(call_kind_name(k)), 0LL);
  }
  return hist;
}

nlohmann::json table_to_json(const OccurrenceTable& t) {
  return nlohmann::json{{"corpus_id", t.corpus_id},
                        {"counts", t.counts},
                        {"order", t.order},
                        {"example_count", t.example_count},
                        {"diagnostics", t.diagnostics}};
}

OccurrenceTable table_from_json(const nlohmann::json& j) {
  OccurrenceTable t;
  t.corpus_id = j.at("corpus_id").get<std::string>();
  t.counts = j.at("counts").get<std::map<std::string, long long>>();
  t.order = j.at("order").get<std::vector<std::string>>();
  t.example_count = j.at("example_count").get<long long>();
  t.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return t;
}

std::vector<std::string> ordered_names(const OccurrenceTable& t) {
  if (!t.order.empty()) return t.order;
  std::vector<std::string> names;
  names.reserve(t.counts.size());
  for (const auto& [name, n] : t.counts) names.push_back(name);
  return names;
}

nlohmann::json report_to_json(const AuditReport& r) {
  nlohmann::json sites = nlohmann::json::array();
  for (const ClassSite& s : r.class_definition_sites) {
    sites.push_back({{"example_index", s.example_index}, {"line", s.line}});
  }
  nlohmann::json cross = nlohmann::json::array();
  for (const UserCrossSite& s : r.user_cross_sites) {
    cross.push_back({{"example_index", s.example_index}, {"line", s.line}, {"callee", s.callee}});
  }
  nlohmann::json flags = nlohmann::json::array();
  for (const AbsenceFlag& f : r.absence_flags) {
    flags.push_back({{"symbol", f.symbol},
                     {"expected_absent", f.expected_absent},
                     {"observed", f.observed}});
  }
  return nlohmann::json{
      {"corpus_id", r.corpus_id},
      {"example_count", r.example_count},
      {"occurrence_table", table_to_json(r.occurrence_table)},
      {"loc_stats",
       {{"per_example", r.loc_stats.per_example},
        {"total", r.loc_stats.total},
        {"mean", r.loc_stats.mean}}},
      {"tier_histogram", tiers_to_json(r.tier_histogram)},
      {"call_histogram", calls_to_json(r.call_histogram_total)},
      {"class_definition_count", r.class_definition_count},
      {"class_definition_sites", sites},
      {"user_cross_sites", cross},
      {"absence_flags", flags},
      {"catalog_fingerprint", r.catalog_fingerprint},
      {"symbol_spec_fingerprint", r.symbol_spec_fingerprint},
      {"catalog", r.catalog},
      {"diagnostics", r.diagnostics},
  };
}

AuditReport report_from_json(const nlohmann::json& j) {
  AuditReport r;
  r.corpus_id = j.at("corpus_id").get<std::string>();
  r.example_count = j.at("example_count").get<long long>();
  r.occurrence_table = table_from_json(j.at("occurrence_table"));
  const auto& loc = j.at("loc_stats");
  r.loc_stats.per_example = loc.at("per_example").get<std::vector<long long>>();
  r.loc_stats.total = loc.at("total").get<long long>();
  r.loc_stats.mean = loc.at("mean").get<double>();
  r.tier_histogram = tiers_from_json(j.at("tier_histogram"));
  r.call_histogram_total = calls_from_json(j.at("call_histogram"));
  r.class_definition_count = j.at("class_definition_count").get<long long>();
  for (const auto& s : j.at("class_definition_sites")) {
    r.class_definition_sites.push_back(
        {s.at("example_index").get<long long>(), s.at("line").get<int>()});
  }
  for (const auto& s : j.at("user_cross_sites")) {
    r.user_cross_sites.push_back({s.at("example_index").get<long long>(),
                                  s.at("line").get<int>(),
                                  s.at("callee").get<std::string>()});
  }
  for (const auto& f : j.at("absence_flags")) {
    r.absence_flags.push_back({f.at("symbol").get<std::string>(),
                               f.at("expected_absent").get<bool>(),
                               f.at("observed").get<long long>()});
  }
  r.catalog_fingerprint = j.at("catalog_fingerprint").get<std::string>();
  r.symbol_spec_fingerprint = j.at("symbol_spec_fingerprint").get<std::string>();
  r.catalog = j.at("catalog");
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return r;
}

// Occurrence table in the published two-column shape: punctuation symbols on
// the left, reserved words / identifiers on the right, Programs row first.
std::string table_markdown(const OccurrenceTable& t) {
  std::vector<std::pair<std::string, long long>> sym{{"Programs", t.example_count}};
  std::vector<std::pair<std::string, long long>> word;
  for (const std::string& name : ordered_names(t)) {
    (word_like(name) ? word : sym).emplace_back(name, t.counts.at(name));
  }
  std::ostringstream os;
  os << "| Symbol | Occurrences |  | Reserved word | Occurrences |\n"
     << "|---|---|---|---|---|\n";
  const std::size_t rows = std::max(sym.size(), word.size());
  for (std::size_t i = 0; i < rows; ++i) {
    os << "| " << (i < sym.size() ? sym[i].first : "") << " | "
       << (i < sym.size() ? std::to_string(sym[i].second) : "") << " |  | "
       << (i < word.size() ? word[i].first : "") << " | "
       << (i < word.size() ? std::to_string(word[i].second) : "") << " |\n";
  }
  return os.str();
}

std::string table_csv(const OccurrenceTable& t) {
  std::ostringstream os;
  os << csv_field("section") << ',' << csv_field("name") << ',' << csv_field("value") << '\n';
  os << csv_field("meta") << ',' << csv_field("corpus_id") << ',' << csv_field(t.corpus_id)
     << '\n';
  os << csv_field("meta") << ',' << csv_field("example_count") << ','
     << csv_field(std::to_string(t.example_count)) << '\n';
  for (const std::string& name : ordered_names(t)) {
    os << csv_field("count") << ',' << csv_field(name) << ','
       << csv_field(std::to_string(t.counts.at(name))) << '\n';
  }
  return os.str();
}

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "json") return RenderFormat::Json;
  if (name == "csv") return RenderFormat::Csv;
  if (name == "markdown" || name == "md") return RenderFormat::Markdown;
  return std::nullopt;
}

bool AuditReport::has_violations() const {
  return std::any_of(absence_flags.begin(), absence_flags.end(),
                     [](const AbsenceFlag& f) { return f.violated(); });
}

AuditReport build_report(const Corpus& corpus, const SymbolSpec& spec,
                         const ElementaryCatalog& catalog, int jobs) {
  AuditReport r;
  r.corpus_id = corpus.origin;
  r.example_count = static_cast<long long>(corpus.examples.size());
  r.occurrence_table = count_symbols(corpus, spec, jobs);
  r.loc_stats = corpus_loc_stats(corpus, jobs);

  const std::size_t n = corpus.examples.size();
  std::vector<ExampleAnalysis> analyses(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    analyses[i] = analyze_example(corpus.examples[i], catalog);
  });

  r.tier_histogram = {{Tier::Elementary, 0},
                      {Tier::ElementaryPlusMath, 0},
                      {Tier::ElementaryPlusRecursion, 0},
                      {Tier::ElementaryPlusMathAndRecursion, 0},
                      {Tier::Sophisticated, 0}};
  r.call_histogram_total = {{CallKind::SelfRecursive, 0},
                            {CallKind::UserCross, 0},
                            {CallKind::Library, 0},
                            {CallKind::Unresolved, 0}};
  for (std::size_t i = 0; i < n; ++i) {
    const ExampleAnalysis& a = analyses[i];
    ++r.tier_histogram[a.profile.tier];
    for (const auto& [kind, cnt] : a.profile.call_histogram) r.call_histogram_total[kind] += cnt;
    for (int ln : a.class_definition_lines) {
      ++r.class_definition_count;
      r.class_definition_sites.push_back({corpus.examples[i].index, ln});
    }
    for (const CallSite& s : a.call_sites) {
      if (s.kind == CallKind::UserCross) {
        r.user_cross_sites.push_back({corpus.examples[i].index, s.line, s.callee});
      }
    }
    for (const std::string& d : a.diagnostics) {
      r.diagnostics.push_back("example " + std::to_string(corpus.examples[i].index) + ": " + d);
    }
  }
  r.diagnostics.insert(r.diagnostics.end(), corpus.diagnostics.begin(), corpus.diagnostics.end());

  r.absence_flags.push_back({"class", true, r.class_definition_count});
  r.catalog_fingerprint = catalog.fingerprint();
  r.symbol_spec_fingerprint = spec.fingerprint();
  r.catalog = catalog.to_json();
  return r;
}

std::string render(const AuditReport& r, RenderFormat format) {
  if (format == RenderFormat::Json) return report_to_json(r).dump(2) + "\n";

  if (format == RenderFormat::Csv) {
    std::ostringstream os;
    os << csv_field("section") << ',' << csv_field("name") << ',' << csv_field("value") << '\n';
    auto row = [&](std::string_view sec, std::string_view name, const std::string& value) {
      os << csv_field(sec) << ',' << csv_field(name) << ',' << csv_field(value) << '\n';
    };
    row("meta", "corpus_id", r.corpus_id);
    row("meta", "example_count", std::to_string(r.example_count));
    for (const std::string& name : ordered_names(r.occurrence_table)) {
      row("count", name, std::to_string(r.occurrence_table.counts.at(name)));
    }
    row("loc", "total", std::to_string(r.loc_stats.total));
    row("loc", "mean", format_double(r.loc_stats.mean));
    for (const auto& [tier, n] : r.tier_histogram) {
      row("tier", tier_name(tier), std::to_string(n));
    }
    for (const auto& [kind, n] : r.call_histogram_total) {
      row("call", call_kind_name(kind), std::to_string(n));
    }
    row("class", "count", std::to_string(r.class_definition_count));
    for (const AbsenceFlag& f : r.absence_flags) {
      row("absence", f.symbol, std::to_string(f.observed));
    }
    row("meta", "catalog_fingerprint", r.catalog_fingerprint);
    row("meta", "symbol_spec_fingerprint", r.symbol_spec_fingerprint);
    return os.str();
  }

  std::ostringstream os;
  os << "# Corpus audit: " << r.corpus_id << "\n\n";
  for (const AbsenceFlag& f : r.absence_flags) {
    if (f.violated()) {
      os << "**VIOLATION: `" << f.symbol << "` expected absent but observed "
         << f.observed << " time(s).**\n\n";
    }
  }
  os << "- Examples: " << r.example_count << "\n";
  os << "- LOC proxy: total " << r.loc_stats.total << ", mean "
     << format_mean_1dp(r.loc_stats.mean) << "\n";
  os << "- Class definitions: " << r.class_definition_count << "\n";
  os << "- Diagnostics: " << r.diagnostics.size() << "\n\n";
  os << "## Occurrences\n\n" << table_markdown(r.occurrence_table) << "\n";
  os << "## Feature tiers\n\n| Tier | Examples |\n|---|---|\n";
  for (const auto& [tier, n] : r.tier_histogram) {
    os << "| " << tier_name(tier) << " | " << n << " |\n";
  }
  os << "\n## Call sites\n\n| Kind | Count |\n|---|---|\n";
  for (const auto& [kind, n] : r.call_histogram_total) {
    os << "| " << call_kind_name(kind) << " | " << n << " |\n";
  }
  if (!r.user_cross_sites.empty()) {
    os << "\n## User-to-user calls (review)\n\n| Example | Line | Callee |\n|---|---|---|\n";
    for (const UserCrossSite& s : r.user_cross_sites) {
      os << "| " << s.example_index << " | " << s.line << " | " << s.callee << " |\n";
    }
  }
  os << "\nCatalog fingerprint: `" << r.catalog_fingerprint << "`  \n";
  os << "Symbol spec fingerprint: `" << r.symbol_spec_fingerprint << "`\n";
  return os.str();
}

AuditReport parse_report(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    return report_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid report JSON: ") + e.what());
  }
}

DiffReport diff(const AuditReport& left, const AuditReport& right) {
  if (left.symbol_spec_fingerprint != right.symbol_spec_fingerprint) {
    throw DiffError("symbol spec fingerprints differ: left=" + left.symbol_spec_fingerprint +
                    " right=" + right.symbol_spec_fingerprint);
  }
  DiffReport d;
  d.left_id = left.corpus_id;
  d.right_id = right.corpus_id;
  d.example_count_delta = right.example_count - left.example_count;
  for (const auto& [name, n] : left.occurrence_table.counts) d.count_deltas[name] -= n;
  for (const auto& [name, n] : right.occurrence_table.counts) d.count_deltas[name] += n;
  d.loc_total_delta = right.loc_stats.total - left.loc_stats.total;
  d.loc_mean_delta = right.loc_stats.mean - left.loc_stats.mean;
  for (const auto& [tier, n] : left.tier_histogram) d.tier_deltas[tier] -= n;
  for (const auto& [tier, n] : right.tier_histogram) d.tier_deltas[tier] += n;
  for (const auto& [kind, n] : left.call_histogram_total) d.call_deltas[kind] -= n;
  for (const auto& [kind, n] : right.call_histogram_total) d.call_deltas[kind] += n;
  d.class_definition_count_delta = right.class_definition_count - left.class_definition_count;
  return d;
}

std::string render(const DiffReport& d, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json j{
        {"left_id", d.left_id},
        {"right_id", d.right_id},
        {"example_count_delta", d.example_count_delta},
        {"count_deltas", d.count_deltas},
        {"loc_total_delta", d.loc_total_delta},
        {"loc_mean_delta", d.loc_mean_delta},
        {"tier_deltas", tiers_to_json(d.tier_deltas)},
        {"call_deltas", calls_to_json(d.call_deltas)},
        {"class_definition_count_delta", d.class_definition_count_delta},
    };
    return j.dump(2) + "\n";
  }
  if (format == RenderFormat::Csv) {
    std::ostringstream os;
    os << csv_field("section") << ',' << csv_field("name") << ',' << csv_field("delta") << '\n';
    os << csv_field("meta") << ',' << csv_field("example_count") << ','
       << csv_field(std::to_string(d.example_count_delta)) << '\n';
    for (const auto& [name, n] : d.count_deltas) {
      os << csv_field("count") << ',' << csv_field(name) << ',' << csv_field(std::to_string(n))
         << '\n';
    }
    os << csv_field("loc") << ',' << csv_field("total") << ','
       << csv_field(std::to_string(d.loc_total_delta)) << '\n';
    os << csv_field("loc") << ',' << csv_field("mean") << ','
       << csv_field(format_double(d.loc_mean_delta)) << '\n';
    for (const auto& [tier, n] : d.tier_deltas) {
      os << csv_field("tier") << ',' << csv_field(tier_name(tier)) << ','
         << csv_field(std::to_string(n)) << '\n';
    }
    for (const auto& [kind, n] : d.call_deltas) {
      os << csv_field("call") << ',' << csv_field(call_kind_name(kind)) << ','
         << csv_field(std::to_string(n)) << '\n';
    }
    os << csv_field("class") << ',' << csv_field("count") << ','
       << csv_field(std::to_string(d.class_definition_count_delta)) << '\n';
    return os.str();
  }
  std::ostringstream os;
  os << "# Diff: " << d.left_id << " -> " << d.right_id << "\n\n";
  os << "- Examples: " << d.example_count_delta << "\n";
  os << "- LOC total: " << d.loc_total_delta << "\n";
  os << "- Class definitions: " << d.class_definition_count_delta << "\n\n";
  os << "| Metric | Delta |\n|---|---|\n";
  for (const auto& [name, n] : d.count_deltas) os << "| " << name << " | " << n << " |\n";
  for (const auto& [tier, n] : d.tier_deltas) {
    os << "| tier:" << tier_name(tier) << " | " << n << " |\n";
  }
  for (const auto& [kind, n] : d.call_deltas) {
    os << "| call:" << call_kind_name(kind) << " | " << n << " |\n";
  }
  return os.str();
}

std::string render_table(const OccurrenceTable& t, RenderFormat format) {
  if (format == RenderFormat::Json) return table_to_json(t).dump(2) + "\n";
  if (format == RenderFormat::Csv) return table_csv(t);
  std::ostringstream os;
  os << "# Occurrences: " << t.corpus_id << "\n\n" << table_markdown(t);
  return os.str();
}

std::string render_tiers(const std::string& corpus_id, long long considered,
                         const TierHistogram& hist, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json j{{"corpus_id", corpus_id},
                     {"examples_considered", considered},
                     {"tiers", tiers_to_json(hist)}};
    return j.dump(2) + "\n";
  }
  if (format == RenderFormat::Csv) {
    std::ostringstream os;
    os << csv_field("tier") << ',' << csv_field("examples") << '\n';
    for (const auto& [tier, n] : hist) {
      os << csv_field(tier_name(tier)) << ',' << csv_field(std::to_string(n)) << '\n';
    }
    return os.str();
  }
  std::ostringstream os;
  os << "# Feature tiers: " << corpus_id << " (" << considered << " examples)\n\n"
     << "| Tier | Examples |\n|---|---|\n";
  for (const auto& [tier, n] : hist) os << "| " << tier_name(tier) << " | " << n << " |\n";
  return os.str();
}

}  // namespace census
