// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "census/corpus.hpp"
#include "census/lexer.hpp"

#include "json.hpp"

namespace census {

enum class CallKind { SelfRecursive, UserCross, Library, Unresolved };
enum class Tier {
  Elementary,
  ElementaryPlusMath,
  ElementaryPlusRecursion,
  ElementaryPlusMathAndRecursion,
  Sophisticated,
};
enum class FeatureTag {
  ControlExtra,
  Bitwise,
  BuiltinMethods,
  WrapperClassStatics,
  LibraryGenerics,
  Casting,
  ExceptionHandling,
  ClassDefinition,
  Other,
};

std::string_view call_kind_name(CallKind k);
std::string_view tier_name(Tier t);
std::string_view feature_tag_name(FeatureTag t);
int tier_rank(Tier t);  // Elementary = 0 ... Sophisticated = 4

using CallHistogram = std::map<CallKind, long long>;
using TierHistogram = std::map<Tier, long long>;

struct FunctionDef {
  std::string name;
  std::size_t start_token = 0;  // index of the name token
  std::size_t end_token = 0;    // index of the last body token
  int parameter_count = 0;

  bool operator==(const FunctionDef&) const = default;
};

struct ExtractResult {
  std::vector<FunctionDef> defs;
  std::vector<std::string> diagnostics;
};

struct CallSite {
  std::string callee;
  CallKind kind = CallKind::Unresolved;
  int line = 1;
};

// Per-language word and name lists that drive the detectors. Everything
// here is configuration: the shipped defaults encode the audit's elementary
// feature set, and users auditing other corpora are expected to edit them.
struct LanguageCatalog {
  std::set<std::string> elementary_keywords;  // keywords that never flag sophistication
  std::set<std::string> control_extra;        // break/continue/case/switch tier
  std::set<std::string> exception_keywords;
  std::set<std::string> class_keywords;
  std::set<std::string> bitwise_operators;
  std::set<std::string> builtin_methods;      // sort/equals/clone style callees
  std::set<std::string> wrapper_classes;      // Integer, Character, Arrays, ...
  std::set<std::string> collection_classes;   // Vector, HashMap, ... (generics detector)
  std::set<std::string> math_qualifiers;      // Math (java), math (python)
  std::set<std::string> math_functions;       // unqualified callees that imply math use
  std::set<std::string> library_callees;      // unqualified callees resolved as library
  std::set<std::string> cast_type_keywords;
  std::set<std::string> stream_identifiers;   // cout/cin: exempts << >> from bitwise

  bool operator==(const LanguageCatalog&) const = default;
};

struct ElementaryCatalog {
  LanguageCatalog java;
  LanguageCatalog cpp;
  LanguageCatalog python;

  static ElementaryCatalog defaults();
  static ElementaryCatalog load(const std::string& path);  // JSON, merged over defaults

  const LanguageCatalog& for_language(SourceLanguage lang) const;
  nlohmann::json to_json() const;
  static ElementaryCatalog from_json(const nlohmann::json& j);
  std::string fingerprint() const;

  bool operator==(const ElementaryCatalog&) const = default;
};

const ElementaryCatalog& default_catalog();

struct FeatureProfile {
  long long example_index = 0;
  bool elementary_only = false;
  bool uses_math_library = false;
  bool uses_recursion = false;
  std::set<FeatureTag> sophisticated_features;
  CallHistogram call_histogram;
  Tier tier = Tier::Elementary;
  std::vector<std::string> notes;

  bool operator==(const FeatureProfile&) const = default;
};

struct ClassSite {
  long long example_index = 0;
  int line = 1;

  bool operator==(const ClassSite&) const = default;
};

struct ClassScan {
  long long count = 0;
  std::vector<ClassSite> sites;
};

struct ExampleAnalysis {
  FeatureProfile profile;
  std::vector<CallSite> call_sites;
  std::vector<int> class_definition_lines;
  std::vector<std::string> diagnostics;
};

// Top-level function/method definitions found by header pattern matching.
ExtractResult extract_functions(const Example& example);

std::vector<CallSite> classify_call_sites(const Example& example,
                                          const std::vector<FunctionDef>& defs,
                                          const ElementaryCatalog& catalog = default_catalog());

CallHistogram classify_calls(const Example& example, const std::vector<FunctionDef>& defs,
                             const ElementaryCatalog& catalog = default_catalog());

FeatureProfile detect_features(const Example& example,
                               const ElementaryCatalog& catalog = default_catalog());

ExampleAnalysis analyze_example(const Example& example,
                                const ElementaryCatalog& catalog = default_catalog());

// Token-aware census of the `class` keyword (literals/comments excluded).
ClassScan detect_class_definitions(const Corpus& corpus);

TierHistogram tier_histogram(const Corpus& corpus,
                             const ElementaryCatalog& catalog = default_catalog(),
                             std::optional<long long> first_n = std::nullopt, int jobs = 1);

}  // namespace census
