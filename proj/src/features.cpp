// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 codecensus contributors
#include "census/features.hpp"

#include <algorithm>
#include <fstream>

#include "census/util.hpp"

namespace census {

std::string_view call_kind_name(CallKind k) {
  switch (k) {
    case CallKind::SelfRecursive: return "self_recursive";
    case CallKind::UserCross: return "user_cross";
    case CallKind::Library: return "library";
    case CallKind::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::Elementary: return "elementary";
    case Tier::ElementaryPlusMath: return "elementary_plus_math";
    case Tier::ElementaryPlusRecursion: return "elementary_plus_recursion";
    case Tier::ElementaryPlusMathAndRecursion: return "elementary_plus_math_and_recursion";
    case Tier::Sophisticated: return "sophisticated";
  }
  return "elementary";
}

std::string_view feature_tag_name(FeatureTag t) {
  switch (t) {
    case FeatureTag::ControlExtra: return "control_extra";
    case FeatureTag::Bitwise: return "bitwise";
    case FeatureTag::BuiltinMethods: return "builtin_methods";
    case FeatureTag::WrapperClassStatics: return "wrapper_class_statics";
    case FeatureTag::LibraryGenerics: return "library_generics";
    case FeatureTag::Casting: return "casting";
    case FeatureTag::ExceptionHandling: return "exception_handling";
    case FeatureTag::ClassDefinition: return "class_definition";
    case FeatureTag::Other: return "other";
  }
  return "other";
}

int tier_rank(Tier t) { return static_cast<int>(t); }

namespace {

std::set<std::string> strs(std::initializer_list<const char*> xs) {
  std::set<std::string> out;
  for (const char* x : xs) out.insert(x);
  return out;
}

LanguageCatalog java_defaults() {
  LanguageCatalog c;
  c.elementary_keywords = strs({"if", "else", "while", "for", "return", "int", "float", "double",
                                "boolean", "char", "void", "static", "new", "final", "public",
                                "private", "protected"});
  c.control_extra = strs({"break", "continue", "case", "switch", "default", "do", "goto", "try",
                          "catch"});
  c.exception_keywords = strs({"try", "catch", "finally", "throw", "throws"});
  c.class_keywords = strs({"class", "interface", "enum"});
  c.bitwise_operators =
      strs({"&", "|", "^", "~", "<<", ">>", ">>>", "&=", "|=", "^=", "<<=", ">>=", ">>>="});
  c.builtin_methods = strs({"sort", "equals", "clone"});
  c.wrapper_classes = strs({"Integer", "Character", "Arrays", "Long", "Double", "Float", "Boolean",
                            "Byte", "Short"});
  c.collection_classes =
      strs({"Vector", "HashMap", "Stack", "List", "ArrayList", "LinkedList", "LinkedHashSet",
            "HashSet", "TreeMap", "TreeSet", "Map", "Set", "Queue", "Deque", "ArrayDeque",
            "PriorityQueue", "StringBuffer", "StringBuilder", "Iterator", "Collections"});
  c.math_qualifiers = strs({"Math"});
  c.math_functions = {};
  c.library_callees = {};
  c.cast_type_keywords =
      strs({"int", "long", "short", "byte", "float", "double", "char", "boolean"});
  c.stream_identifiers = {};
  return c;
}

LanguageCatalog cpp_defaults() {
  LanguageCatalog c;
  c.elementary_keywords =
      strs({"if", "else", "while", "for", "return", "int", "float", "double", "bool", "char",
            "void", "static", "new", "const", "true", "false", "using", "namespace", "inline"});
  c.control_extra = strs({"break", "continue", "case", "switch", "default", "do", "goto", "try",
                          "catch"});
  c.exception_keywords = strs({"try", "catch", "throw"});
  c.class_keywords = strs({"class", "struct", "union", "enum"});
  c.bitwise_operators = strs({"&", "|", "^", "~", "<<", ">>", "&=", "|=", "^=", "<<=", ">>="});
  c.builtin_methods = strs({"sort", "equals", "clone"});
  c.wrapper_classes = {};
  c.collection_classes =
      strs({"vector", "map", "set", "stack", "queue", "deque", "pair", "tuple", "list", "multiset",
            "multimap", "unordered_map", "unordered_set", "priority_queue"});
  c.math_qualifiers = {};
  c.math_functions = strs({"sqrt", "pow", "fabs", "abs", "ceil", "floor", "log", "log2", "log10",
                           "exp", "hypot", "cbrt", "fmod", "round", "trunc"});
  c.library_callees =
      strs({"sort", "max", "min", "abs", "swap", "sqrt", "pow", "printf", "scanf", "memset",
            "strlen", "strcmp", "strcpy", "puts", "getline", "to_string", "stoi", "make_pair",
            "rand", "srand", "qsort", "fabs", "floor", "ceil", "log", "log2", "log10", "exp",
            "isdigit", "isalpha", "tolower", "toupper", "accumulate", "reverse", "lower_bound",
            "upper_bound", "next_permutation", "gcd", "__gcd"});
  c.cast_type_keywords = strs({"int", "long", "short", "float", "double", "char", "bool",
                               "unsigned", "signed"});
  c.stream_identifiers = strs({"cout", "cin", "cerr", "clog", "endl"});
  return c;
}

LanguageCatalog python_defaults() {
  LanguageCatalog c;
  c.elementary_keywords = strs({"if", "elif", "else", "while", "for", "return", "def", "in", "and",
                                "or", "not", "pass", "None", "True", "False", "import", "from"});
  c.control_extra = strs({"break", "continue", "try", "except"});
  c.exception_keywords = strs({"try", "except", "finally", "raise"});
  c.class_keywords = strs({"class"});
  c.bitwise_operators = strs({"&", "|", "^", "~", "<<", ">>", "&=", "|=", "^=", "<<=", ">>="});
  c.builtin_methods = strs({"sort", "equals", "clone"});
  c.wrapper_classes = {};
  c.collection_classes = strs({"deque", "defaultdict", "Counter", "OrderedDict"});
  c.math_qualifiers = strs({"math"});
  c.math_functions = {};
  c.library_callees =
      strs({"print", "range", "len", "int", "str", "float", "abs", "max", "min", "sum", "sorted",
            "pow", "ord", "chr", "map", "filter", "list", "set", "dict", "tuple", "enumerate",
            "zip", "round", "input", "bool", "divmod", "reversed", "all", "any", "bin", "hex",
            "format", "isinstance", "type"});
  c.cast_type_keywords = {};
  c.stream_identifiers = {};
  return c;
}

std::set<std::string>* catalog_set(LanguageCatalog& c, std::string_view name) {
  if (name == "elementary_keywords") return &c.elementary_keywords;
  if (name == "control_extra") return &c.control_extra;
  if (name == "exception_keywords") return &c.exception_keywords;
  if (name == "class_keywords") return &c.class_keywords;
  if (name == "bitwise_operators") return &c.bitwise_operators;
  if (name == "builtin_methods") return &c.builtin_methods;
  if (name == "wrapper_classes") return &c.wrapper_classes;
  if (name == "collection_classes") return &c.collection_classes;
  if (name == "math_qualifiers") return &c.math_qualifiers;
  if (name == "math_functions") return &c.math_functions;
  if (name == "library_callees") return &c.library_callees;
  if (name == "cast_type_keywords") return &c.cast_type_keywords;
  if (name == "stream_identifiers") return &c.stream_identifiers;
  return nullptr;
}

nlohmann::json lang_to_json(const LanguageCatalog& c) {
  return nlohmann::json{
      {"elementary_keywords", c.elementary_keywords},
      {"control_extra", c.control_extra},
      {"exception_keywords", c.exception_keywords},
      {"class_keywords", c.class_keywords},
      {"bitwise_operators", c.bitwise_operators},
      {"builtin_methods", c.builtin_methods},
      {"wrapper_classes", c.wrapper_classes},
      {"collection_classes", c.collection_classes},
      {"math_qualifiers", c.math_qualifiers},
      {"math_functions", c.math_functions},
      {"library_callees", c.library_callees},
      {"cast_type_keywords", c.cast_type_keywords},
      {"stream_identifiers", c.stream_identifiers},
  };
}

void lang_from_json(LanguageCatalog& c, const nlohmann::json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::set<std::string>* target = catalog_set(c, it.key());
    if (!target) throw ConfigError("unknown catalog key: " + it.key());
    *target = it.value().get<std::set<std::string>>();
  }
}

}  // namespace

ElementaryCatalog ElementaryCatalog::defaults() {
  ElementaryCatalog cat;
  cat.java = java_defaults();
  cat.cpp = cpp_defaults();
  cat.python = python_defaults();
  return cat;
}

const ElementaryCatalog& default_catalog() {
  static const ElementaryCatalog cat = ElementaryCatalog::defaults();
  return cat;
}

const LanguageCatalog& ElementaryCatalog::for_language(SourceLanguage lang) const {
  switch (lang) {
    case SourceLanguage::Java: return java;
    case SourceLanguage::Cpp: return cpp;
    case SourceLanguage::Python: return python;
  }
  return java;
}

nlohmann::json ElementaryCatalog::to_json() const {
  return nlohmann::json{
      {"java", lang_to_json(java)}, {"cpp", lang_to_json(cpp)}, {"python", lang_to_json(python)}};
}

ElementaryCatalog ElementaryCatalog::from_json(const nlohmann::json& j) {
  ElementaryCatalog cat = defaults();
  for (auto it = j.begin(); it != j.end(); ++it) {
    LanguageCatalog* lc = nullptr;
    if (it.key() == "java") lc = &cat.java;
    else if (it.key() == "cpp") lc = &cat.cpp;
    else if (it.key() == "python") lc = &cat.python;
    else throw ConfigError("unknown catalog language: " + it.key());
    lang_from_json(*lc, it.value());
  }
  return cat;
}

ElementaryCatalog ElementaryCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open catalog: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid catalog JSON in " + path + ": " + e.what());
  }
  return from_json(j);
}

std::string ElementaryCatalog::fingerprint() const { return fnv1a64_hex(to_json().dump()); }

namespace {

bool significant(const Token& t) {
  return t.kind != TokenKind::Comment && t.kind != TokenKind::Newline &&
         t.kind != TokenKind::Indent && t.kind != TokenKind::Dedent;
}

struct TokenView {
  const std::vector<Token>& toks;
  std::vector<std::size_t> sig;  // indices of significant tokens

  explicit TokenView(const std::vector<Token>& tokens) : toks(tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (significant(tokens[i])) sig.push_back(i);
    }
  }

  std::size_t size() const { return sig.size(); }
  const Token& at(std::size_t k) const { return toks[sig[k]]; }
  const std::string& lex(std::size_t k) const { return toks[sig[k]].lexeme; }
  bool is(std::size_t k, std::string_view text) const {
    return k < sig.size() && toks[sig[k]].lexeme == text;
  }
};

// Matches the closing ")" for the "(" at sig index `open`; returns the sig
// index just past it, or nullopt when unbalanced.
std::optional<std::size_t> match_paren(const TokenView& v, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < v.size(); ++k) {
    if (v.lex(k) == "(") ++depth;
    else if (v.lex(k) == ")") {
      if (--depth == 0) return k + 1;
    }
  }
  return std::nullopt;
}

int count_params(const TokenView& v, std::size_t open, std::size_t close_plus_one) {
  // [open, close_plus_one-1] spans "(" ... ")"
  if (close_plus_one - open <= 2) return 0;
  if (close_plus_one - open == 3 && v.lex(open + 1) == "void") return 0;
  int depth = 0;
  int commas = 0;
  for (std::size_t k = open; k + 1 < close_plus_one; ++k) {
    const std::string& lx = v.lex(k);
    if (lx == "(" || lx == "[" || lx == "{" || lx == "<") ++depth;
    else if (lx == ")" || lx == "]" || lx == "}" || lx == ">") --depth;
    else if (lx == "," && depth == 1) ++commas;
  }
  return commas + 1;
}

ExtractResult extract_java_cpp(const TokenView& v, SourceLanguage lang) {
  ExtractResult out;
  std::size_t k = 0;
  while (k < v.size()) {
    const Token& t = v.at(k);
    if (t.kind != TokenKind::Identifier || !v.is(k + 1, "(")) {
      ++k;
      continue;
    }
    if (k > 0) {
      const Token& prev = v.at(k - 1);
      if (prev.lexeme == "new" || prev.lexeme == "." || prev.lexeme == "->") {
        ++k;
        continue;
      }
      const bool header_prefix = prev.kind == TokenKind::Keyword ||
                                 prev.kind == TokenKind::Identifier || prev.lexeme == ">" ||
                                 prev.lexeme == "]" || prev.lexeme == "*" || prev.lexeme == "&" ||
                                 prev.lexeme == "::";
      if (!header_prefix) {
        ++k;
        continue;
      }
    }
    auto after_params = match_paren(v, k + 1);
    if (!after_params) {
      ++k;
      continue;
    }
    std::size_t m = *after_params;
    if (lang == SourceLanguage::Java && v.is(m, "throws")) {
      ++m;
      while (m < v.size() && (v.at(m).kind == TokenKind::Identifier || v.lex(m) == "," ||
                              v.lex(m) == ".")) {
        ++m;
      }
    }
    if (lang == SourceLanguage::Cpp) {
      while (m < v.size() && (v.lex(m) == "const" || v.lex(m) == "noexcept" ||
                              v.lex(m) == "override" || v.lex(m) == "final")) {
        ++m;
      }
    }
    if (!v.is(m, "{")) {
      ++k;
      continue;
    }

    FunctionDef def;
    def.name = t.lexeme;
    def.start_token = v.sig[k];
    def.parameter_count = count_params(v, k + 1, *after_params);

    // body extent via brace matching
    int depth = 0;
    std::size_t end_sig = v.size() - 1;
    bool balanced = false;
    for (std::size_t b = m; b < v.size(); ++b) {
      if (v.lex(b) == "{") ++depth;
      else if (v.lex(b) == "}") {
        if (--depth == 0) {
          end_sig = b;
          balanced = true;
          break;
        }
      }
    }
    if (!balanced) {
      out.diagnostics.push_back("unbalanced braces in definition of '" + def.name + "'");
    }
    def.end_token = v.sig[end_sig];
    out.defs.push_back(def);
    k = end_sig + 1;  // top-level definitions only
  }
  return out;
}

ExtractResult extract_python(const TokenView& v) {
  ExtractResult out;
  std::size_t k = 0;
  while (k < v.size()) {
    if (!(v.at(k).kind == TokenKind::Keyword && v.lex(k) == "def")) {
      ++k;
      continue;
    }
    if (k + 2 >= v.size() || v.at(k + 1).kind != TokenKind::Identifier || !v.is(k + 2, "(")) {
      ++k;
      continue;
    }
    auto after_params = match_paren(v, k + 2);
    if (!after_params || !v.is(*after_params, ":")) {
      out.diagnostics.push_back("malformed def header for '" + v.lex(k + 1) + "'");
      ++k;
      continue;
    }

    FunctionDef def;
    def.name = v.lex(k + 1);
    def.start_token = v.sig[k + 1];
    def.parameter_count = count_params(v, k + 2, *after_params);

    // Suite extent in the full token stream: an indented block runs to the
    // matching Dedent; a one-liner runs to the next Newline.
    const std::size_t colon_full = v.sig[*after_params];
    std::size_t i = colon_full + 1;
    const auto& toks = v.toks;
    while (i < toks.size() &&
           (toks[i].kind == TokenKind::Newline || toks[i].kind == TokenKind::Comment)) {
      ++i;
    }
    std::size_t end_full = toks.empty() ? 0 : toks.size() - 1;
    if (i < toks.size() && toks[i].kind == TokenKind::Indent) {
      int depth = 0;
      for (std::size_t b = i; b < toks.size(); ++b) {
        if (toks[b].kind == TokenKind::Indent) ++depth;
        else if (toks[b].kind == TokenKind::Dedent) {
          if (--depth == 0) {
            end_full = b;
            break;
          }
        }
      }
    } else {
      std::size_t b = colon_full + 1;
      while (b < toks.size() && toks[b].kind != TokenKind::Newline) ++b;
      end_full = b < toks.size() ? b : (toks.empty() ? 0 : toks.size() - 1);
    }
    def.end_token = end_full;
    out.defs.push_back(def);

    // resume after the suite
    std::size_t next = v.size();
    for (std::size_t s = k; s < v.size(); ++s) {
      if (v.sig[s] > end_full) {
        next = s;
        break;
      }
    }
    k = next;
  }
  return out;
}

ExtractResult extract_from_tokens(const std::vector<Token>& tokens, SourceLanguage lang) {
  TokenView v(tokens);
  if (lang == SourceLanguage::Python) return extract_python(v);
  return extract_java_cpp(v, lang);
}

std::vector<CallSite> classify_from_tokens(const std::vector<Token>& tokens, SourceLanguage lang,
                                           const std::vector<FunctionDef>& defs,
                                           const LanguageCatalog& cat) {
  TokenView v(tokens);
  std::set<std::size_t> def_name_positions;
  std::set<std::string> def_names;
  for (const FunctionDef& d : defs) {
    def_name_positions.insert(d.start_token);
    def_names.insert(d.name);
  }
  auto enclosing = [&](std::size_t full_idx) -> const FunctionDef* {
    const FunctionDef* best = nullptr;
    for (const FunctionDef& d : defs) {
      if (full_idx >= d.start_token && full_idx <= d.end_token) {
        if (!best || d.end_token - d.start_token < best->end_token - best->start_token) best = &d;
      }
    }
    return best;
  };

  std::vector<CallSite> sites;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const Token& t = v.at(k);
    if (t.kind != TokenKind::Identifier || !v.is(k + 1, "(")) continue;
    const std::size_t full_idx = v.sig[k];
    if (def_name_positions.count(full_idx)) continue;

    const std::string prev = k > 0 ? v.lex(k - 1) : "";
    const bool qualified = prev == "." || prev == "::" || prev == "->";

    CallSite site;
    site.callee = t.lexeme;
    site.line = t.line;
    if (qualified) {
      // A dotted call is a member/library call even when the name collides
      // with a local definition (Math.max inside a function named max).
      site.kind = CallKind::Library;
    } else {
      const FunctionDef* host = enclosing(full_idx);
      if (host && host->name == t.lexeme) {
        site.kind = CallKind::SelfRecursive;
      } else if (def_names.count(t.lexeme)) {
        site.kind = CallKind::UserCross;
      } else if (cat.library_callees.count(t.lexeme) || cat.collection_classes.count(t.lexeme) ||
                 cat.wrapper_classes.count(t.lexeme) || cat.math_functions.count(t.lexeme)) {
        site.kind = CallKind::Library;
      } else {
        site.kind = CallKind::Unresolved;
      }
    }
    sites.push_back(std::move(site));
  }
  return sites;
}

CallHistogram empty_histogram() {
  return {{CallKind::SelfRecursive, 0},
          {CallKind::UserCross, 0},
          {CallKind::Library, 0},
          {CallKind::Unresolved, 0}};
}

bool operand_start(const Token& t) {
  switch (t.kind) {
    case TokenKind::Identifier:
    case TokenKind::IntLiteral:
    case TokenKind::FloatLiteral:
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral:
      return true;
    default:
      return t.lexeme == "(";
  }
}

}  // namespace

ExtractResult extract_functions(const Example& example) {
  LexResult lr = lex(example.source, example.language);
  ExtractResult out = extract_from_tokens(lr.tokens, example.language);
  for (const LexDiagnostic& e : lr.errors) {
    out.diagnostics.push_back("line " + std::to_string(e.line) + " col " +
                              std::to_string(e.column) + ": " + e.message);
  }
  return out;
}

std::vector<CallSite> classify_call_sites(const Example& example,
                                          const std::vector<FunctionDef>& defs,
                                          const ElementaryCatalog& catalog) {
  LexResult lr = lex(example.source, example.language);
  return classify_from_tokens(lr.tokens, example.language, defs,
                              catalog.for_language(example.language));
}

CallHistogram classify_calls(const Example& example, const std::vector<FunctionDef>& defs,
                             const ElementaryCatalog& catalog) {
  CallHistogram hist = empty_histogram();
  for (const CallSite& s : classify_call_sites(example, defs, catalog)) ++hist[s.kind];
  return hist;
}

ExampleAnalysis analyze_example(const Example& example, const ElementaryCatalog& catalog) {
  const LanguageCatalog& cat = catalog.for_language(example.language);
  ExampleAnalysis out;
  FeatureProfile& p = out.profile;
  p.example_index = example.index;
  p.call_histogram = empty_histogram();

  LexResult lr = lex(example.source, example.language);
  for (const LexDiagnostic& e : lr.errors) {
    out.diagnostics.push_back("line " + std::to_string(e.line) + " col " +
                              std::to_string(e.column) + ": " + e.message);
  }
  const std::vector<Token>& toks = lr.tokens;
  TokenView v(toks);

  ExtractResult ext = extract_from_tokens(toks, example.language);
  out.diagnostics.insert(out.diagnostics.end(), ext.diagnostics.begin(), ext.diagnostics.end());

  out.call_sites = classify_from_tokens(toks, example.language, ext.defs, cat);
  for (const CallSite& s : out.call_sites) ++p.call_histogram[s.kind];
  p.uses_recursion = p.call_histogram[CallKind::SelfRecursive] > 0;

  auto add = [&](FeatureTag tag) { p.sophisticated_features.insert(tag); };

  // keyword partition
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Token& t = v.at(k);
    if (t.kind == TokenKind::Keyword) {
      bool flagged = false;
      if (cat.control_extra.count(t.lexeme)) {
        add(FeatureTag::ControlExtra);
        flagged = true;
      }
      if (cat.exception_keywords.count(t.lexeme)) {
        add(FeatureTag::ExceptionHandling);
        flagged = true;
      }
      if (cat.class_keywords.count(t.lexeme)) {
        add(FeatureTag::ClassDefinition);
        flagged = true;
      }
      if (!flagged && !cat.elementary_keywords.count(t.lexeme)) add(FeatureTag::Other);
      if (t.lexeme == "class") out.class_definition_lines.push_back(t.line);
      continue;
    }
    if (t.kind == TokenKind::Identifier) {
      // math qualifier: Math.<member> / math.<member>
      if (cat.math_qualifiers.count(t.lexeme) && v.is(k + 1, ".")) p.uses_math_library = true;
      if (cat.wrapper_classes.count(t.lexeme) && v.is(k + 1, ".")) {
        add(FeatureTag::WrapperClassStatics);
      }
      if (cat.collection_classes.count(t.lexeme)) {
        const bool typeish = v.is(k + 1, "<") || v.is(k + 1, ".") ||
                             (k + 1 < v.size() && v.at(k + 1).kind == TokenKind::Identifier) ||
                             (k > 0 && v.lex(k - 1) == "new");
        if (typeish) add(FeatureTag::LibraryGenerics);
      }
      continue;
    }
  }

  // named casts (cpp)
  if (example.language == SourceLanguage::Cpp) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::string& lx = v.lex(k);
      if (lx == "static_cast" || lx == "dynamic_cast" || lx == "reinterpret_cast" ||
          lx == "const_cast") {
        add(FeatureTag::Casting);
      }
    }
  }

  // conservative cast pattern: "(" TypeName ")" operand
  for (std::size_t k = 0; v.size() >= 4 && k <= v.size() - 4; ++k) {
    if (v.lex(k) != "(") continue;
    const Token& ty = v.at(k + 1);
    const bool type_name =
        (ty.kind == TokenKind::Keyword && cat.cast_type_keywords.count(ty.lexeme)) ||
        (ty.kind == TokenKind::Identifier &&
         (cat.wrapper_classes.count(ty.lexeme) || ty.lexeme == "String"));
    if (!type_name || v.lex(k + 2) != ")" || !operand_start(v.at(k + 3))) continue;
    add(FeatureTag::Casting);
    p.notes.push_back("casting flagged by conservative pattern at line " +
                      std::to_string(v.at(k).line) + " (heuristic)");
  }

  // bitwise operators, with a statement-level exemption for C++ stream io
  {
    std::size_t stmt_begin = 0;
    auto scan_statement = [&](std::size_t lo, std::size_t hi) {
      bool streamy = false;
      if (example.language == SourceLanguage::Cpp) {
        for (std::size_t k = lo; k < hi; ++k) {
          if (v.at(k).kind == TokenKind::Identifier && cat.stream_identifiers.count(v.lex(k))) {
            streamy = true;
            break;
          }
        }
      }
      for (std::size_t k = lo; k < hi; ++k) {
        const Token& t = v.at(k);
        if (t.kind != TokenKind::Operator || !cat.bitwise_operators.count(t.lexeme)) continue;
        if (streamy && (t.lexeme == "<<" || t.lexeme == ">>" || t.lexeme == "<<=" ||
                        t.lexeme == ">>=")) {
          continue;
        }
        add(FeatureTag::Bitwise);
      }
    };
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::string& lx = v.lex(k);
      if (lx == ";" || lx == "{" || lx == "}") {
        scan_statement(stmt_begin, k);
        stmt_begin = k + 1;
      }
    }
    scan_statement(stmt_begin, v.size());
  }

  // built-in method callees (sort/equals/clone)
  for (const CallSite& s : out.call_sites) {
    if (cat.builtin_methods.count(s.callee)) add(FeatureTag::BuiltinMethods);
  }

  // unqualified math functions (cpp)
  if (!cat.math_functions.empty()) {
    for (const CallSite& s : out.call_sites) {
      if (s.kind != CallKind::SelfRecursive && s.kind != CallKind::UserCross &&
          cat.math_functions.count(s.callee)) {
        p.uses_math_library = true;
      }
    }
  }

  if (!p.sophisticated_features.empty()) {
    p.tier = Tier::Sophisticated;
  } else if (p.uses_math_library && p.uses_recursion) {
    p.tier = Tier::ElementaryPlusMathAndRecursion;
  } else if (p.uses_recursion) {
    p.tier = Tier::ElementaryPlusRecursion;
  } else if (p.uses_math_library) {
    p.tier = Tier::ElementaryPlusMath;
  } else {
    p.tier = Tier::Elementary;
  }
  p.elementary_only = p.tier == Tier::Elementary;
  return out;
}

FeatureProfile detect_features(const Example& example, const ElementaryCatalog& catalog) {
  return analyze_example(example, catalog).profile;
}

ClassScan detect_class_definitions(const Corpus& corpus) {
  ClassScan scan;
  for (const Example& ex : corpus.examples) {
    LexResult lr = lex(ex.source, ex.language);
    for (const Token& t : lr.tokens) {
      if (t.kind == TokenKind::Keyword && t.lexeme == "class") {
        ++scan.count;
        scan.sites.push_back({ex.index, t.line});
      }
    }
  }
  return scan;
}

TierHistogram tier_histogram(const Corpus& corpus, const ElementaryCatalog& catalog,
                             std::optional<long long> first_n, int jobs) {
  std::size_t n = corpus.examples.size();
  if (first_n && *first_n >= 0) n = std::min(n, static_cast<std::size_t>(*first_n));

  std::vector<Tier> tiers(n, Tier::Elementary);
  parallel_for(n, jobs, [&](std::size_t i) {
    tiers[i] = detect_features(corpus.examples[i], catalog).tier;
  });

  TierHistogram hist = {{Tier::Elementary, 0},
                        {Tier::ElementaryPlusMath, 0},
                        {Tier::ElementaryPlusRecursion, 0},
                        {Tier::ElementaryPlusMathAndRecursion, 0},
                        {Tier::Sophisticated, 0}};
  for (Tier t : tiers) ++hist[t];
  return hist;
}

}  // namespace census
