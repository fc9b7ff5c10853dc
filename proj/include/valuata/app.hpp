#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "valuata/kummer.hpp"

namespace valuata {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

/// Series field descriptor. Empty residue means gf:p; empty precision means 10
/// (or (10, 0) for lex2).
struct SeriesSpec {
  int p = 2;
  std::string group = "int";
  std::string residue;
  std::string precision;

  SeriesField build() const;
  Json to_json() const;
};

struct CycloSpec {
  int p = 2;
  int m = 1;
  bool with_y = false;
  /// 0 selects CycloField::max_precision(p).
  int N = 0;

  CycloField build() const;
  Json to_json() const;
};

Json series_json(const SeriesField& K, const Series& a);
Json cyclo_json(const CycloField& F, const CycloElt& a);
Json invariants_json(const InvariantsReport& r, int p);

// Every report carries "schema", "command", "input" and "status" ("ok" or
// "violation"). A violation means a checked identity failed.
Json analyze_as(const SeriesSpec& spec, const std::string& f);
Json normalize_as(const SeriesSpec& spec, const std::string& f, int budget, int probes = 0, std::uint64_t seed = 0);
Json classify_kummer(const CycloSpec& spec, const std::string& h);
Json normalize_kummer(const CycloSpec& spec, const std::string& h, int budget, int probes = 0,
                      std::uint64_t seed = 0);
/// Samples b at random unless `b` is non-empty.
Json verify_norm_ideal(const SeriesSpec& spec, const std::string& f, const std::vector<std::string>& b, int samples,
                       std::uint64_t seed);

struct CorpusEntry {
  std::string name;
  std::string command;
  SeriesSpec series;
  CycloSpec cyclo;
  std::string expr;
  int budget = 10;
  /// JSON-pointer -> expected value.
  Json expected;
  /// Known invariants recorded alongside the computed report.
  Json annotation;
};

const std::vector<CorpusEntry>& corpus();
Json run_entry(const CorpusEntry& e, int probes, std::uint64_t seed);
Json run_corpus(int probes, std::uint64_t seed);

/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace valuata
