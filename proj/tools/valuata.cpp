#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "valuata/app.hpp"
#include "valuata/error.hpp"

using namespace valuata;

namespace {

struct Options {
  std::string field;
  int p = 0;
  std::string group;
  std::string residue;
  int m = 1;
  bool with_y = false;
  std::string precision;
  int budget = 10;
  std::uint64_t seed = 0;
  int samples = 20;
  int probes = 0;
  std::vector<std::string> b;
  std::string json_path;
  std::string expr;
};

// --field group:residue, e.g. int-inv-p:gf:2. Explicit --group/--residue win.
SeriesSpec series_spec(const Options& o) {
  SeriesSpec s;
  std::string group, residue;
  if (!o.field.empty()) {
    auto colon = o.field.find(':');
    group = o.field.substr(0, colon);
    if (colon != std::string::npos) residue = o.field.substr(colon + 1);
  }
  if (!o.group.empty()) group = o.group;
  if (!o.residue.empty()) residue = o.residue;
  s.group = group.empty() ? "int" : group;
  s.residue = residue;
  s.precision = o.precision;
  if (o.p) {
    s.p = o.p;
  } else if (!residue.empty()) {
    s.p = ResidueField::parse(residue).p();
  }
  return s;
}

CycloSpec cyclo_spec(const Options& o) {
  CycloSpec s;
  s.p = o.p ? o.p : 2;
  s.m = o.m;
  s.with_y = o.with_y;
  if (!o.precision.empty()) {
    try {
      s.N = std::stoi(o.precision);
    } catch (const std::exception&) {
      throw UsageError("--precision for cyclotomic fields is an integer N");
    }
  }
  return s;
}

int emit(const Json& r, const Options& o) {
  std::string text = dump(r);
  if (o.json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.json_path);
    out << text;
  }
  return r.value("status", "ok") == "ok" ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best generators, Swan conductors and defect evidence for degree-p extensions"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("VALUATA_SEED")) o.seed = std::strtoull(env, nullptr, 10);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Residue characteristic");
    sub->add_option("--precision", o.precision, "Default precision (exponent, or N for cyclotomic fields)");
    sub->add_option("--json", o.json_path, "Write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "Seed for sampled checks (default: $VALUATA_SEED or 0)");
  };
  auto series = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("expr", o.expr, "Generator f")->required();
    sub->add_option("--field", o.field, "Field descriptor group:residue, e.g. int-inv-p:gf:2");
    sub->add_option("--group", o.group, "Value group")->check(CLI::IsMember({"int", "int-inv-p", "rat", "lex2"}));
    sub->add_option("--residue", o.residue, "Residue field gf:q or ratfunc:q");
  };
  auto cyclo = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("expr", o.expr, "Generator h")->required();
    sub->add_option("--m", o.m, "Extra ramification index")->check(CLI::PositiveNumber);
    sub->add_flag("--with-y", o.with_y, "Adjoin a Gauss-valued indeterminate y");
  };

  auto* analyze = app.add_subcommand("analyze-as", "Classify an Artin-Schreier generator");
  series(analyze);
  auto* normalize = app.add_subcommand("normalize-as", "Improve an Artin-Schreier generator until best");
  series(normalize);
  normalize->add_option("--budget", o.budget, "Improvement steps")->check(CLI::PositiveNumber);
  normalize->add_option("--probes", o.probes, "Random probes of the result");
  auto* classify = app.add_subcommand("classify-kummer", "Classify a Kummer generator");
  cyclo(classify);
  auto* knorm = app.add_subcommand("normalize-kummer", "Improve a Kummer generator until best");
  cyclo(knorm);
  knorm->add_option("--budget", o.budget, "Improvement steps")->check(CLI::PositiveNumber);
  knorm->add_option("--probes", o.probes, "Random probes of the result");
  auto* verify = app.add_subcommand("verify-norm-ideal", "Check the trace identities and s >= s' on samples");
  series(verify);
  verify->add_option("--samples", o.samples, "Number of sampled b")->check(CLI::NonNegativeNumber);
  verify->add_option("--b", o.b, "Explicit b in terms of alpha (repeatable)");
  auto* run = app.add_subcommand("run-corpus", "Run the built-in instances");
  common(run);
  o.probes = 0;
  run->add_option("--probes", o.probes, "Random probes per best generator")->default_val(200);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return emit(analyze_as(series_spec(o), o.expr), o);
    if (*normalize) return emit(normalize_as(series_spec(o), o.expr, o.budget, o.probes, o.seed), o);
    if (*classify) return emit(classify_kummer(cyclo_spec(o), o.expr), o);
    if (*knorm) return emit(normalize_kummer(cyclo_spec(o), o.expr, o.budget, o.probes, o.seed), o);
    if (*verify) return emit(verify_norm_ideal(series_spec(o), o.expr, o.b, o.samples, o.seed), o);
    if (*run) return emit(run_corpus(o.probes, o.seed), o);
  } catch (const MathAssertion& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
