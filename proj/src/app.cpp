#include "valuata/app.hpp"

#include "valuata/dsl.hpp"
#include "valuata/norm_ideal.hpp"

namespace valuata {

namespace {

Json report(const std::string& command, Json input) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["input"] = std::move(input);
  r["status"] = "ok";
  return r;
}

void violation(Json& r, const std::string& what) {
  r["status"] = "violation";
  r["violations"].push_back(what);
}

Json residue_json(const ResidueField& k, const std::optional<ResidueElt>& a) {
  return a ? Json(k.str(*a)) : Json(nullptr);
}

Json as_witness(const SeriesField& K, const ASClassification& c) {
  Json w = Json::object();
  if (c.valuation) w["valuation"] = c.valuation->str();
  if (c.unit) w["u"] = series_json(K, *c.unit);
  if (c.g) w["g"] = series_json(K, *c.g);
  if (c.residue) w["residue"] = K.residue().str(*c.residue);
  if (c.root) w["root"] = K.residue().str(*c.root);
  if (c.improvement) w["h"] = series_json(K, *c.improvement);
  w["reason"] = c.reason;
  return w;
}

Json kummer_witness(const CycloField& F, const KummerClassification& c) {
  Json w = Json::object();
  if (c.v_h) w["v_h"] = *c.v_h;
  if (c.v_h) w["unit"] = cyclo_json(F, c.unit);
  if (c.v_w) w["v_w"] = *c.v_w;
  auto put = [&](const char* key, const std::optional<CycloElt>& a) {
    if (a) w[key] = cyclo_json(F, *a);
  };
  put("t", c.t);
  put("u", c.u);
  put("s", c.s);
  put("c", c.c);
  put("g", c.g);
  if (c.g) w["i"] = c.i;
  if (c.residue) w["residue"] = residue_json(F.residue(), c.residue);
  if (c.root) w["root"] = residue_json(F.residue(), c.root);
  w["reason"] = c.reason;
  return w;
}

void put_invariants(Json& r, const InvariantsReport& inv, int p) {
  r["invariants"] = invariants_json(inv, p);
  if (inv.d * inv.e * inv.f_res != p) violation(r, "p != d*e*f");
}

Json probe_json(const ProbeResult& pr) {
  return {{"count", pr.probes},
          {"violations", pr.violations},
          {"inconclusive", pr.inconclusive},
          {"first_violation", pr.first_violation.empty() ? Json(nullptr) : Json(pr.first_violation)}};
}

}  // namespace

SeriesField SeriesSpec::build() const {
  ResidueField k = residue.empty() ? ResidueField::finite(p) : ResidueField::parse(residue);
  if (k.p() != p) throw UsageError("residue field " + k.name() + " does not have characteristic " + std::to_string(p));
  ValueGroup g = ValueGroup::parse(group, p);
  GroupElt prec;
  if (precision.empty()) {
    prec = g.rank() == 2 ? GroupElt(10, 0) : GroupElt(10);
  } else {
    prec = GroupElt::parse(precision);
    if (g.rank() == 2 && prec.rank() == 1) prec = GroupElt(prec.first(), 0);
  }
  return {k, g, prec};
}

Json SeriesSpec::to_json() const {
  SeriesField K = build();
  return {{"p", p}, {"group", K.group().name()}, {"residue", K.residue().name()},
          {"precision", K.default_precision().str()}};
}

CycloField CycloSpec::build() const { return {p, m, with_y, N}; }

Json CycloSpec::to_json() const {
  CycloField F = build();
  return {{"p", p}, {"m", m}, {"with_y", with_y}, {"N", F.padic_precision()}};
}

Json series_json(const SeriesField& K, const Series& a) {
  Json terms = Json::array();
  for (const auto& t : a.terms()) terms.push_back({t.exp.str(), K.residue().str(t.coeff)});
  return {{"text", K.str(a)}, {"terms", terms}, {"precision", a.precision() ? Json(a.precision()->str()) : Json(nullptr)}};
}

Json cyclo_json(const CycloField& F, const CycloElt& a) {
  Json v = nullptr;
  if (!F.is_zero_to_precision(a)) v = *F.valuation(a);
  return {{"text", F.str(a)}, {"valuation", v}, {"precision", F.absolute_precision(a)}};
}

Json invariants_json(const InvariantsReport& r, int p) {
  return {{"e", r.e},
          {"f", r.f_res},
          {"d", r.d},
          {"type", type_label(r.type)},
          {"swan", r.swan ? Json(r.swan->str()) : Json("undefined (defect)")},
          {"product_ok", r.d * r.e * r.f_res == p}};
}

Json analyze_as(const SeriesSpec& spec, const std::string& text) {
  SeriesField K = spec.build();
  Series f = parse_series(K, text);
  Json r = report("analyze-as", {{"field", spec.to_json()}, {"f", series_json(K, f)}});
  ASClassification c = classify_as(K, f);
  r["verdict"] = verdict_label(c.verdict);
  r["witness"] = as_witness(K, c);
  r["steps"] = 0;
  r["budget"] = nullptr;
  r["precision_used"] = K.default_precision().str();
  r["invariants"] = nullptr;
  if (is_best(c.verdict)) {
    put_invariants(r, as_invariants(c, K.p()), K.p());
    try {
      r["norm_swan"] = classical_swan(f, ASExtension(K, f)).str();
    } catch (const MathAssertion& e) {
      violation(r, e.what());
    }
  }
  return r;
}

Json normalize_as(const SeriesSpec& spec, const std::string& text, int budget, int probes, std::uint64_t seed) {
  SeriesField K = spec.build();
  Series f = parse_series(K, text);
  Json r = report("normalize-as", {{"field", spec.to_json()}, {"f", series_json(K, f)}, {"budget", budget}});
  NormalizeOutcome o = normalize_as(K, f, budget);
  r["outcome"] = outcome_label(o.kind);
  r["verdict"] = verdict_label(o.classification.verdict);
  r["witness"] = as_witness(K, o.classification);
  r["f_star"] = series_json(K, o.f_star);
  r["steps"] = o.steps;
  r["budget"] = o.budget;
  r["precision_used"] = K.default_precision().str();
  Json traj = Json::array();
  for (const auto& v : o.trajectory) traj.push_back(v.str());
  r["trajectory"] = traj;
  r["invariants"] = nullptr;
  if (o.kind == NormalizeOutcome::Kind::Trivial) return r;
  put_invariants(r, as_invariants(o, K.p()), K.p());
  if (o.kind == NormalizeOutcome::Kind::BestFound) {
    try {
      r["norm_swan"] = classical_swan(o.f_star, ASExtension(K, o.f_star)).str();
    } catch (const MathAssertion& e) {
      violation(r, e.what());
    }
    if (probes > 0) {
      Rng rng(seed);
      ProbeResult pr = probe_best_f(K, o.f_star, rng, probes);
      r["probes"] = probe_json(pr);
      if (pr.violations) violation(r, "probe found a better generator: " + pr.first_violation);
    }
  }
  return r;
}

Json classify_kummer(const CycloSpec& spec, const std::string& text) {
  CycloField F = spec.build();
  CycloElt h = parse_cyclo(F, text);
  Json r = report("classify-kummer", {{"field", spec.to_json()}, {"h", cyclo_json(F, h)}});
  KummerClassification c = classify_h(F, h);
  r["verdict"] = kummer_label(c.verdict);
  r["witness"] = kummer_witness(F, c);
  r["steps"] = 0;
  r["budget"] = nullptr;
  r["precision_used"] = F.padic_precision();
  r["invariants"] = nullptr;
  if (is_best(c.verdict)) put_invariants(r, kummer_invariants(c, F), F.p());
  return r;
}

Json normalize_kummer(const CycloSpec& spec, const std::string& text, int budget, int probes, std::uint64_t seed) {
  CycloField F = spec.build();
  CycloElt h = parse_cyclo(F, text);
  Json r = report("normalize-kummer", {{"field", spec.to_json()}, {"h", cyclo_json(F, h)}, {"budget", budget}});
  KummerOutcome o = normalize_h(F, h, budget);
  r["outcome"] = outcome_label(o.kind);
  r["verdict"] = kummer_label(o.classification.verdict);
  r["witness"] = kummer_witness(F, o.classification);
  r["h_star"] = cyclo_json(F, o.h_star);
  r["steps"] = o.steps;
  r["budget"] = o.budget;
  r["precision_used"] = F.padic_precision();
  r["trajectory"] = o.trajectory;
  r["invariants"] = nullptr;
  if (o.kind == NormalizeOutcome::Kind::Trivial) return r;
  put_invariants(r, kummer_invariants(o, F), F.p());
  if (o.kind == NormalizeOutcome::Kind::BestFound && probes > 0) {
    Rng rng(seed);
    ProbeResult pr = probe_best_h(F, o.h_star, rng, probes);
    r["probes"] = probe_json(pr);
    if (pr.violations) violation(r, "probe found a better generator: " + pr.first_violation);
  }
  return r;
}

Json verify_norm_ideal(const SeriesSpec& spec, const std::string& text, const std::vector<std::string>& b_text,
                       int samples, std::uint64_t seed) {
  SeriesField K = spec.build();
  Series f = parse_series(K, text);
  Json r = report("verify-norm-ideal", {{"field", spec.to_json()}, {"f", series_json(K, f)}, {"seed", seed}});
  ASExtension L(K, f);
  if (L.is_trivial()) throw DomainError("the extension of " + K.str(f) + " is trivial: " + L.triviality_reason());

  std::vector<ExtElt> bs;
  if (b_text.empty()) {
    Rng rng(seed);
    bs = sample_generators(L, rng, samples);
  } else {
    for (const auto& t : b_text) bs.push_back(parse_ext(L, t));
  }

  Json rows = Json::array();
  int trace_fail = 0, ineq_fail = 0;
  for (const auto& b : bs) {
    TraceLemmaReport t = verify_trace_lemma(L, b);
    InequalityReport q = verify_s_inequality(L, b);
    const LefschetzSample& s = q.sample;
    Json c = Json::array();
    for (const auto& ci : s.c) c.push_back(ci.str());
    rows.push_back({{"b", L.str(b)},
                    {"s", q.s.str()},
                    {"s_prime", q.s_prime.str()},
                    {"c", c},
                    {"y", {{"num", L.str(s.y_num)}, {"den", K.str(s.y_den)}}},
                    {"norm_y", {{"num", K.str(s.n_y_num)}, {"den", K.str(s.n_y_den)}}},
                    {"trace_lemma", t.pass},
                    {"s_ge_s_prime", q.pass}});
    if (!t.pass) {
      ++trace_fail;
      violation(r, "trace identity failed for b = " + L.str(b));
    }
    if (!q.pass) {
      ++ineq_fail;
      violation(r, "InequalityViolated: s = " + q.s.str() + " < s' = " + q.s_prime.str() + " for b = " + L.str(b));
    }
  }
  r["samples"] = rows;
  r["summary"] = {{"count", rows.size()}, {"trace_failures", trace_fail}, {"inequality_failures", ineq_fail}};

  NormalizeOutcome o = normalize_as(K, f, 10);
  r["swan_check"] = nullptr;
  if (o.kind == NormalizeOutcome::Kind::BestFound) {
    SwanCheck sc = hn_defectless_check(o, ASExtension(K, o.f_star));
    r["swan_check"] = {{"norm_side", sc.norm_side.str()}, {"generator_side", sc.generator_side.str()}, {"pass", sc.pass}};
    if (!sc.pass) violation(r, "v(N(1/alpha)) != -v(f*)");
  }
  return r;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    auto as = [&](std::string name, std::string command, SeriesSpec s, std::string expr, Json expected,
                  int budget = 10, Json annotation = nullptr) {
      CorpusEntry e;
      e.name = std::move(name);
      e.command = std::move(command);
      e.series = std::move(s);
      e.expr = std::move(expr);
      e.expected = std::move(expected);
      e.budget = budget;
      e.annotation = std::move(annotation);
      v.push_back(std::move(e));
    };
    auto km = [&](std::string name, std::string command, CycloSpec s, std::string expr, Json expected) {
      CorpusEntry e;
      e.name = std::move(name);
      e.command = std::move(command);
      e.cyclo = s;
      e.expr = std::move(expr);
      e.expected = std::move(expected);
      v.push_back(std::move(e));
    };
    auto wild = [](int e, const char* swan) {
      return Json{{"/verdict", "Best_i"}, {"/invariants/type", "wild"}, {"/invariants/e", e}, {"/invariants/swan", swan}};
    };

    as("wild-monomial(p=2,n=3)", "analyze-as", {2, "int"}, "X^(-3)", wild(2, "3"));
    as("wild-monomial(p=2,n=5)", "analyze-as", {2, "int"}, "X^(-5)", wild(2, "5"));
    as("wild-monomial(p=3,n=2)", "analyze-as", {3, "int"}, "X^(-2)", wild(3, "2"));
    as("wild-monomial(p=5,n=7)", "analyze-as", {5, "int"}, "X^(-7)", wild(5, "7"));
    as("wild-two-terms(p=2)", "analyze-as", {2, "int"}, "X^(-3) + X^(-1) + 1", wild(2, "3"));
    as("x^-6-normalizes(p=2)", "normalize-as", {2, "int"}, "X^(-6)",
       {{"/outcome", "BestFound"}, {"/steps", 1}, {"/f_star/text", "X^(-3)"}, {"/invariants/swan", "3"}});
    as("chain(p=2)", "normalize-as", {2, "int"}, "X^(-4) + X^(-2) + X^(-1)",
       {{"/outcome", "BestFound"}, {"/verdict", "Best_i"}, {"/invariants/swan", "1"}});
    as("chain(p=3)", "normalize-as", {3, "int"}, "X^(-6) + X^(-1)",
       {{"/outcome", "BestFound"}, {"/steps", 1}, {"/verdict", "Best_i"}, {"/invariants/swan", "2"}});
    as("ferocious(p=2)", "analyze-as", {2, "int", "ratfunc:2"}, "y*X^(-2)",
       {{"/verdict", "Best_ii"}, {"/invariants/type", "ferocious"}, {"/invariants/f", 2}, {"/invariants/swan", "2"}});
    as("ferocious(p=3)", "analyze-as", {3, "int", "ratfunc:3"}, "y*X^(-3)",
       {{"/verdict", "Best_ii"}, {"/invariants/type", "ferocious"}, {"/invariants/f", 3}, {"/invariants/swan", "3"}});
    as("ferocious-after-shift(p=2)", "normalize-as", {2, "int", "ratfunc:2"}, "y*X^(-2) + X^(-4)",
       {{"/outcome", "BestFound"}, {"/verdict", "Best_ii"}, {"/invariants/swan", "2"}});
    as("unramified(p=2)", "analyze-as", {2, "int"}, "1",
       {{"/verdict", "Best_iii"}, {"/invariants/type", "unramified"}, {"/invariants/swan", "0"}});
    as("unramified(p=3)", "analyze-as", {3, "int"}, "1 + X",
       {{"/verdict", "Best_iii"}, {"/invariants/type", "unramified"}, {"/invariants/f", 3}});
    as("unramified(q=4)", "analyze-as", {2, "int", "gf:4"}, "w",
       {{"/verdict", "Best_iii"}, {"/invariants/type", "unramified"}});
    as("unramified-rank-2(p=2)", "analyze-as", {2, "lex2", "gf:4"}, "w + X^(1, -1)",
       {{"/verdict", "Best_iii"}, {"/invariants/type", "unramified"}, {"/invariants/swan", "(0, 0)"}});
    as("defect-monomial(p=2)", "normalize-as", {2, "int-inv-p"}, "X^(-1)",
       {{"/outcome", "DefectEvidence"}, {"/invariants/type", "defect"}, {"/invariants/d", 2}, {"/invariants/e", 1},
        {"/invariants/f", 1}, {"/trajectory/12", "-1/4096"}},
       12, {{"d", 2}, {"e", 1}, {"f", 1}, {"note", "defect extension, d = p"}});
    as("defect-monomial(p=3)", "normalize-as", {3, "int-inv-p"}, "X^(-1)",
       {{"/outcome", "DefectEvidence"}, {"/invariants/d", 3}, {"/trajectory/6", "-1/729"}}, 6,
       {{"d", 3}, {"e", 1}, {"f", 1}, {"note", "defect extension, d = p"}});
    as("defect-rank-2(p=2)", "normalize-as", {2, "lex2"}, "X^(-1, 0)",
       {{"/outcome", "DefectEvidence"}, {"/invariants/d", 2}, {"/trajectory/8", "(-1/256, 0)"}}, 8);
    as("trivial-positive(p=2)", "analyze-as", {2, "int"}, "X", {{"/verdict", "Trivial"}});
    as("trivial-after-shift(q=4)", "normalize-as", {2, "int", "gf:4"}, "1 + X",
       {{"/outcome", "Trivial"}, {"/steps", 1}});

    auto kw = [](const char* verdict, const char* type) {
      return Json{{"/verdict", verdict}, {"/invariants/type", type}};
    };
    km("kummer-Q2-sqrt2", "classify-kummer", {2, 1}, "2", kw("Best_i", "wild"));
    km("kummer-Q2-sqrt3", "classify-kummer", {2, 1}, "3", kw("Best_iii", "wild"));
    km("kummer-Q2-sqrt5", "classify-kummer", {2, 1}, "5", kw("Best_v", "unramified"));
    km("kummer-Q2(y)-sqrt-y", "classify-kummer", {2, 1, true}, "y", kw("Best_ii", "ferocious"));
    km("kummer-m2-1+y*pi^2", "classify-kummer", {2, 2, true}, "1 + y*pi^2", kw("Best_iv", "ferocious"));
    km("kummer-Q3-pi", "classify-kummer", {3, 1}, "pi", kw("Best_i", "wild"));
    km("kummer-Q3-1+z", "classify-kummer", {3, 1}, "1 + z", kw("Best_iii", "wild"));
    km("kummer-m2-1+pi^2", "classify-kummer", {2, 2}, "1 + pi^2",
       {{"/verdict", "NotBest"}, {"/witness/g/text", "1/(1 + pi)"}, {"/witness/v_w", 2}});
    km("kummer-chain-1+pi^2", "normalize-kummer", {2, 2}, "1 + pi^2",
       {{"/outcome", "BestFound"}, {"/steps", 1}, {"/verdict", "Best_iii"}, {"/trajectory", {2, 3}}});
    km("kummer-Q2-9", "classify-kummer", {2, 1}, "9", {{"/verdict", "Trivial"}});
    km("kummer-Q2-5-normalize", "normalize-kummer", {2, 1}, "5",
       {{"/outcome", "BestFound"}, {"/steps", 0}, {"/verdict", "Best_v"}});
    return v;
  }();
  return entries;
}

Json run_entry(const CorpusEntry& e, int probes, std::uint64_t seed) {
  Json rep;
  if (e.command == "analyze-as") rep = analyze_as(e.series, e.expr);
  else if (e.command == "normalize-as") rep = normalize_as(e.series, e.expr, e.budget, probes, seed);
  else if (e.command == "classify-kummer") rep = classify_kummer(e.cyclo, e.expr);
  else if (e.command == "normalize-kummer") rep = normalize_kummer(e.cyclo, e.expr, e.budget, probes, seed);
  else throw UsageError("unknown corpus command '" + e.command + "'");

  Json mismatches = Json::array();
  for (const auto& [ptr, want] : e.expected.items()) {
    Json::json_pointer jp(ptr);
    Json got = rep.contains(jp) ? rep.at(jp) : Json(nullptr);
    if (got != want) mismatches.push_back({{"path", ptr}, {"expected", want}, {"observed", got}});
  }
  bool pass = mismatches.empty() && rep["status"] == "ok";
  return {{"name", e.name}, {"command", e.command}, {"expected", e.expected}, {"annotation", e.annotation},
          {"mismatches", mismatches}, {"pass", pass}, {"report", rep}};
}

Json run_corpus(int probes, std::uint64_t seed) {
  Json r = report("run-corpus", {{"probes", probes}, {"seed", seed}});
  Json entries = Json::array();
  int passed = 0;
  const auto& all = corpus();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Json row;
    try {
      row = run_entry(all[i], probes, seed + i);
    } catch (const Error& ex) {
      row = {{"name", all[i].name}, {"command", all[i].command}, {"pass", false}, {"error", ex.what()}};
    }
    if (row["pass"].get<bool>()) ++passed;
    else violation(r, "corpus entry " + all[i].name + " failed");
    entries.push_back(std::move(row));
  }
  r["entries"] = entries;
  r["summary"] = {{"total", all.size()}, {"passed", passed}, {"failed", static_cast<int>(all.size()) - passed}};
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace valuata
