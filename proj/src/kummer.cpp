#include "valuata/kummer.hpp"

#include <algorithm>
#include <climits>

#include "valuata/error.hpp"

namespace valuata {

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

bool has_top_level_space(const std::string& s) { return s.find(' ') != std::string::npos; }

}  // namespace

int CycloField::max_precision(int p) {
  int N = 0;
  __int128 pw = 1;
  while (pw * p < (static_cast<__int128>(1) << 62)) {
    pw *= p;
    ++N;
  }
  return N;
}

CycloField::CycloField(int p, int m, bool with_y, int N)
    : p_(p), m_(m), n_(m * (p - 1)), N_(N), with_y_(with_y),
      residue_(GaloisField::make(p, 1), with_y ? ResidueKind::RationalFunctions : ResidueKind::Finite) {
  if (m < 1) throw UsageError("extra ramification m must be at least 1");
  const int max_n = max_precision(p);
  if (N_ == 0) N_ = max_n;
  if (N_ < 2 || N_ > max_n) {
    throw UsageError("p-adic precision N must lie in [2, " + std::to_string(max_n) + "] for p = " + std::to_string(p));
  }
  cap_ = static_cast<long>(n_) * N_;
  M_ = 1;
  for (int i = 0; i < N_; ++i) M_ *= p;
  // Phi_p(1 + pi^m) = sum_{k=1}^{p} C(p,k) pi^(m(k-1)) = 0.
  tail_.assign(static_cast<std::size_t>(n_), 0);
  for (int k = 1; k < p; ++k) tail_[static_cast<std::size_t>(m * (k - 1))] = (M_ - binomial(p, k) % M_) % M_;
  p_over_pi_.assign(static_cast<std::size_t>(n_), 0);
  p_over_pi_[static_cast<std::size_t>(n_ - 1)] = M_ - 1;
  for (int k = 2; k < p; ++k) {
    auto& c = p_over_pi_[static_cast<std::size_t>(m * (k - 1) - 1)];
    c = (c + M_ - binomial(p, k) % M_) % M_;
  }
}

std::string CycloField::name() const {
  return "Q_" + std::to_string(p_) + "(zeta, pi)" + (with_y_ ? "(y)" : "") + " (p=" + std::to_string(p_) +
         ", m=" + std::to_string(m_) + ", N=" + std::to_string(N_) + ")";
}

std::int64_t CycloField::mod_mul(std::int64_t a, std::int64_t b) const {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % M_);
}

std::int64_t CycloField::mod_add(std::int64_t a, std::int64_t b) const {
  std::int64_t r = a + b;
  return r >= M_ ? r - M_ : r;
}

int CycloField::vp(std::int64_t a) const {
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

PiPoly CycloField::pi_mul(const PiPoly& a, const PiPoly& b) const {
  std::vector<__int128> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
  for (int i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + static_cast<__int128>(a[i]) * b[j]) % M_;
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    if (!prod[k]) continue;
    for (int j = 0; j < n_; ++j) {
      if (tail_[j]) prod[k - n_ + j] = (prod[k - n_ + j] + prod[k] * tail_[j]) % M_;
    }
  }
  PiPoly r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) r[i] = static_cast<std::int64_t>(prod[i]);
  return r;
}

PiPoly CycloField::pi_times(const PiPoly& a) const {
  PiPoly r(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j + 1 < n_; ++j) r[j + 1] = a[j];
  const std::int64_t top = a[n_ - 1];
  if (top) {
    for (int j = 0; j < n_; ++j) r[j] = mod_add(r[j], mod_mul(top, tail_[j]));
  }
  return r;
}

PiPoly CycloField::pi_div(const PiPoly& a) const {
  // a_0 = p q0, and p / pi is a polynomial in pi.
  const std::int64_t q0 = a[0] / p_;
  PiPoly r(static_cast<std::size_t>(n_), 0);
  for (int j = 1; j < n_; ++j) r[j - 1] = a[j];
  for (int j = 0; j < n_; ++j) r[j] = mod_add(r[j], mod_mul(q0, p_over_pi_[j]));
  return r;
}

long CycloField::pi_val(const PiPoly& a) const {
  long v = LONG_MAX;
  for (int j = 0; j < n_; ++j) {
    if (a[j]) v = std::min(v, static_cast<long>(n_) * vp(a[j]) + j);
  }
  return v;
}

std::int64_t CycloField::coefficient_modulus(int j, long rel) const {
  const long q = rel / n_, r = rel % n_;
  const long e = std::min<long>(j < r ? q + 1 : q, N_);
  std::int64_t mod = 1;
  for (long i = 0; i < e; ++i) mod *= p_;
  return mod;
}

void CycloField::reduce(PiPoly& a, long rel) const {
  for (int j = 0; j < n_; ++j) a[j] %= coefficient_modulus(j, rel);
}

GaussPoly CycloField::gp_zero(long abs, bool exact) const {
  GaussPoly z;
  z.shift = exact ? 0 : abs;
  z.exact = exact;
  return z;
}

GaussPoly CycloField::gp_const(std::int64_t c) const {
  PiPoly a(static_cast<std::size_t>(n_), 0);
  a[0] = ((c % M_) + M_) % M_;
  return gp_make({a}, 0, cap_);
}

GaussPoly CycloField::gp_make(std::vector<PiPoly> coeffs, long shift, long rel) const {
  rel = std::min(rel, cap_);
  if (rel <= 0) return gp_zero(shift + rel, false);
  long v = LONG_MAX;
  for (const auto& c : coeffs) v = std::min(v, pi_val(c));
  if (v >= rel) return gp_zero(shift + rel, false);
  for (auto& c : coeffs) {
    for (long i = 0; i < v; ++i) c = pi_div(c);
    reduce(c, rel - v);
  }
  while (!coeffs.empty() && std::all_of(coeffs.back().begin(), coeffs.back().end(), [](auto x) { return x == 0; })) {
    coeffs.pop_back();
  }
  GaussPoly g;
  g.shift = shift + v;
  g.rel = rel - v;
  g.coeffs = std::move(coeffs);
  return g;
}

GaussPoly CycloField::gp_add(const GaussPoly& a, const GaussPoly& b) const {
  if (a.is_zero() && a.exact) return b;
  if (b.is_zero() && b.exact) return a;
  const long abs = std::min(gp_abs(a), gp_abs(b));
  if (a.is_zero() && b.is_zero()) return gp_zero(abs, false);
  long s = LONG_MAX;
  if (!a.is_zero()) s = std::min(s, a.shift);
  if (!b.is_zero()) s = std::min(s, b.shift);
  if (abs <= s) return gp_zero(abs, false);
  std::vector<PiPoly> coeffs(std::max(a.coeffs.size(), b.coeffs.size()), PiPoly(static_cast<std::size_t>(n_), 0));
  for (const GaussPoly* x : {&a, &b}) {
    if (x->is_zero()) continue;
    const long d = x->shift - s;
    if (d >= abs - s) continue;
    for (std::size_t k = 0; k < x->coeffs.size(); ++k) {
      PiPoly c = x->coeffs[k];
      for (long i = 0; i < d; ++i) c = pi_times(c);
      for (int j = 0; j < n_; ++j) coeffs[k][j] = mod_add(coeffs[k][j], c[j]);
    }
  }
  return gp_make(std::move(coeffs), s, abs - s);
}

GaussPoly CycloField::gp_neg(const GaussPoly& a) const {
  GaussPoly r = a;
  for (auto& c : r.coeffs)
    for (auto& x : c) x = x ? M_ - x : 0;
  if (!r.is_zero()) {
    for (auto& c : r.coeffs) reduce(c, r.rel);
  }
  return r;
}

GaussPoly CycloField::gp_mul(const GaussPoly& a, const GaussPoly& b) const {
  if ((a.is_zero() && a.exact) || (b.is_zero() && b.exact)) return gp_zero(0, true);
  if (a.is_zero() || b.is_zero()) return gp_zero(a.shift + b.shift, false);
  std::vector<PiPoly> coeffs(a.coeffs.size() + b.coeffs.size() - 1, PiPoly(static_cast<std::size_t>(n_), 0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      PiPoly prod = pi_mul(a.coeffs[i], b.coeffs[j]);
      for (int t = 0; t < n_; ++t) coeffs[i + j][t] = mod_add(coeffs[i + j][t], prod[t]);
    }
  }
  return gp_make(std::move(coeffs), a.shift + b.shift, std::min(a.rel, b.rel));
}

CycloElt CycloField::frac(GaussPoly num, GaussPoly den) const {
  if (den.is_zero()) {
    if (den.exact) throw DivisionByZero("division by exact zero");
    throw ZeroToPrecision("division by an element that is zero to precision " + std::to_string(den.shift));
  }
  if (!(num.is_zero() && num.exact)) num.shift -= den.shift;
  den.shift = 0;
  return {std::move(num), std::move(den)};
}

CycloElt CycloField::zero() const { return {gp_zero(0, true), gp_const(1)}; }

CycloElt CycloField::from_int(long a) const { return {gp_const(a), gp_const(1)}; }

CycloElt CycloField::from_mpz(const mpz_class& a) const {
  mpz_class r = a % mpz_class(static_cast<long>(M_));
  if (r < 0) r += static_cast<long>(M_);
  return {gp_const(r.get_si()), gp_const(1)};
}

CycloElt CycloField::pi() const { return shift(one(), 1); }

CycloElt CycloField::z() const { return shift(one(), m_); }

CycloElt CycloField::y() const {
  if (!with_y_) throw UsageError("'y' needs a field built with y");
  PiPoly zero_c(static_cast<std::size_t>(n_), 0), one_c(static_cast<std::size_t>(n_), 0);
  one_c[0] = 1;
  return {gp_make({zero_c, one_c}, 0, cap_), gp_const(1)};
}

CycloElt CycloField::big_o(long abs) const { return {gp_zero(abs, false), gp_const(1)}; }

CycloElt CycloField::add(const CycloElt& a, const CycloElt& b) const {
  if (a.den == b.den) return frac(gp_add(a.num, b.num), a.den);
  return frac(gp_add(gp_mul(a.num, b.den), gp_mul(b.num, a.den)), gp_mul(a.den, b.den));
}

CycloElt CycloField::neg(const CycloElt& a) const { return {gp_neg(a.num), a.den}; }

CycloElt CycloField::sub(const CycloElt& a, const CycloElt& b) const { return add(a, neg(b)); }

CycloElt CycloField::mul(const CycloElt& a, const CycloElt& b) const {
  return frac(gp_mul(a.num, b.num), gp_mul(a.den, b.den));
}

CycloElt CycloField::invert(const CycloElt& a) const { return frac(a.den, a.num); }

CycloElt CycloField::pow(const CycloElt& a, long e) const {
  if (e < 0) return pow(invert(a), -e);
  CycloElt r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

CycloElt CycloField::shift(const CycloElt& a, long k) const {
  CycloElt r = a;
  if (!(r.num.is_zero() && r.num.exact)) r.num.shift += k;
  return r;
}

std::optional<long> CycloField::valuation(const CycloElt& a) const {
  if (a.num.is_zero()) {
    if (a.num.exact) return std::nullopt;
    throw ZeroToPrecision("valuation unknown: element is O(pi^" + std::to_string(a.num.shift) + ")");
  }
  return a.num.shift;
}

long CycloField::absolute_precision(const CycloElt& a) const {
  if (a.num.is_zero()) return a.num.exact ? LONG_MAX : a.num.shift;
  return a.num.shift + std::min(a.num.rel, a.den.rel);
}

ResidueElt CycloField::residue_class(const CycloElt& a) const {
  auto v = valuation(a);
  if (!v || *v > 0) return residue_.zero();
  if (*v < 0) throw UsageError("residue class of an element of negative valuation " + std::to_string(*v));
  auto digits = [&](const GaussPoly& g) {
    GFPoly r;
    for (const auto& c : g.coeffs) r.push_back(static_cast<GFElt>(c[0] % p_));
    gfpoly::trim(r);
    return r;
  };
  return residue_.fraction(digits(a.num), digits(a.den));
}

CycloElt CycloField::lift(const ResidueElt& r) const {
  auto poly = [&](const GFPoly& a) {
    if (a.empty()) return gp_zero(0, true);
    std::vector<PiPoly> coeffs;
    for (GFElt c : a) {
      PiPoly pc(static_cast<std::size_t>(n_), 0);
      pc[0] = c;
      coeffs.push_back(pc);
    }
    return gp_make(std::move(coeffs), 0, cap_);
  };
  if (!with_y_ && (r.num.size() > 1 || r.den.size() > 1)) throw UsageError("rational function residue in a field without y");
  return frac(poly(r.num), poly(r.den));
}

std::string CycloField::pi_str(const PiPoly& a, long rel) const {
  std::vector<std::string> terms;
  for (int j = 0; j < n_; ++j) {
    const std::int64_t mod = coefficient_modulus(j, rel);
    std::int64_t c = a[j] % mod;
    if (c > mod / 2) c -= mod;
    if (c == 0) continue;
    std::string mono = j == 0 ? "" : j == 1 ? "pi" : "pi^" + std::to_string(j);
    if (mono.empty()) terms.push_back(std::to_string(c));
    else if (c == 1) terms.push_back(mono);
    else if (c == -1) terms.push_back("-" + mono);
    else terms.push_back(std::to_string(c) + "*" + mono);
  }
  return terms.empty() ? "0" : join_terms(terms);
}

std::string CycloField::gp_str(const GaussPoly& a) const {
  if (a.is_zero()) return a.exact ? "0" : "O(pi^" + std::to_string(a.shift) + ")";
  std::vector<std::string> terms;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    std::string c = pi_str(a.coeffs[k], a.rel);
    if (c == "0") continue;
    if (k == 0) {
      terms.push_back(c);
      continue;
    }
    std::string mono = k == 1 ? "y" : "y^" + std::to_string(k);
    if (c == "1") terms.push_back(mono);
    else if (c == "-1") terms.push_back("-" + mono);
    else if (has_top_level_space(c)) terms.push_back("(" + c + ")*" + mono);
    else terms.push_back(c + "*" + mono);
  }
  std::string body = join_terms(terms);
  if (a.shift == 0) return body;
  std::string mono = a.shift == 1 ? "pi" : a.shift > 0 ? "pi^" + std::to_string(a.shift) : "pi^(" + std::to_string(a.shift) + ")";
  if (body == "1") return mono;
  if (body == "-1") return "-" + mono;
  return mono + "*" + (has_top_level_space(body) ? "(" + body + ")" : body);
}

std::string CycloField::str(const CycloElt& a) const {
  std::string num = gp_str(a.num);
  if (a.den == gp_const(1)) return num;
  std::string den = gp_str(a.den);
  if (has_top_level_space(num)) num = "(" + num + ")";
  if (has_top_level_space(den) || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

std::string kummer_label(KummerVerdict v) {
  switch (v) {
    case KummerVerdict::BestWild: return "Best_i";
    case KummerVerdict::BestFerocious: return "Best_ii";
    case KummerVerdict::BestWildT: return "Best_iii";
    case KummerVerdict::BestFerociousS: return "Best_iv";
    case KummerVerdict::BestUnramified: return "Best_v";
    case KummerVerdict::NotBest: return "NotBest";
    case KummerVerdict::Trivial: return "Trivial";
  }
  return "?";
}

bool is_best(KummerVerdict v) { return v != KummerVerdict::NotBest && v != KummerVerdict::Trivial; }

Precheck kummer_precheck(const CycloField& F, const CycloElt& h) {
  const long ep = F.e_prime() * F.p();
  CycloElt w = F.sub(h, F.one());
  if (F.is_zero_to_precision(w)) {
    if (F.absolute_precision(w) > ep) return Precheck::Trivial;
    throw ZeroToPrecision("h - 1 is O(pi^" + std::to_string(F.absolute_precision(w)) + "), cannot compare with e'p = " +
                          std::to_string(ep));
  }
  auto vh = F.valuation(h);
  if (!vh || *vh != 0) throw UsageError("kummer_precheck needs a unit h");
  return *F.valuation(w) > ep ? Precheck::Trivial : Precheck::Proceed;
}

KummerClassification classify_h(const CycloField& F, const CycloElt& h) {
  const ResidueField& k = F.residue();
  const int p = F.p();
  const long ep = F.e_prime() * p;
  KummerClassification c;
  std::optional<long> v;
  try {
    v = F.valuation(h);
  } catch (const ZeroToPrecision& e) {
    throw InsufficientPrecision(e.what());
  }
  if (!v) throw DomainError("h = 0 does not generate a Kummer extension");
  c.v_h = *v;
  c.unit = F.shift(h, -p * floor_div(*v, p));
  if (*v % p != 0) {
    c.verdict = KummerVerdict::BestWild;
    c.v_w = 0;
    c.reason = "v(h) = " + std::to_string(*v) + " is not divisible by p";
    return c;
  }
  ResidueElt ubar = F.residue_class(c.unit);
  c.residue = ubar;
  if (!k.pth_root(ubar)) {
    c.verdict = KummerVerdict::BestFerocious;
    c.u = c.unit;
    c.v_w = 0;
    c.reason = "residue " + k.str(ubar) + " is not a p-th power";
    return c;
  }
  CycloElt w = F.sub(c.unit, F.one());
  if (F.is_zero_to_precision(w)) {
    const long abs = F.absolute_precision(w);
    if (abs > ep) {
      c.reason = "h - 1 = O(pi^" + std::to_string(abs) + ") and " + std::to_string(abs) + " > e'p = " + std::to_string(ep);
      return c;
    }
    throw InsufficientPrecision("h - 1 is O(pi^" + std::to_string(abs) + "); cannot compare with e'p = " +
                                std::to_string(ep));
  }
  const long vw = *F.valuation(w);
  c.v_w = vw;
  if (vw > ep) {
    c.reason = "v(h - 1) = " + std::to_string(vw) + " > e'p = " + std::to_string(ep);
    return c;
  }
  if (vw == ep) {
    CycloElt cc = F.shift(w, -F.m() * p);
    c.c = cc;
    ResidueElt cbar = F.residue_class(cc);
    c.residue = cbar;
    auto x = k.artin_schreier_preimage(cbar);
    if (!x) {
      c.verdict = KummerVerdict::BestUnramified;
      c.reason = "h = 1 + c z^p with residue of c = " + k.str(cbar) + " not of the form x^p - x";
      return c;
    }
    c.verdict = KummerVerdict::NotBest;
    c.root = *x;
    c.g = F.sub(F.one(), F.mul(F.z(), F.lift(*x)));
    c.reason = "h = 1 + c z^p with residue of c = x^p - x for x = " + k.str(*x);
    return c;
  }
  if (vw % p != 0) {
    c.verdict = KummerVerdict::BestWildT;
    c.t = w;
    c.reason = "h = 1 + t with v(t) = " + std::to_string(vw) + " < e'p = " + std::to_string(ep) + " not divisible by p";
    return c;
  }
  CycloElt s = F.shift(F.one(), vw / p);
  CycloElt u = F.shift(w, -vw);
  c.s = s;
  c.u = u;
  ResidueElt ures = F.residue_class(u);
  c.residue = ures;
  auto lambda = k.pth_root(ures);
  if (!lambda) {
    c.verdict = KummerVerdict::BestFerociousS;
    c.reason = "h = 1 + u s^p with v(s) = " + std::to_string(vw / p) + " and residue of u = " + k.str(ures) +
               " not a p-th power";
    return c;
  }
  c.verdict = KummerVerdict::NotBest;
  c.root = *lambda;
  c.g = F.invert(F.add(F.mul(F.lift(*lambda), s), F.one()));
  c.reason = "h = 1 + u s^p with v(s) = " + std::to_string(vw / p) + " and residue of u = (" + k.str(*lambda) + ")^p";
  return c;
}

CycloElt improve_h(const CycloField& F, const KummerClassification& c) {
  if (c.verdict != KummerVerdict::NotBest || !c.g || !c.v_w) throw UsageError("improve_h needs a NotBest classification");
  CycloElt next = F.mul(F.pow(c.unit, c.i), F.pow(*c.g, F.p()));
  CycloElt w = F.sub(next, F.one());
  if (F.is_zero_to_precision(w)) {
    if (F.absolute_precision(w) > *c.v_w) return next;
    throw InsufficientPrecision("h' - 1 is zero to precision " + std::to_string(F.absolute_precision(w)));
  }
  const long vnew = *F.valuation(w);
  if (vnew <= *c.v_w) {
    throw MathAssertion("NoImprovement: v(h' - 1) = " + std::to_string(vnew) + " is not above v(h - 1) = " +
                        std::to_string(*c.v_w));
  }
  return next;
}

KummerOutcome normalize_h(const CycloField& F, const CycloElt& h, int budget) {
  if (budget < 1) throw UsageError("budget must be at least 1");
  KummerOutcome out;
  // v(h - 1) is an integer in [0, e'p] that strictly increases.
  const int limit = std::max<long>(budget, F.e_prime() * F.p() + 1);
  out.budget = limit;
  CycloElt cur = h;
  for (int steps = 0;; ++steps) {
    KummerClassification c = classify_h(F, cur);
    out.steps = steps;
    out.h_star = c.verdict == KummerVerdict::Trivial && !c.v_h ? cur : c.unit;
    if (c.verdict == KummerVerdict::Trivial) {
      out.kind = NormalizeOutcome::Kind::Trivial;
      out.classification = std::move(c);
      return out;
    }
    out.trajectory.push_back(*c.v_w);
    if (is_best(c.verdict)) {
      out.kind = NormalizeOutcome::Kind::BestFound;
      out.classification = std::move(c);
      return out;
    }
    if (steps == limit) {
      out.kind = NormalizeOutcome::Kind::DefectEvidence;
      out.classification = std::move(c);
      return out;
    }
    cur = improve_h(F, c);
  }
}

InvariantsReport kummer_invariants(const KummerClassification& c, const CycloField& F) {
  const int p = F.p();
  InvariantsReport r;
  switch (c.verdict) {
    case KummerVerdict::BestWild:
    case KummerVerdict::BestWildT:
      r.e = p;
      r.type = ExtensionType::Wild;
      break;
    case KummerVerdict::BestFerocious:
    case KummerVerdict::BestFerociousS:
      r.f_res = p;
      r.type = ExtensionType::Ferocious;
      break;
    case KummerVerdict::BestUnramified:
      r.f_res = p;
      r.type = ExtensionType::Unramified;
      break;
    default:
      throw DomainError("invariants need a Best_* classification, got " + kummer_label(c.verdict));
  }
  r.swan = GroupElt(F.e_prime() * p - *c.v_w);
  return r;
}

InvariantsReport kummer_invariants(const KummerOutcome& o, const CycloField& F) {
  switch (o.kind) {
    case NormalizeOutcome::Kind::BestFound: return kummer_invariants(o.classification, F);
    case NormalizeOutcome::Kind::DefectEvidence: {
      InvariantsReport r;
      r.d = F.p();
      r.type = ExtensionType::Defect;
      return r;
    }
    case NormalizeOutcome::Kind::Trivial: break;
  }
  throw DomainError("invariants of a trivial extension");
}

CycloElt random_unit(const CycloField& F, Rng& rng) {
  const int p = F.p();
  auto unit_poly = [&]() {
    const long deg = F.with_y() ? rng.range(0, 1) : 0;
    CycloElt acc = F.zero();
    for (long k = 0; k <= deg; ++k) {
      // A few pi-adic digits per coefficient; the top coefficient is a unit.
      CycloElt coeff = F.from_int(k == deg ? rng.range(1, p - 1) : rng.range(0, p - 1));
      for (long j = 1; j <= 3; ++j) coeff = F.add(coeff, F.shift(F.from_int(rng.range(0, p - 1)), j));
      acc = F.add(acc, F.mul(coeff, F.pow(F.with_y() ? F.y() : F.one(), k)));
    }
    return acc;
  };
  CycloElt g = unit_poly();
  if (rng.coin(3)) g = F.divide(g, unit_poly());
  return g;
}

ProbeResult probe_best_h(const CycloField& F, const CycloElt& h_star, Rng& rng, int count) {
  ProbeResult r;
  const CycloElt w0 = F.sub(h_star, F.one());
  const long v0 = *F.valuation(w0);
  const int p = F.p();
  for (int n = 0; n < count; ++n) {
    CycloElt g = random_unit(F, rng);
    long i = rng.range(1, p - 1);
    CycloElt w = F.sub(F.mul(F.pow(h_star, i), F.pow(g, p)), F.one());
    ++r.probes;
    bool violation = false;
    if (F.is_zero_to_precision(w)) {
      if (F.absolute_precision(w) > v0) violation = true;
      else ++r.inconclusive;
    } else {
      violation = *F.valuation(w) > v0;
    }
    if (violation && r.violations++ == 0) {
      r.first_violation = "g = " + F.str(g) + ", i = " + std::to_string(i) + " gives h^i g^p - 1 = " + F.str(w);
    }
  }
  return r;
}

}  // namespace valuata
