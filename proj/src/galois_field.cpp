#include "valuata/galois_field.hpp"

#include <algorithm>
#include <map>

#include "valuata/error.hpp"

namespace valuata {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mod(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Needs parentheses when used as a multiplicative factor.
bool is_compound(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos || (!s.empty() && s.front() == '-');
}

}  // namespace

std::optional<std::vector<int>> default_modulus(int p, int m) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},     // w^2 + w + 1
      {{2, 3}, {1, 1, 0, 1}},  // w^3 + w + 1
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},     // w^2 + 2w + 2
      {{3, 3}, {1, 2, 0, 1}},  // w^3 + 2w + 1
      {{5, 2}, {2, 4, 1}},     // w^2 + 4w + 2
      {{7, 2}, {3, 6, 1}},
  };
  auto it = table.find({p, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

GaloisField::GaloisField(int p, int m, std::vector<int> modulus) : p_(p), m_(m) {
  if (!is_prime(p)) throw UsageError("GF characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw UsageError("GF degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1 << 20)) throw UsageError("GF order too large for table arithmetic");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    modulus_ = {0, 1};
  } else if (modulus.empty()) {
    auto def = default_modulus(p, m);
    if (!def) {
      throw UsageError("no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                       "); supply one");
    }
    modulus_ = *def;
  } else {
    modulus_ = std::move(modulus);
  }
  if (static_cast<int>(modulus_.size()) != m + 1 || mod(modulus_.back(), p) != 1) {
    throw UsageError("GF modulus must be monic of degree m");
  }
  for (int& c : modulus_) c = mod(c, p);

  // Find a primitive element; its existence also certifies the modulus is
  // irreducible (a reducible quotient has fewer than q - 1 units).
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  for (GFElt g = 2; g < q_; ++g) {
    GFElt x = 1;
    std::uint32_t k = 0;
    bool ok = true;
    std::vector<bool> seen(q_, false);
    for (; k < q_ - 1; ++k) {
      if (seen[x] || x == 0) {
        ok = false;
        break;
      }
      seen[x] = true;
      exp_[k] = x;
      x = mul_slow(x, g);
    }
    if (ok && x == 1) {
      for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  throw UsageError("GF modulus is not irreducible");
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int m, std::vector<int> modulus) {
  return std::make_shared<const GaloisField>(p, m, std::move(modulus));
}

std::shared_ptr<const GaloisField> GaloisField::of_order(long q, std::vector<int> modulus) {
  if (q < 2) throw UsageError("GF order must be >= 2");
  long p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw UsageError("GF order " + std::to_string(q) + " is not a prime power");
  return make(static_cast<int>(p), m, std::move(modulus));
}

GFElt GaloisField::from_int(long n) const { return static_cast<GFElt>(mod(n, p_)); }

std::vector<int> GaloisField::digits(GFElt a) const {
  std::vector<int> d(m_);
  for (int i = 0; i < m_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

GFElt GaloisField::from_digits(const std::vector<int>& d) const {
  GFElt a = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    a = a * p_ + static_cast<GFElt>(i < static_cast<int>(d.size()) ? mod(d[i], p_) : 0);
  }
  return a;
}

GFElt GaloisField::add(GFElt a, GFElt b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  GFElt r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

GFElt GaloisField::neg(GFElt a) const {
  if (p_ == 2) return a;
  GFElt r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

GFElt GaloisField::sub(GFElt a, GFElt b) const { return add(a, neg(b)); }

GFElt GaloisField::mul_slow(GFElt a, GFElt b) const {
  std::vector<int> da = digits(a), db = digits(b);
  std::vector<long> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) prod[i + j] += static_cast<long>(da[i]) * db[j];
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    long c = mod(prod[d], p_);
    if (c == 0) continue;
    for (int i = 0; i <= m_; ++i) prod[d - m_ + i] -= c * modulus_[i];
  }
  std::vector<int> r(m_);
  for (int i = 0; i < m_; ++i) r[i] = mod(prod[i], p_);
  return from_digits(r);
}

GFElt GaloisField::mul(GFElt a, GFElt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GFElt GaloisField::inv(GFElt a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GFElt GaloisField::pow(GFElt a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return 0;
  }
  long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

GFElt GaloisField::pth_root(GFElt c) const { return pow(c, static_cast<long long>(q_ / p_)); }

GFElt GaloisField::trace(GFElt c) const {
  GFElt t = 0, x = c;
  for (int i = 0; i < m_; ++i) {
    t = add(t, x);
    x = frobenius(x);
  }
  return t;
}

std::optional<GFElt> GaloisField::artin_schreier_preimage(GFElt c) const {
  for (GFElt x = 0; x < q_; ++x) {
    if (sub(frobenius(x), x) == c) return x;
  }
  return std::nullopt;
}

std::string GaloisField::str(GFElt a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::vector<int> d = digits(a);
  std::string out;
  for (int i = m_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
    if (mono.empty()) {
      out += std::to_string(d[i]);
    } else if (d[i] == 1) {
      out += mono;
    } else {
      out += std::to_string(d[i]) + "*" + mono;
    }
  }
  return out;
}

namespace gfpoly {

int degree(const GFPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(GFPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

GFPoly constant(GFElt c) { return c == 0 ? GFPoly{} : GFPoly{c}; }

GFPoly monomial(GFElt c, int deg) {
  if (c == 0) return {};
  GFPoly r(deg + 1, 0);
  r[deg] = c;
  return r;
}

GFPoly add(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  GFPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

GFPoly neg(const GaloisField& k, const GFPoly& a) {
  GFPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.neg(a[i]);
  return r;
}

GFPoly sub(const GaloisField& k, const GFPoly& a, const GFPoly& b) { return add(k, a, neg(k, b)); }

GFPoly scale(const GaloisField& k, const GFPoly& a, GFElt c) {
  if (c == 0) return {};
  GFPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
  return r;
}

GFPoly mul(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  if (a.empty() || b.empty()) return {};
  GFPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

GFPoly pow(const GaloisField& k, const GFPoly& a, unsigned e) {
  GFPoly r{1}, base = a;
  while (e) {
    if (e & 1U) r = mul(k, r, base);
    e >>= 1U;
    if (e) base = mul(k, base, base);
  }
  return r;
}

std::pair<GFPoly, GFPoly> divmod(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  GFPoly rem = a;
  int db = degree(b);
  if (degree(rem) < db) return {{}, rem};
  GFPoly quo(rem.size() - b.size() + 1, 0);
  GFElt lead_inv = k.inv(b.back());
  for (int d = degree(rem); d >= db; --d) {
    GFElt c = k.mul(rem[d], lead_inv);
    if (c == 0) continue;
    quo[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = k.sub(rem[d - db + i], k.mul(c, b[i]));
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

GFPoly monic(const GaloisField& k, const GFPoly& a) {
  if (a.empty()) return a;
  return scale(k, a, k.inv(a.back()));
}

GFPoly gcd(const GaloisField& k, GFPoly a, GFPoly b) {
  while (!b.empty()) {
    GFPoly r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

GFPoly derivative(const GaloisField& k, const GFPoly& a) {
  if (a.size() <= 1) return {};
  GFPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(k.from_int(static_cast<long>(i)), a[i]);
  trim(r);
  return r;
}

GFPoly frobenius(const GaloisField& k, const GFPoly& a) {
  if (a.empty()) return {};
  const int p = k.p();
  GFPoly r((a.size() - 1) * p + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * p] = k.frobenius(a[i]);
  return r;
}

std::optional<GFPoly> pth_root(const GaloisField& k, const GFPoly& a) {
  const std::size_t p = static_cast<std::size_t>(k.p());
  if (a.empty()) return GFPoly{};
  GFPoly r((a.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % p != 0) return std::nullopt;
    r[i / p] = k.pth_root(a[i]);
  }
  return r;
}

std::vector<std::pair<GFPoly, int>> squarefree_factorization(const GaloisField& k, const GFPoly& a) {
  std::vector<std::pair<GFPoly, int>> out;
  if (degree(a) < 1) return out;
  GFPoly f = monic(k, a);
  GFPoly c = gcd(k, f, derivative(k, f));
  GFPoly w = divmod(k, f, c).first;
  int i = 1;
  while (degree(w) > 0) {
    GFPoly y = gcd(k, w, c);
    GFPoly fac = divmod(k, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(k, fac), i);
    w = y;
    c = divmod(k, c, y).first;
    ++i;
  }
  if (degree(c) > 0) {
    auto root = pth_root(k, c);
    if (!root) throw MathAssertion("square-free factorization: residual factor is not a p-th power");
    for (auto& [g, mult] : squarefree_factorization(k, *root)) out.emplace_back(g, mult * k.p());
  }
  return out;
}

std::string str(const GaloisField& k, const GFPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    std::string coeff = k.str(a[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) {
      term = is_compound(coeff) ? "(" + coeff + ")" : coeff;
    } else if (a[i] == 1) {
      term = mono;
    } else {
      term = (is_compound(coeff) ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

}  // namespace gfpoly

}  // namespace valuata
