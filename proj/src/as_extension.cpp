#include "valuata/as_extension.hpp"

#include <numeric>

#include "valuata/error.hpp"

namespace valuata {

namespace {

long binomial_mod(int n, int k, int p) {
  // n < p in every use, so Pascal's triangle mod p is exact.
  std::vector<long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] = (row[j] + row[j - 1]) % p;
  }
  return row[k];
}

}  // namespace

ASExtension::ASExtension(SeriesField base, Series f) : base_(std::move(base)), f_(std::move(f)) {
  if (f_.is_exact_zero()) {
    trivial_ = true;
    trivial_reason_ = "f = 0";
    return;
  }
  if (!f_.has_terms()) {
    if (f_.precision()->is_positive()) {
      trivial_ = true;
      trivial_reason_ = "f is zero to precision " + f_.precision()->str() + " > 0, so v(f) > 0";
      return;
    }
    throw InsufficientPrecision("cannot decide whether f lies in the maximal ideal");
  }
  const GroupElt& v = f_.leading().exp;
  if (v.is_positive()) {
    trivial_ = true;
    trivial_reason_ = "v(f) = " + v.str() + " > 0";
  } else if (v.is_zero()) {
    ResidueElt fbar = base_.residue_class(f_);
    if (auto x = base_.residue().artin_schreier_preimage(fbar)) {
      trivial_ = true;
      trivial_reason_ = "residue of f equals x^p - x for x = " + base_.residue().str(*x);
    }
  }
}

void ASExtension::require_nontrivial(const char* op) const {
  if (trivial_) throw DomainError(std::string(op) + ": extension is trivial (" + trivial_reason_ + ")");
}

ExtElt ASExtension::zero() const { return ExtElt{std::vector<Series>(static_cast<std::size_t>(p()), base_.zero())}; }

ExtElt ASExtension::alpha() const {
  ExtElt a = zero();
  a.coeffs[1 % p()] = base_.one();
  return a;
}

ExtElt ASExtension::from_base(const Series& c) const {
  ExtElt a = zero();
  a.coeffs[0] = c;
  return a;
}

ExtElt ASExtension::make(std::vector<Series> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(p())) throw UsageError("extension element has more than p coefficients");
  coeffs.resize(static_cast<std::size_t>(p()), base_.zero());
  return ExtElt{std::move(coeffs)};
}

ExtElt ASExtension::add(const ExtElt& a, const ExtElt& b) const {
  ExtElt r = zero();
  for (int i = 0; i < p(); ++i) r.coeffs[i] = base_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElt ASExtension::neg(const ExtElt& a) const {
  ExtElt r = zero();
  for (int i = 0; i < p(); ++i) r.coeffs[i] = base_.neg(a.coeffs[i]);
  return r;
}

ExtElt ASExtension::sub(const ExtElt& a, const ExtElt& b) const { return add(a, neg(b)); }

ExtElt ASExtension::scale(const ExtElt& a, const Series& c) const {
  ExtElt r = zero();
  for (int i = 0; i < p(); ++i) r.coeffs[i] = base_.mul(a.coeffs[i], c);
  return r;
}

ExtElt ASExtension::mul(const ExtElt& a, const ExtElt& b) const {
  const int n = p();
  std::vector<Series> prod(static_cast<std::size_t>(2 * n - 1), base_.zero());
  for (int i = 0; i < n; ++i) {
    if (a.coeffs[i].is_exact_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coeffs[j].is_exact_zero()) continue;
      prod[i + j] = base_.add(prod[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  // alpha^k = alpha^(k-p+1) + f alpha^(k-p) for k >= p.
  for (int k = 2 * n - 2; k >= n; --k) {
    if (prod[k].is_exact_zero()) continue;
    prod[k - n + 1] = base_.add(prod[k - n + 1], prod[k]);
    prod[k - n] = base_.add(prod[k - n], base_.mul(prod[k], f_));
  }
  prod.resize(static_cast<std::size_t>(n));
  return ExtElt{std::move(prod)};
}

ExtElt ASExtension::pow(const ExtElt& a, unsigned e) const {
  ExtElt r = one(), base = a;
  while (e) {
    if (e & 1U) r = mul(r, base);
    e >>= 1U;
    if (e) base = mul(base, base);
  }
  return r;
}

ExtElt ASExtension::sigma(const ExtElt& a, int power) const {
  const int n = p();
  if (power < 0 || power >= n) throw UsageError("sigma power must lie in [0, p)");
  if (power == 0) return a;
  const ResidueField& k = base_.residue();
  ExtElt r = zero();
  for (int i = 0; i < n; ++i) {
    if (a.coeffs[i].is_exact_zero()) continue;
    // (alpha + power)^i = sum_l C(i, l) power^(i-l) alpha^l
    long pw = 1;
    for (int l = i; l >= 0; --l) {
      long c = binomial_mod(i, l, n) * pw % n;
      if (c != 0) r.coeffs[l] = base_.add(r.coeffs[l], base_.scale(a.coeffs[i], k.from_int(c)));
      pw = pw * power % n;
    }
  }
  return r;
}

ExtElt ASExtension::conjugate_cofactor(const ExtElt& a) const {
  ExtElt r = one();
  for (int i = 1; i < p(); ++i) r = mul(r, sigma(a, i));
  return r;
}

Series ASExtension::norm(const ExtElt& a) const {
  ExtElt n = mul(a, conjugate_cofactor(a));
  if (!in_base(n)) throw MathAssertion("ResidualAlphaComponent: conjugate product is not in K: " + str(n));
  return n.coeffs[0];
}

Series ASExtension::trace(const ExtElt& a) const {
  ExtElt t = a;
  for (int i = 1; i < p(); ++i) t = add(t, sigma(a, i));
  if (!in_base(t)) throw MathAssertion("ResidualAlphaComponent: conjugate sum is not in K: " + str(t));
  return t.coeffs[0];
}

std::vector<std::vector<Series>> ASExtension::multiplication_matrix(const ExtElt& a) const {
  const int n = p();
  std::vector<std::vector<Series>> m(static_cast<std::size_t>(n), std::vector<Series>(static_cast<std::size_t>(n)));
  ExtElt col = a;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.coeffs[i];
    col = mul(col, alpha());
  }
  return m;
}

namespace {

Series cofactor_det(const SeriesField& k, const std::vector<std::vector<Series>>& m, std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n) return k.one();
  Series det = k.zero();
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int col = cols[c];
    if (!m[row][col].is_exact_zero()) {
      cols.erase(cols.begin() + static_cast<long>(c));
      Series minor = cofactor_det(k, m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(c), col);
      Series term = k.mul(m[row][col], minor);
      det = sign > 0 ? k.add(det, term) : k.sub(det, term);
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

Series ASExtension::norm_by_determinant(const ExtElt& a) const {
  auto m = multiplication_matrix(a);
  std::vector<int> cols(static_cast<std::size_t>(p()));
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_det(base_, m, cols, 0);
}

Series ASExtension::trace_by_matrix(const ExtElt& a) const {
  auto m = multiplication_matrix(a);
  Series t = base_.zero();
  for (int i = 0; i < p(); ++i) t = base_.add(t, m[i][i]);
  return t;
}

GroupElt ASExtension::valuation(const ExtElt& a) const {
  require_nontrivial("valuation_L");
  Series n = norm(a);
  auto v = base_.valuation(n);
  if (!v) throw DomainError("valuation of the zero element");
  return v->divide(p());
}

ExtElt ASExtension::invert(const ExtElt& a, std::optional<GroupElt> target) const {
  require_nontrivial("invert_ext");
  ExtElt cof = conjugate_cofactor(a);
  ExtElt n = mul(a, cof);
  if (!in_base(n)) throw MathAssertion("ResidualAlphaComponent: conjugate product is not in K: " + str(n));
  return scale(cof, base_.invert(n.coeffs[0], target));
}

bool ASExtension::in_base(const ExtElt& a) const {
  for (int i = 1; i < p(); ++i) {
    if (a.coeffs[i].has_terms()) return false;
  }
  return true;
}

bool ASExtension::equal_to_precision(const ExtElt& a, const ExtElt& b) const { return is_zero_to_precision(sub(a, b)); }

bool ASExtension::is_zero_to_precision(const ExtElt& a) const {
  for (const auto& c : a.coeffs) {
    if (c.has_terms()) return false;
  }
  return true;
}

std::string ASExtension::str(const ExtElt& a) const {
  std::string out;
  for (int i = 0; i < p(); ++i) {
    const Series& c = a.coeffs[i];
    if (c.is_exact_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = "(" + base_.str(c) + ")";
    if (i == 0) out += cs;
    else if (i == 1) out += cs + "*alpha";
    else out += cs + "*alpha^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace valuata
