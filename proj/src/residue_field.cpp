#include "valuata/residue_field.hpp"

#include <algorithm>

#include "valuata/error.hpp"

namespace valuata {

namespace {

int modp(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

long inv_modp(long a, int p) {
  long r = 1, b = modp(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Solves M t = rhs over GF(p). Rows of M are equations.
std::optional<std::vector<int>> solve_mod_p(std::vector<std::vector<int>> m, std::vector<int> rhs, int p,
                                            std::size_t unknowns) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    long iv = inv_modp(m[r][c], p);
    for (std::size_t k = c; k < unknowns; ++k) m[r][k] = static_cast<int>(m[r][k] * iv % p);
    rhs[r] = static_cast<int>(rhs[r] * iv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (std::size_t k = c; k < unknowns; ++k) m[i][k] = modp(m[i][k] - f * m[r][k], p);
      rhs[i] = modp(rhs[i] - f * rhs[r], p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<int> t(unknowns, 0);
  for (std::size_t i = 0; i < r; ++i) t[pivot_col[i]] = rhs[i];
  return t;
}

}  // namespace

ResidueField::ResidueField(std::shared_ptr<const GaloisField> base, ResidueKind kind)
    : base_(std::move(base)), kind_(kind) {}

ResidueField ResidueField::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw UsageError("residue field must be gf:q or ratfunc:q");
  std::string kind(spec.substr(0, colon));
  long q = 0;
  try {
    q = std::stol(std::string(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    throw UsageError("malformed residue field order in '" + std::string(spec) + "'");
  }
  if (kind == "gf") return finite(q);
  if (kind == "ratfunc") return rational_functions(q);
  throw UsageError("unknown residue field kind '" + kind + "'");
}

std::string ResidueField::name() const {
  std::string q = std::to_string(base_->order());
  return kind_ == ResidueKind::Finite ? "gf:" + q : "ratfunc:" + q;
}

void ResidueField::check(const ResidueElt& a) const {
  if (kind_ == ResidueKind::Finite && (a.num.size() > 1 || a.den != GFPoly{1})) {
    throw UsageError("rational function supplied to finite residue field");
  }
}

ResidueElt ResidueField::y() const {
  if (kind_ != ResidueKind::RationalFunctions) throw UsageError("'y' is not an element of " + name());
  return {{0, 1}, {1}};
}

ResidueElt ResidueField::fraction(GFPoly num, GFPoly den) const {
  const GaloisField& k = *base_;
  gfpoly::trim(num);
  gfpoly::trim(den);
  if (den.empty()) throw DivisionByZero("zero denominator in residue field");
  if (num.empty()) return zero();
  GFPoly g = gfpoly::gcd(k, num, den);
  if (gfpoly::degree(g) > 0) {
    num = gfpoly::divmod(k, num, g).first;
    den = gfpoly::divmod(k, den, g).first;
  }
  GFElt lead = den.back();
  if (lead != 1) {
    GFElt li = k.inv(lead);
    num = gfpoly::scale(k, num, li);
    den = gfpoly::scale(k, den, li);
  }
  ResidueElt r{std::move(num), std::move(den)};
  check(r);
  return r;
}

ResidueElt ResidueField::add(const ResidueElt& a, const ResidueElt& b) const {
  const GaloisField& k = *base_;
  if (a.den == b.den) return fraction(gfpoly::add(k, a.num, b.num), a.den);
  return fraction(gfpoly::add(k, gfpoly::mul(k, a.num, b.den), gfpoly::mul(k, b.num, a.den)),
                  gfpoly::mul(k, a.den, b.den));
}

ResidueElt ResidueField::neg(const ResidueElt& a) const { return {gfpoly::neg(*base_, a.num), a.den}; }

ResidueElt ResidueField::sub(const ResidueElt& a, const ResidueElt& b) const { return add(a, neg(b)); }

ResidueElt ResidueField::mul(const ResidueElt& a, const ResidueElt& b) const {
  const GaloisField& k = *base_;
  if (a.is_zero() || b.is_zero()) return zero();
  if (a.den == GFPoly{1} && b.den == GFPoly{1} && a.num.size() == 1 && b.num.size() == 1) {
    return constant(k.mul(a.num[0], b.num[0]));
  }
  return fraction(gfpoly::mul(k, a.num, b.num), gfpoly::mul(k, a.den, b.den));
}

ResidueElt ResidueField::inv(const ResidueElt& a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero residue");
  return fraction(a.den, a.num);
}

ResidueElt ResidueField::pow(const ResidueElt& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  const GaloisField& k = *base_;
  return fraction(gfpoly::pow(k, a.num, static_cast<unsigned>(e)), gfpoly::pow(k, a.den, static_cast<unsigned>(e)));
}

ResidueElt ResidueField::frobenius(const ResidueElt& a) const {
  // Frobenius preserves coprimality and monicity, so no reduction is needed.
  return {gfpoly::frobenius(*base_, a.num), gfpoly::frobenius(*base_, a.den)};
}

std::optional<ResidueElt> ResidueField::pth_root(const ResidueElt& c) const {
  const GaloisField& k = *base_;
  auto rn = gfpoly::pth_root(k, c.num);
  auto rd = gfpoly::pth_root(k, c.den);
  if (!rn || !rd) return std::nullopt;
  return ResidueElt{std::move(*rn), std::move(*rd)};
}

ResidueField::ASPreimage ResidueField::artin_schreier_solve(const ResidueElt& c) const {
  const GaloisField& k = *base_;
  if (kind_ == ResidueKind::Finite) {
    auto x = k.artin_schreier_preimage(c.is_zero() ? 0 : c.num[0]);
    if (!x) return {std::nullopt, 0};
    return {constant(*x), 0};
  }

  // x = r/s reduced gives x^p - x = (r^p - r s^(p-1)) / s^p, already reduced,
  // so den(c) must be s^p and num(c) = r^p - r s^(p-1) with
  // deg r <= max(deg num, deg den) / p.
  const int p = k.p();
  const int m = k.degree();
  const int bound = std::max(gfpoly::degree(c.num), gfpoly::degree(c.den)) / p + 1;
  if (c.is_zero()) return {zero(), bound};
  auto s = gfpoly::pth_root(k, c.den);
  if (!s) return {std::nullopt, bound};
  const GFPoly s_pow = gfpoly::pow(k, *s, static_cast<unsigned>(p - 1));

  auto image = [&](const GFPoly& r) { return gfpoly::sub(k, gfpoly::frobenius(k, r), gfpoly::mul(k, r, s_pow)); };

  const std::size_t unknowns = static_cast<std::size_t>(bound + 1) * m;
  std::vector<GFPoly> columns;
  columns.reserve(unknowns);
  int out_deg = gfpoly::degree(c.num);
  for (int i = 0; i <= bound; ++i) {
    for (int j = 0; j < m; ++j) {
      GFElt e = 1;
      for (int t = 0; t < j; ++t) e *= static_cast<GFElt>(p);
      columns.push_back(image(gfpoly::monomial(e, i)));
      out_deg = std::max(out_deg, gfpoly::degree(columns.back()));
    }
  }
  const std::size_t eqs = static_cast<std::size_t>(out_deg + 1) * m;
  std::vector<std::vector<int>> mat(eqs, std::vector<int>(unknowns, 0));
  std::vector<int> rhs(eqs, 0);
  for (std::size_t col = 0; col < unknowns; ++col) {
    const GFPoly& img = columns[col];
    for (int d = 0; d <= gfpoly::degree(img); ++d) {
      std::vector<int> dg = k.digits(img[d]);
      for (int j = 0; j < m; ++j) mat[static_cast<std::size_t>(d) * m + j][col] = dg[j];
    }
  }
  for (int d = 0; d <= gfpoly::degree(c.num); ++d) {
    std::vector<int> dg = k.digits(c.num[d]);
    for (int j = 0; j < m; ++j) rhs[static_cast<std::size_t>(d) * m + j] = dg[j];
  }
  auto sol = solve_mod_p(std::move(mat), std::move(rhs), p, unknowns);
  if (!sol) return {std::nullopt, bound};
  GFPoly r(static_cast<std::size_t>(bound + 1), 0);
  for (int i = 0; i <= bound; ++i) {
    std::vector<int> dg(sol->begin() + static_cast<long>(i) * m, sol->begin() + static_cast<long>(i + 1) * m);
    r[i] = k.from_digits(dg);
  }
  gfpoly::trim(r);
  ResidueElt x = fraction(r, *s);
  if (sub(frobenius(x), x) != c) throw MathAssertion("Artin-Schreier linear solve produced a wrong preimage");
  return {x, bound};
}

std::string ResidueField::str(const ResidueElt& a) const {
  const GaloisField& k = *base_;
  if (kind_ == ResidueKind::Finite) return a.is_zero() ? "0" : k.str(a.num[0]);
  std::string num = gfpoly::str(k, a.num, "y");
  if (a.den == GFPoly{1}) return num;
  std::string den = gfpoly::str(k, a.den, "y");
  if (num.find_first_of("+-", 1) != std::string::npos) num = "(" + num + ")";
  if (den.find_first_of("+-*") != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace valuata
