#include "valuata/hahn_series.hpp"

#include <algorithm>

#include "valuata/error.hpp"

namespace valuata {

namespace {

constexpr int kMaxInversionSteps = 100000;

bool needs_parens(const std::string& s) { return s.find_first_of("+-/", 1) != std::string::npos; }

}  // namespace

std::optional<GroupElt> min_precision(const std::optional<GroupElt>& a, const std::optional<GroupElt>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

SeriesField::SeriesField(ResidueField residue, ValueGroup group, GroupElt default_precision)
    : residue_(std::move(residue)), group_(group), default_precision_(std::move(default_precision)) {
  if (group_.p != residue_.p()) {
    throw UsageError("value group prime " + std::to_string(group_.p) + " differs from residue characteristic " +
                     std::to_string(residue_.p()));
  }
  if (default_precision_.rank() != group_.rank() || !default_precision_.is_positive()) {
    throw UsageError("default precision must be a strictly positive element of " + group_.name());
  }
}

std::string SeriesField::name() const {
  return "K(p=" + std::to_string(p()) + ", k=" + residue_.name() + ", group=" + group_.name() +
         ", precision=" + default_precision_.str() + ")";
}

void SeriesField::require_exponent(const GroupElt& e) const {
  if (!group_.contains(e)) throw UsageError("exponent " + e.str() + " is not in value group " + group_.name());
}

Series SeriesField::normalize(std::vector<Term> terms, std::optional<GroupElt> precision) const {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  Series out;
  out.precision_ = std::move(precision);
  for (auto& t : terms) {
    if (out.precision_ && t.exp >= *out.precision_) break;
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff = residue_.add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      continue;
    }
    if (t.coeff.is_zero()) continue;
    out.terms_.push_back(std::move(t));
  }
  return out;
}

Series SeriesField::constant(const ResidueElt& c) const {
  Series s;
  if (!c.is_zero()) s.terms_.push_back({group_.zero(), c});
  return s;
}

Series SeriesField::monomial(const ResidueElt& c, const GroupElt& exp) const {
  require_exponent(exp);
  Series s;
  if (!c.is_zero()) s.terms_.push_back({exp, c});
  return s;
}

Series SeriesField::from_terms(std::vector<Term> terms, std::optional<GroupElt> precision) const {
  for (const auto& t : terms) require_exponent(t.exp);
  if (precision && precision->rank() != group_.rank()) throw UsageError("precision rank mismatch");
  return normalize(std::move(terms), std::move(precision));
}

Series SeriesField::truncate(const Series& a, const GroupElt& prec) const {
  Series out;
  out.precision_ = min_precision(a.precision_, prec);
  for (const auto& t : a.terms_) {
    if (t.exp >= *out.precision_) break;
    out.terms_.push_back(t);
  }
  return out;
}

Series SeriesField::add(const Series& a, const Series& b) const {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  // Merge of two sorted lists.
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
      terms.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
      terms.push_back(b.terms_[j++]);
    } else {
      ResidueElt c = residue_.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (!c.is_zero()) terms.push_back({a.terms_[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  Series out;
  out.precision_ = min_precision(a.precision_, b.precision_);
  for (auto& t : terms) {
    if (out.precision_ && t.exp >= *out.precision_) break;
    out.terms_.push_back(std::move(t));
  }
  return out;
}

Series SeriesField::neg(const Series& a) const {
  Series out = a;
  for (auto& t : out.terms_) t.coeff = residue_.neg(t.coeff);
  return out;
}

Series SeriesField::sub(const Series& a, const Series& b) const { return add(a, neg(b)); }

Series SeriesField::mul(const Series& a, const Series& b) const {
  if (a.is_exact_zero() || b.is_exact_zero()) return zero();
  // prec(ab) = min(prec(a) + v(b), prec(b) + v(a)), with lower bounds when a
  // factor has no known terms.
  std::optional<GroupElt> prec;
  if (a.precision_) prec = min_precision(prec, *a.precision_ + *valuation_lower_bound(b));
  if (b.precision_) prec = min_precision(prec, *b.precision_ + *valuation_lower_bound(a));
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      GroupElt e = ta.exp + tb.exp;
      if (prec && e >= *prec) continue;
      terms.push_back({std::move(e), residue_.mul(ta.coeff, tb.coeff)});
    }
  }
  return normalize(std::move(terms), std::move(prec));
}

Series SeriesField::scale(const Series& a, const ResidueElt& c) const {
  if (c.is_zero()) return zero();
  Series out = a;
  for (auto& t : out.terms_) t.coeff = residue_.mul(t.coeff, c);
  return out;
}

Series SeriesField::shift(const Series& a, const ResidueElt& c, const GroupElt& exp) const {
  if (c.is_zero()) return zero();
  Series out = scale(a, c);
  for (auto& t : out.terms_) t.exp += exp;
  if (out.precision_) *out.precision_ += exp;
  return out;
}

Series SeriesField::pow(const Series& a, unsigned e) const {
  Series r = one(), base = a;
  while (e) {
    if (e & 1U) r = mul(r, base);
    e >>= 1U;
    if (e) base = mul(base, base);
  }
  return r;
}

std::optional<GroupElt> SeriesField::valuation(const Series& a) const {
  if (a.has_terms()) return a.terms_.front().exp;
  if (a.is_exact()) return std::nullopt;
  throw ZeroToPrecision("valuation unknown: element is zero to precision " + a.precision_->str());
}

std::optional<GroupElt> SeriesField::valuation_lower_bound(const Series& a) const {
  if (a.has_terms()) return a.terms_.front().exp;
  return a.precision_;
}

bool SeriesField::equal_to_precision(const Series& a, const Series& b) const { return !sub(a, b).has_terms(); }

Series SeriesField::invert(const Series& a, std::optional<GroupElt> target) const {
  if (a.is_exact_zero()) throw DivisionByZero("inverse of exact zero series");
  if (!a.has_terms()) throw ZeroToPrecision("cannot invert an element that is zero to precision");
  const GroupElt target_prec = target ? *target : default_precision_;
  const Term& lead = a.terms_.front();
  const ResidueElt c_inv = residue_.inv(lead.coeff);
  const GroupElt gamma = lead.exp;

  // a = c X^gamma (1 + m) with v(m) > 0.
  Series m = sub(shift(a, c_inv, -gamma), one());
  if (m.is_exact_zero()) return monomial(c_inv, -gamma);

  GroupElt rel = target_prec;
  if (m.precision_) rel = std::min(rel, *m.precision_);
  Series acc = one();
  Series power = one();
  if (m.has_terms()) {
    const GroupElt& delta = m.terms_.front().exp;
    if (delta.rank() == 2 && delta.first() == 0 && rel.first() > 0) {
      throw InsufficientPrecision("inverse needs infinitely many terms below " + rel.str() +
                                  " (unit part has infinitesimal valuation " + delta.str() + ")");
    }
    const Series neg_m = neg(m);
    for (int step = 0;; ++step) {
      if (step > kMaxInversionSteps) throw InsufficientPrecision("series inversion did not reach target precision");
      power = truncate(mul(power, neg_m), rel);
      if (!power.has_terms()) break;
      acc = add(acc, power);
    }
  }
  acc = truncate(acc, rel);
  return shift(acc, c_inv, -gamma);
}

ResidueElt SeriesField::residue_class(const Series& a) const {
  if (!a.has_terms()) {
    if (a.is_exact() || a.precision_->is_positive()) return residue_.zero();
    throw InsufficientPrecision("residue class unknown: precision " + a.precision_->str() + " <= 0");
  }
  const Term& lead = a.terms_.front();
  if (lead.exp.is_negative()) throw UsageError("residue class of an element of negative valuation " + lead.exp.str());
  if (lead.exp.is_zero()) return lead.coeff;
  return residue_.zero();
}

Series SeriesField::frobenius(const Series& a) const {
  const int p = this->p();
  Series out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) out.terms_.push_back({t.exp.scale(p), residue_.frobenius(t.coeff)});
  if (a.precision_) out.precision_ = a.precision_->scale(p);
  return out;
}

std::optional<Series> SeriesField::pth_root(const Series& a) const {
  if (!supports_pth_root()) return std::nullopt;
  const int p = this->p();
  Series out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) {
    auto root = residue_.pth_root(t.coeff);
    if (!root) return std::nullopt;
    out.terms_.push_back({t.exp.divide(p), std::move(*root)});
  }
  if (a.precision_) out.precision_ = a.precision_->divide(p);
  return out;
}

Series SeriesField::artin_schreier_shift(const Series& f, const Series& h) const {
  return sub(add(f, frobenius(h)), h);
}

std::string SeriesField::str(const Series& a) const {
  std::string out;
  for (const auto& t : a.terms_) {
    std::string coeff = residue_.str(t.coeff);
    std::string term;
    if (t.exp.is_zero()) {
      term = coeff;
    } else {
      std::string mono = "X^(" + (t.exp.rank() == 2 ? t.exp.first().get_str() + ", " + t.exp.second().get_str()
                                                   : t.exp.str()) + ")";
      if (t.coeff == residue_.one()) {
        term = mono;
      } else {
        term = (needs_parens(coeff) ? "(" + coeff + ")" : coeff) + "*" + mono;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (a.precision_) {
    const GroupElt& pr = *a.precision_;
    std::string o = "O(X^(" + (pr.rank() == 2 ? pr.first().get_str() + ", " + pr.second().get_str() : pr.str()) + "))";
    out += out.empty() ? o : " + " + o;
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace valuata
