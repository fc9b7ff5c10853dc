#include "valuata/value_group.hpp"

#include <cctype>

#include "valuata/error.hpp"

namespace valuata {

namespace {

int sign_of(const mpq_class& q) { return sgn(q); }

void require_same_rank(const GroupElt& a, const GroupElt& b) {
  if (a.rank() != b.rank()) {
    throw UsageError("value group elements of different ranks: " + a.str() + " vs " + b.str());
  }
}

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw UsageError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw UsageError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

GroupElt::GroupElt(mpq_class value) : first_(std::move(value)) { first_.canonicalize(); }

GroupElt::GroupElt(mpq_class first, mpq_class second)
    : first_(std::move(first)), second_(std::move(second)), lex_(true) {
  first_.canonicalize();
  second_.canonicalize();
}

GroupElt GroupElt::ratio(long num, long den) { return GroupElt(mpq_class(num, den)); }

bool GroupElt::is_positive() const {
  int s = sign_of(first_);
  return s > 0 || (s == 0 && sign_of(second_) > 0);
}

bool GroupElt::is_negative() const {
  int s = sign_of(first_);
  return s < 0 || (s == 0 && sign_of(second_) < 0);
}

GroupElt GroupElt::operator-() const {
  GroupElt r = *this;
  r.first_ = -first_;
  r.second_ = -second_;
  return r;
}

GroupElt& GroupElt::operator+=(const GroupElt& other) {
  require_same_rank(*this, other);
  first_ += other.first_;
  second_ += other.second_;
  return *this;
}

GroupElt& GroupElt::operator-=(const GroupElt& other) {
  require_same_rank(*this, other);
  first_ -= other.first_;
  second_ -= other.second_;
  return *this;
}

GroupElt GroupElt::scale(long n) const {
  GroupElt r = *this;
  r.first_ *= n;
  r.second_ *= n;
  return r;
}

GroupElt GroupElt::divide(long n) const {
  if (n == 0) throw DivisionByZero("GroupElt::divide by 0");
  GroupElt r = *this;
  r.first_ /= n;
  r.second_ /= n;
  return r;
}

std::strong_ordering operator<=>(const GroupElt& a, const GroupElt& b) {
  require_same_rank(a, b);
  int c = cmp(a.first_, b.first_);
  if (c == 0) c = cmp(a.second_, b.second_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const GroupElt& a, const GroupElt& b) {
  require_same_rank(a, b);
  return a.first_ == b.first_ && a.second_ == b.second_;
}

std::string GroupElt::str() const {
  if (!lex_) return rational_str(first_);
  return "(" + rational_str(first_) + ", " + rational_str(second_) + ")";
}

GroupElt GroupElt::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw UsageError("unbalanced group literal '" + std::string(text) + "'");
    t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    if (comma == std::string_view::npos) return GroupElt(parse_rational(t));
    return GroupElt(parse_rational(t.substr(0, comma)), parse_rational(t.substr(comma + 1)));
  }
  return GroupElt(parse_rational(t));
}

bool is_power_of(const mpz_class& d, int p) {
  mpz_class x = abs(d);
  if (x == 0) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

bool ValueGroup::contains(const GroupElt& a) const {
  if (a.rank() != rank()) return false;
  switch (kind) {
    case GroupKind::Int:
      return a.first().get_den() == 1;
    case GroupKind::IntInvP:
      return is_power_of(a.first().get_den(), p);
    case GroupKind::Rat:
    case GroupKind::Lex2:
      return true;
  }
  return false;
}

std::optional<GroupElt> ValueGroup::is_p_divisible(const GroupElt& a) const {
  if (!contains(a)) throw UsageError("element " + a.str() + " is not in group " + name());
  GroupElt b = a.divide(p);
  if (!contains(b)) return std::nullopt;
  return b;
}

std::string ValueGroup::name() const {
  switch (kind) {
    case GroupKind::Int: return "int";
    case GroupKind::IntInvP: return "int-inv-p";
    case GroupKind::Rat: return "rat";
    case GroupKind::Lex2: return "lex2";
  }
  return "?";
}

ValueGroup ValueGroup::parse(std::string_view name, int p) {
  if (name == "int") return {GroupKind::Int, p};
  if (name == "int-inv-p") return {GroupKind::IntInvP, p};
  if (name == "rat") return {GroupKind::Rat, p};
  if (name == "lex2") return {GroupKind::Lex2, p};
  throw UsageError("unknown value group '" + std::string(name) + "'");
}

}  // namespace valuata
