#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace valuata {

/// Element of an ordered abelian value group: either a single exact rational
/// (rank 1) or a lexicographically ordered pair of rationals (rank 2).
class GroupElt {
 public:
  GroupElt() = default;
  explicit GroupElt(mpq_class value);
  GroupElt(mpq_class first, mpq_class second);
  explicit GroupElt(long value) : GroupElt(mpq_class(value)) {}

  /// Rank-1 element a/b.
  static GroupElt ratio(long num, long den);
  static GroupElt zero(int rank) { return rank == 2 ? GroupElt(0, 0) : GroupElt(); }

  int rank() const { return lex_ ? 2 : 1; }
  const mpq_class& first() const { return first_; }
  const mpq_class& second() const { return second_; }

  bool is_zero() const { return first_ == 0 && second_ == 0; }
  bool is_positive() const;
  bool is_negative() const;

  GroupElt operator-() const;
  GroupElt& operator+=(const GroupElt& other);
  GroupElt& operator-=(const GroupElt& other);
  friend GroupElt operator+(GroupElt a, const GroupElt& b) { return a += b; }
  friend GroupElt operator-(GroupElt a, const GroupElt& b) { return a -= b; }

  GroupElt scale(long n) const;
  /// Exact division in the divisible hull; the result need not lie in the
  /// original group.
  GroupElt divide(long n) const;

  /// Throws UsageError when the ranks differ.
  friend std::strong_ordering operator<=>(const GroupElt& a, const GroupElt& b);
  friend bool operator==(const GroupElt& a, const GroupElt& b);

  /// "a/b" for rank 1, "(a/b, c/d)" for rank 2.
  std::string str() const;
  static GroupElt parse(std::string_view text);

 private:
  mpq_class first_{0};
  mpq_class second_{0};
  bool lex_ = false;
};

enum class GroupKind { Int, IntInvP, Rat, Lex2 };

/// The value groups supported as Γ. Only the prime p matters for IntInvP
/// membership and for p-divisibility questions.
struct ValueGroup {
  GroupKind kind = GroupKind::Int;
  int p = 2;

  int rank() const { return kind == GroupKind::Lex2 ? 2 : 1; }
  GroupElt zero() const { return GroupElt::zero(rank()); }
  bool contains(const GroupElt& a) const;
  /// b with p*b == a inside this group, if one exists.
  std::optional<GroupElt> is_p_divisible(const GroupElt& a) const;
  /// True when every element is p-divisible in the group.
  bool p_divisible() const { return kind != GroupKind::Int; }

  std::string name() const;
  static ValueGroup parse(std::string_view name, int p);

  friend bool operator==(const ValueGroup&, const ValueGroup&) = default;
};

/// True if d is a (non-negative) power of p.
bool is_power_of(const mpz_class& d, int p);

}  // namespace valuata
