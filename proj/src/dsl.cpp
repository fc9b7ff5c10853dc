#include "valuata/dsl.hpp"

#include <cctype>
#include <optional>

namespace valuata {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string peek_word() {
    std::size_t save = pos_;
    std::string w = word();
    pos_ = save;
    return w;
  }
  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    return std::string(s_.substr(b, pos_ - b));
  }
  /// Text up to the matching ')', consuming it.
  std::string until_close() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      if (s_[pos_] == '(') fail("nested parenthesis in exponent");
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated exponent");
    return std::string(s_.substr(b, pos_++ - b));
  }
  long integer_exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      long e = to_long(digits());
      expect(')');
      return neg ? -e : e;
    }
    return to_long(digits());
  }
  long to_long(const std::string& d) {
    try {
      return std::stol(d);
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class A>
class Parser {
 public:
  using T = typename A::Elt;
  Parser(const A& alg, std::string_view text) : a_(alg), lx_(text) {}

  T run() {
    if (lx_.done()) lx_.fail("empty expression");
    T v = expr();
    if (!lx_.done()) lx_.fail(std::string("unexpected '") + lx_.peek() + "'");
    return v;
  }

 private:
  T expr() {
    T v = lx_.accept('-') ? a_.neg(term()) : term();
    for (;;) {
      if (lx_.accept('+')) v = a_.add(v, term());
      else if (lx_.accept('-')) v = a_.sub(v, term());
      else return v;
    }
  }
  T term() {
    T v = factor();
    for (;;) {
      if (lx_.accept('*')) v = a_.mul(v, factor());
      else if (lx_.accept('/')) v = a_.div(v, factor());
      else return v;
    }
  }
  T factor() {
    if (lx_.accept('-')) return a_.neg(factor());
    return power();
  }
  T power() {
    if (a_.has_x() && lx_.peek_word() == "X") {
      lx_.word();
      return a_.monomial(x_exponent());
    }
    T base = primary();
    if (lx_.accept('^')) return a_.pow(base, lx_.integer_exponent());
    return base;
  }
  GroupElt x_exponent() {
    if (!lx_.accept('^')) return a_.unit_exponent();
    std::size_t at = lx_.pos();
    std::string inner;
    if (lx_.accept('(')) {
      inner = lx_.until_close();
    } else {
      inner = lx_.digits();
    }
    try {
      return a_.lift_exponent(GroupElt::parse("(" + inner + ")"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), at);
    }
  }
  T primary() {
    std::size_t at = lx_.pos();
    if (lx_.accept('(')) {
      T v = expr();
      lx_.expect(')');
      return v;
    }
    char c = lx_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return a_.integer(lx_.digits());
    if (!std::isalpha(static_cast<unsigned char>(c))) lx_.fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    std::string w = lx_.word();
    if (w == "O") return big_o();
    std::optional<T> v = a_.symbol(w);
    if (!v) throw ParseError("unknown symbol '" + w + "' for " + a_.kind(), at);
    return *v;
  }
  T big_o() {
    lx_.expect('(');
    std::size_t at = lx_.pos();
    std::string w = lx_.word();
    std::optional<T> v;
    if (w == "X" && a_.has_x()) {
      v = a_.big_o_x(x_exponent());
    } else if (w == "pi" && lx_.accept('^')) {
      v = a_.big_o_pi(lx_.integer_exponent());
    }
    if (!v) throw ParseError("O(...) takes X^(e) or pi^k for " + a_.kind(), at);
    lx_.expect(')');
    return *v;
  }

  const A& a_;
  Lexer lx_;
};

std::optional<ResidueElt> residue_symbol(const ResidueField& k, const std::string& w) {
  if (w == "y" && k.kind() == ResidueKind::RationalFunctions) return k.y();
  if (w == "w" && k.base().degree() > 1) {
    std::vector<int> d(static_cast<std::size_t>(k.base().degree()), 0);
    d[1] = 1;
    return k.constant(k.base().from_digits(d));
  }
  return std::nullopt;
}

mpz_class parse_mpz(const std::string& d) { return mpz_class(d, 10); }

struct SeriesAlg {
  using Elt = Series;
  const SeriesField& K;

  std::string kind() const { return K.name(); }
  bool has_x() const { return true; }
  GroupElt unit_exponent() const { return K.group().rank() == 2 ? GroupElt(1, 0) : GroupElt(1); }
  GroupElt lift_exponent(GroupElt e) const {
    if (K.group().rank() == 2 && e.rank() == 1) return GroupElt(e.first(), 0);
    return e;
  }
  Series integer(const std::string& d) const {
    mpz_class v = parse_mpz(d) % K.p();
    return K.from_int(v.get_si());
  }
  Series monomial(const GroupElt& e) const { return K.monomial(K.residue().one(), e); }
  Series big_o_x(const GroupElt& e) const { return K.from_terms({}, e); }
  std::optional<Series> big_o_pi(long) const { return std::nullopt; }
  std::optional<Series> symbol(const std::string& w) const {
    auto r = residue_symbol(K.residue(), w);
    if (!r) return std::nullopt;
    return K.constant(*r);
  }
  Series add(const Series& a, const Series& b) const { return K.add(a, b); }
  Series sub(const Series& a, const Series& b) const { return K.sub(a, b); }
  Series neg(const Series& a) const { return K.neg(a); }
  Series mul(const Series& a, const Series& b) const { return K.mul(a, b); }
  Series div(const Series& a, const Series& b) const { return K.divide(a, b); }
  Series pow(const Series& a, long e) const {
    if (e < 0) return K.pow(K.invert(a), static_cast<unsigned>(-e));
    return K.pow(a, static_cast<unsigned>(e));
  }
};

struct ExtAlg {
  using Elt = ExtElt;
  const ASExtension& L;
  SeriesAlg base{L.base()};

  std::string kind() const { return "the Artin-Schreier extension over " + L.base().name(); }
  bool has_x() const { return true; }
  GroupElt unit_exponent() const { return base.unit_exponent(); }
  GroupElt lift_exponent(GroupElt e) const { return base.lift_exponent(std::move(e)); }
  ExtElt integer(const std::string& d) const { return L.from_base(base.integer(d)); }
  ExtElt monomial(const GroupElt& e) const { return L.from_base(base.monomial(e)); }
  ExtElt big_o_x(const GroupElt& e) const { return L.from_base(base.big_o_x(e)); }
  std::optional<ExtElt> big_o_pi(long) const { return std::nullopt; }
  std::optional<ExtElt> symbol(const std::string& w) const {
    if (w == "alpha") return L.alpha();
    auto s = base.symbol(w);
    if (!s) return std::nullopt;
    return L.from_base(*s);
  }
  ExtElt add(const ExtElt& a, const ExtElt& b) const { return L.add(a, b); }
  ExtElt sub(const ExtElt& a, const ExtElt& b) const { return L.sub(a, b); }
  ExtElt neg(const ExtElt& a) const { return L.neg(a); }
  ExtElt mul(const ExtElt& a, const ExtElt& b) const { return L.mul(a, b); }
  ExtElt div(const ExtElt& a, const ExtElt& b) const { return L.mul(a, L.invert(b)); }
  ExtElt pow(const ExtElt& a, long e) const {
    if (e < 0) return L.pow(L.invert(a), static_cast<unsigned>(-e));
    return L.pow(a, static_cast<unsigned>(e));
  }
};

struct CycloAlg {
  using Elt = CycloElt;
  const CycloField& F;

  std::string kind() const { return F.name(); }
  bool has_x() const { return false; }
  GroupElt unit_exponent() const { return GroupElt(1); }
  GroupElt lift_exponent(GroupElt e) const { return e; }
  CycloElt integer(const std::string& d) const { return F.from_mpz(parse_mpz(d)); }
  CycloElt monomial(const GroupElt&) const { return F.zero(); }
  CycloElt big_o_x(const GroupElt&) const { return F.zero(); }
  std::optional<CycloElt> big_o_pi(long k) const { return F.big_o(k); }
  std::optional<CycloElt> symbol(const std::string& w) const {
    if (w == "pi") return F.pi();
    if (w == "z") return F.z();
    if (w == "y" && F.with_y()) return F.y();
    return std::nullopt;
  }
  CycloElt add(const CycloElt& a, const CycloElt& b) const { return F.add(a, b); }
  CycloElt sub(const CycloElt& a, const CycloElt& b) const { return F.sub(a, b); }
  CycloElt neg(const CycloElt& a) const { return F.neg(a); }
  CycloElt mul(const CycloElt& a, const CycloElt& b) const { return F.mul(a, b); }
  CycloElt div(const CycloElt& a, const CycloElt& b) const { return F.divide(a, b); }
  CycloElt pow(const CycloElt& a, long e) const { return F.pow(a, e); }
};

}  // namespace

Series parse_series(const SeriesField& K, std::string_view text) {
  SeriesAlg a{K};
  return Parser<SeriesAlg>(a, text).run();
}

ExtElt parse_ext(const ASExtension& L, std::string_view text) {
  ExtAlg a{L};
  return Parser<ExtAlg>(a, text).run();
}

CycloElt parse_cyclo(const CycloField& F, std::string_view text) {
  CycloAlg a{F};
  return Parser<CycloAlg>(a, text).run();
}

}  // namespace valuata
