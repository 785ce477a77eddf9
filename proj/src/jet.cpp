#include "tsmooth/jet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tsmooth/errors.hpp"

namespace tsmooth {

Jet::Jet(int truncation) : truncation_(truncation) {
  if (truncation < 1) throw InvalidInput("truncation degree must be >= 1");
}

Jet::Jet(const Terms& terms, int truncation) : Jet(truncation) {
  for (const auto& [e, c] : terms) {
    if (e.x < 0 || e.y < 0) throw InvalidInput("negative exponent in jet");
    if (sgn(c) == 0) continue;
    if (e.degree() >= truncation_) {
      exact_ = false;
      continue;
    }
    terms_.emplace(e, c);
  }
}

Jet Jet::monomial(int i, int j, int truncation, const Rational& c) {
  return Jet(Terms{{Exponent{i, j}, c}}, truncation);
}

Jet Jet::constant(const Rational& c, int truncation) { return monomial(0, 0, truncation, c); }

Rational Jet::coeff(int i, int j) const {
  auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Jet::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int Jet::order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Jet Jet::with_truncation(int n) const {
  if (n > truncation_ && !exact_)
    throw InvalidInput("cannot raise the truncation of a jet that has lost terms (N=" +
                       std::to_string(truncation_) + " -> " + std::to_string(n) + ")");
  Jet out(terms_, n);
  out.exact_ = out.exact_ && exact_;
  return out;
}

Jet Jet::partial_x() const {
  // d/dx of a jet known mod m^N is known mod m^(N-1) only.
  const int n = exact_ ? truncation_ : std::max(1, truncation_ - 1);
  Jet out(n);
  out.exact_ = exact_;
  for (const auto& [e, c] : terms_)
    if (e.x > 0) out.add_term(Exponent{e.x - 1, e.y}, c * e.x);
  return out;
}

Jet Jet::partial_y() const {
  const int n = exact_ ? truncation_ : std::max(1, truncation_ - 1);
  Jet out(n);
  out.exact_ = exact_;
  for (const auto& [e, c] : terms_)
    if (e.y > 0) out.add_term(Exponent{e.x, e.y - 1}, c * e.y);
  return out;
}

void Jet::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  if (e.degree() >= truncation_) {
    exact_ = false;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Jet::align_with(const Jet& other) {
  // Two polynomials combine at the larger truncation; anything inexact only at the smaller.
  const bool both_exact = exact_ && other.exact_;
  const int n = both_exact ? std::max(truncation_, other.truncation_)
                           : std::min(truncation_, other.truncation_);
  if (n != truncation_) *this = with_truncation(n);
  exact_ = exact_ && other.exact_ && other.degree() < n;
}

Jet& Jet::operator+=(const Jet& other) {
  align_with(other);
  for (const auto& [e, c] : other.terms_)
    if (e.degree() < truncation_) add_term(e, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  align_with(other);
  for (const auto& [e, c] : other.terms_)
    if (e.degree() < truncation_) add_term(e, -c);
  return *this;
}

Jet& Jet::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  const bool both_exact = a.exact_ && b.exact_;
  Jet out(both_exact ? std::max(a.truncation_, b.truncation_) : std::min(a.truncation_, b.truncation_));
  out.exact_ = both_exact;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(Exponent{ea.x + eb.x, ea.y + eb.y}, ca * cb);
  return out;
}

Jet Jet::shifted(int i, int j) const {
  Jet out(truncation_);
  out.exact_ = exact_;
  for (const auto& [e, c] : terms_) out.add_term(Exponent{e.x + i, e.y + j}, c);
  return out;
}

std::string Jet::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || e.degree() == 0) os << tsmooth::to_string(mag);
    bool need_star = !unit || e.degree() == 0;
    auto var = [&](char v, int p) {
      if (p == 0) return;
      if (need_star) os << "*";
      os << v;
      if (p > 1) os << "^" << p;
      need_star = true;
    };
    var('x', e.x);
    var('y', e.y);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxDegree = 4096;

using Poly = Jet::Terms;

void poly_add(Poly& acc, const Poly& p, int sign) {
  for (const auto& [e, c] : p) {
    auto [it, inserted] = acc.try_emplace(e, sign > 0 ? c : Rational(-c));
    if (!inserted) {
      it->second += sign > 0 ? c : Rational(-c);
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e{ea.x + eb.x, ea.y + eb.y};
      auto [it, inserted] = out.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  return out;
}

int poly_degree(const Poly& p) { return p.empty() ? -1 : p.rbegin()->first.degree(); }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expr := term (('+' | '-') term)*
  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+'))
        poly_add(acc, term(), +1);
      else if (accept('-'))
        poly_add(acc, term(), -1);
      else
        return acc;
    }
  }

  // term := unary (('*' | '/') unary)*   -- '/' only by a nonzero constant
  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = poly_mul(acc, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly d = unary();
        if (d.size() != 1 || d.begin()->first.degree() != 0)
          throw ParseError("division is only allowed by a nonzero rational constant", at);
        const Rational inv = 1 / d.begin()->second;
        for (auto& [e, c] : acc) c *= inv;
      } else {
        return acc;
      }
      if (poly_degree(acc) > kMaxDegree) fail("polynomial degree exceeds " + std::to_string(kMaxDegree));
    }
  }

  // unary := ('+' | '-') unary | power
  Poly unary() {
    if (accept('-')) {
      Poly p = unary();
      for (auto& [e, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  // power := primary ('^' digits)?
  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    if (digits.empty()) throw ParseError("expected a nonnegative integer exponent", at);
    if (digits.size() > 5 || std::stoi(digits) > kMaxDegree)
      throw ParseError("exponent too large", at);
    int k = std::stoi(digits);
    Poly out{{Exponent{0, 0}, Rational(1)}};
    if (k > 0 && poly_degree(base) > 0 && static_cast<long>(poly_degree(base)) * k > kMaxDegree)
      throw ParseError("polynomial degree exceeds " + std::to_string(kMaxDegree), at);
    while (k > 0) {
      if (k & 1) out = poly_mul(out, base);
      k >>= 1;
      if (k) base = poly_mul(base, base);
    }
    return out;
  }

  // primary := number | 'x' | 'y' | '(' expr ')'
  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y') {
      const std::size_t at = pos_++;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = at;
        identifier();
      }
      return Poly{{c == 'x' ? Exponent{1, 0} : Exponent{0, 1}, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  [[noreturn]] void identifier() {
    const std::size_t at = pos_;
    std::string name;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += s_[pos_++];
    throw UnsupportedCoefficient("unsupported symbol '" + name + "' (only x, y and rational constants)", at);
  }

  // Integer or finite decimal literal, converted exactly.
  Poly number() {
    const std::size_t at = pos_;
    std::string int_part, frac_part;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) int_part += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) frac_part += s_[pos_++];
      if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number", at);
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E'))
      throw UnsupportedCoefficient("scientific notation is not an exact coefficient; write p/q", at);
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("missing '*' between coefficient and variable", pos_);
    Integer num(int_part.empty() ? "0" : int_part);
    Integer den = 1;
    for (char d : frac_part) {
      num = num * 10 + (d - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    if (sgn(q) == 0) return {};
    return Poly{{Exponent{0, 0}, q}};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Jet make_jet(std::string_view text, int truncation) {
  if (truncation < 1) throw InvalidInput("truncation degree must be >= 1");
  return Jet(Parser(text).parse(), truncation);
}

Jet parse_polynomial(std::string_view text) {
  Poly p = Parser(text).parse();
  return Jet(p, std::max(1, poly_degree(p) + 1));
}

}  // namespace tsmooth
