#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "tsmooth/rational.hpp"

namespace tsmooth {

/// Exponent pair of x^i y^j. Ordered by total degree, then by the x-exponent descending,
/// so x^2 < xy < y^2 inside degree 2.
struct Exponent {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return b.x <=> a.x;
  }
};

/// Bivariate polynomial over Q truncated below total degree N: every stored term has
/// i + j < N and a nonzero coefficient.
///
/// `exact()` records that nothing was discarded when the jet was built, so the jet is a
/// polynomial in its own right and may be re-truncated at a larger N. Jets produced by
/// dropping terms only determine the germ modulo m^N. Binary operations on two exact jets
/// work at the larger of the two truncations, otherwise at the smaller.
class Jet {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Jet(int truncation);
  /// Builds the truncation of `terms` at `truncation`; zero coefficients are ignored.
  Jet(const Terms& terms, int truncation);

  static Jet monomial(int i, int j, int truncation, const Rational& c = 1);
  static Jet constant(const Rational& c, int truncation);

  int truncation() const { return truncation_; }
  bool exact() const { return exact_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(int i, int j) const;
  /// Largest total degree present, -1 for the zero jet.
  int degree() const;
  /// Smallest total degree present (the multiplicity), -1 for the zero jet.
  int order() const;

  /// Re-truncates. Raising N is only allowed for exact jets.
  Jet with_truncation(int n) const;

  Jet partial_x() const;
  Jet partial_y() const;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Rational& c);
  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Rational& c) { return a *= c; }
  friend Jet operator*(const Rational& c, Jet a) { return a *= c; }
  friend Jet operator*(const Jet& a, const Jet& b);

  /// Multiplies by x^i y^j, dropping what falls at or above N.
  Jet shifted(int i, int j) const;

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "y^2 - x^3" or "1/2*x*y".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  void align_with(const Jet& other);

  Terms terms_;
  int truncation_;
  bool exact_ = true;
};

/// Parses `text` per the grammar in docs/polynomial-grammar.md and truncates at `truncation`.
/// Throws ParseError / UnsupportedCoefficient / InvalidInput.
Jet make_jet(std::string_view text, int truncation);

/// Parses `text` and returns it as an exact jet with N = degree + 1 (N = 1 for constants).
Jet parse_polynomial(std::string_view text);

}  // namespace tsmooth
