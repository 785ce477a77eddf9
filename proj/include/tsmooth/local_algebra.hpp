#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tsmooth/jet.hpp"

namespace tsmooth {

/// Ideal of Q[[x,y]] given by jet generators sharing one truncation degree.
///
/// `primary_certificate` is a k with m^k ⊆ I (within truncation), filled in by certify().
class LocalIdealRep {
 public:
  /// Generators are brought to a common truncation: the largest one when every jet is
  /// exact, the smallest one otherwise. Throws InvalidInput on an empty list.
  explicit LocalIdealRep(std::vector<Jet> generators);

  const std::vector<Jet>& generators() const { return generators_; }
  int truncation() const { return generators_.front().truncation(); }
  /// All generators are polynomials (no discarded terms).
  bool exact() const;
  std::optional<int> primary_certificate() const { return certificate_; }

  /// Generators re-truncated at n (raising requires exact()).
  std::vector<Jet> generators_at(int n) const;

 private:
  friend LocalIdealRep certify(const LocalIdealRep&);
  std::vector<Jet> generators_;
  std::optional<int> certificate_;
};

/// dim_Q of R/I together with how it was established.
struct Colength {
  long value = 0;
  /// The value agreed at truncations T and T+2 and m^certificate ⊆ I was verified.
  bool stable = false;
  /// Truncation degree T at which the value was read off.
  int truncation = 0;
  /// Smallest k with every degree-k monomial in I.
  int certificate = 0;
};

struct ColengthOptions {
  /// First truncation; 0 means 2 * (max generator degree) + 4.
  int initial_truncation = 0;
  /// Escalation stops here; instability at the cap is reported as NotFinite.
  int cap = 64;
  /// Known upper bound for the colength when finite (e.g. Bezout); exceeding it while
  /// unstable means the ideal is not m-primary.
  std::optional<long> bound;
};

/// Row-echelon span of { x^a y^b g : g a generator } inside Q[x,y]/m^T.
///
/// Pivots sit on the lowest monomial of each row (degree, then x-descending), so the
/// rows whose pivot lies below degree t span the image of the ideal in Q[x,y]/m^t.
class IdealSpan {
 public:
  IdealSpan(const std::vector<Jet>& generators, int truncation);

  int truncation() const { return truncation_; }
  /// dim of Q[x,y] / (I + m^t) for t <= truncation().
  long quotient_dimension(int t) const;
  long quotient_dimension() const { return quotient_dimension(truncation_); }
  /// Whether h (read mod m^T) lies in I + m^T.
  bool contains(const Jet& h) const;
  /// Every monomial of total degree k lies in I + m^T.
  bool contains_all_monomials_of_degree(int k) const;

 private:
  using Row = std::vector<std::pair<int, Rational>>;
  void insert(Row row);
  Row reduce(Row row) const;

  int truncation_;
  std::vector<int> pivot_of_column_;  // column -> row index or -1
  std::vector<Row> rows_;
};

/// Index of x^i y^j in the degree-ordered monomial basis.
inline int monomial_index(int i, int j) {
  const int n = i + j;
  return n * (n + 1) / 2 + j;
}
inline int monomial_count(int truncation) { return truncation * (truncation + 1) / 2; }

/// dim_Q(R/I). Throws NotFinite when no stabilization happens up to the cap (or the
/// bound is exceeded), and InvalidInput when inexact generators cannot be raised far enough.
Colength colength(const LocalIdealRep& ideal, const ColengthOptions& options = {});

/// Copy of `ideal` carrying the primary certificate from a stable colength run.
LocalIdealRep certify(const LocalIdealRep& ideal);

/// i(f,g) = dim R/<f,g>. For polynomial inputs the Bezout number deg f * deg g bounds
/// the finite case.
Colength intersection_multiplicity(const Jet& f, const Jet& g, ColengthOptions options = {});

/// <f_x, f_y, f>. Requires f nonzero without constant term.
LocalIdealRep tjurina_ideal(const Jet& f);

/// tau(f) = colength of the Tjurina ideal, with the (deg f - 1)^2 bound for polynomials.
Colength tjurina_number(const Jet& f, ColengthOptions options = {});

/// An m-primary ideal with its colength established; answers exact membership queries by
/// reducing modulo m^k, where k is the primary certificate (m^k ⊆ I).
class CertifiedIdeal {
 public:
  explicit CertifiedIdeal(const LocalIdealRep& ideal, const ColengthOptions& options = {});

  const Colength& colength() const { return colength_; }
  /// Throws InvalidInput when h is an inexact jet truncated below the certificate degree.
  bool contains(const Jet& h) const;

 private:
  CertifiedIdeal(const LocalIdealRep& ideal, Colength c);
  Colength colength_;
  IdealSpan span_;
};

/// Whether h lies in I, decided at a truncation where m^T ⊆ I has been certified.
/// Requires I m-primary.
bool ideal_contains(const LocalIdealRep& ideal, const Jet& h, const ColengthOptions& options = {});

/// Drops generators that lie in the ideal of the remaining ones (I must be m-primary).
LocalIdealRep reduce_generators(const LocalIdealRep& ideal, const ColengthOptions& options = {});

}  // namespace tsmooth
