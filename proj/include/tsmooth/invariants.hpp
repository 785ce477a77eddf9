#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsmooth/jet.hpp"
#include "tsmooth/local_algebra.hpp"
#include "tsmooth/rational.hpp"

namespace tsmooth {

enum class Equivalence { topological, analytic };

/// Catalog families: A_k (k>=1), D_k (k>=4), E_k (k=6,7,8), M_m ordinary m-fold point (m>=2).
enum class Family { A, D, E, M };

struct CatalogType {
  Family family;
  int index;
  friend bool operator==(const CatalogType&, const CatalogType&) = default;
};

std::string to_string(Family f);
std::string to_string(Equivalence e);
std::string to_string(const CatalogType& t);  // "A3", "M4", ...

/// A singularity: a catalog type or an explicit polynomial germ, with an equivalence kind.
class GermSpec {
 public:
  static GermSpec catalog(Family family, int index, Equivalence eq = Equivalence::topological);
  static GermSpec explicit_germ(Jet f, Equivalence eq = Equivalence::analytic);

  bool is_catalog() const { return std::holds_alternative<CatalogType>(kind_); }
  const CatalogType& catalog_type() const { return std::get<CatalogType>(kind_); }
  const Jet& germ() const { return std::get<Jet>(kind_); }
  Equivalence equivalence() const { return equivalence_; }

  /// "A3", "M4/analytic", "poly(y^2 - x^3)".
  std::string label() const;

 private:
  GermSpec(std::variant<CatalogType, Jet> kind, Equivalence eq) : kind_(std::move(kind)), equivalence_(eq) {}
  std::variant<CatalogType, Jet> kind_;
  Equivalence equivalence_;
};

/// Exact rational in [0, 1].
class Alpha {
 public:
  explicit Alpha(Rational value);
  Alpha(long num, long den = 1) : Alpha(Rational(num, den)) {}
  static Alpha parse(std::string_view text) { return Alpha(parse_rational(text)); }

  const Rational& value() const { return value_; }
  friend bool operator<(const Alpha& a, const Alpha& b) { return a.value_ < b.value_; }
  friend bool operator==(const Alpha& a, const Alpha& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

enum class Provenance { closed_form, search_lower_bound, unavailable };
std::string to_string(Provenance p);

struct GammaValue {
  std::optional<Rational> value;  // empty iff provenance == unavailable
  Provenance provenance = Provenance::unavailable;
  /// Best value found by the kernel search, when one ran.
  std::optional<Rational> search_value;
  std::string note;
};

struct TauCi {
  long value = 0;
  bool exact = false;
};

struct InvariantRecord {
  std::string label;
  Equivalence equivalence = Equivalence::analytic;
  bool singular = true;
  std::optional<long> tau;
  std::optional<TauCi> tau_ci;
  std::map<Alpha, GammaValue> gamma;
  std::vector<std::string> notes;
};

/// Search limits. Budgets are explicit so concurrent evaluations never share state.
struct SearchBudget {
  /// Upper limit on the number of elements g tried per ideal in the gamma search.
  int max_candidates = 400;
  /// Monomials up to this degree (plus combinations) feed the complete-intersection search.
  int ci_pool_degree = 3;
  ColengthOptions colength;
};

/// (alpha*i + (1-alpha)*d)^2 / (i - d). Throws LemmaViolation when i <= d.
Rational lambda_alpha(long d, long i, const Alpha& alpha);

struct GammaWitness {
  long multiplicity;  // i(f, g)
  Jet g;
};

/// The values i(f,g) in (d, 2d] reached by the candidate elements of I, one witness each.
struct AchievedMultiplicities {
  long colength = 0;  // d = dim R/I
  std::map<long, Jet> witnesses;
  int candidates_tried = 0;
  std::vector<std::string> warnings;

  /// max{(1+alpha)^2 d, lambda_alpha(d, i) : i achieved}.
  Rational gamma(const Alpha& alpha) const;
};

/// Enumerates candidates g in I (reduced generators, monomials of I up to degree 2d+1,
/// rational combinations g1 + c*g2 with c in {±1, ±2, ±1/2}) and records each achieved
/// intersection multiplicity. Requires I^ea(f) ⊆ I (spot-checked) and I m-primary.
AchievedMultiplicities achieved_multiplicities(const Jet& f, const LocalIdealRep& ideal,
                                               const SearchBudget& budget = {});

struct GammaSearchResult {
  Rational value;
  std::vector<GammaWitness> witnesses;
  std::vector<std::string> warnings;
};

/// Certified lower bound for gamma_alpha(f; I).
GammaSearchResult gamma_alpha_search(const Jet& f, const LocalIdealRep& ideal, const Alpha& alpha,
                                     const SearchBudget& budget = {});

struct TauCiSearchResult {
  long value = 0;
  bool exact = false;
  long tau = 0;
  /// Complete intersections I ⊇ I^ea(f) found, largest colength first. Includes I^ea
  /// itself when it is 2-generated.
  std::vector<LocalIdealRep> ideals;
  std::vector<long> colengths;
};

/// Lower bound for tau_ci of an explicit analytic germ. Topological requests are rejected:
/// the equisingularity ideal is not computed for explicit germs.
TauCiSearchResult tau_ci_search(const Jet& f, Equivalence eq, const SearchBudget& budget = {});

/// Closed-form values for catalog types. Gamma for analytic M_m (m >= 3) is "unavailable".
InvariantRecord catalog_invariants(const GermSpec& spec, const std::vector<Alpha>& alphas);

/// A_k normal forms c1*y^2 + c2*x^(k+1) (or with x and y swapped), c1, c2 nonzero.
std::optional<CatalogType> recognize_normal_form(const Jet& f);

/// Catalog specs: closed forms. Explicit germs: kernel computations with search lower
/// bounds, upgraded to closed form when the germ is a recognized normal form.
/// Throws NotFinite for non-reduced germs and InvalidInput for topological explicit germs.
InvariantRecord invariants_of(const GermSpec& spec, const std::vector<Alpha>& alphas,
                              const SearchBudget& budget = {});

/// Violations of (1+a)^2 tau_ci <= gamma_a <= (tau_ci+a)^2 <= (tau+a)^2 on a record.
/// The left link is only checked when gamma is closed-form and tau_ci exact.
std::vector<std::string> chain_violations(const InvariantRecord& record);

}  // namespace tsmooth
