#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsmooth/invariants.hpp"
#include "tsmooth/surface.hpp"

namespace tsmooth {

enum class Strictness { strict, non_strict };
enum class Verdict { tsmooth_or_empty, inconclusive, hypotheses_fail };

std::string to_string(Strictness s);
std::string to_string(Verdict v);          // "TSMOOTH_OR_EMPTY", "INCONCLUSIVE", "HYPOTHESES_FAIL"
std::string verdict_text(Verdict v);       // "T-smooth or empty", ...
std::string to_string(CriterionFamily f);  // "picard_one", "product", "ruled"

/// A singularity type prescribed `count` times.
struct SingularityTerm {
  GermSpec spec;
  long count = 1;
};

struct StrictnessDecision {
  Strictness mode = Strictness::strict;
  std::string reason;
};

struct EvaluateOptions {
  SearchBudget budget;
  bool force_strict = false;
};

struct SingularityContribution {
  std::string label;
  long count = 1;
  std::optional<Rational> gamma;  // per point
  Provenance provenance = Provenance::unavailable;
  std::optional<long> tau;
  std::optional<TauCi> tau_ci;
  std::string note;
};

struct CriterionReport {
  std::string surface;
  CriterionFamily family = CriterionFamily::picard_one;
  DivisorClass divisor;
  /// Alpha of the summed invariants: the theorem's alpha on rank one, 0 otherwise.
  Alpha alpha_used{0};
  /// The factor in front of (D-K)^2: alpha or gamma.
  std::optional<Rational> rhs_constant;
  Rational dk_squared;
  Rational lhs;
  std::optional<Rational> rhs;
  std::optional<Rational> margin;  // rhs - lhs
  Strictness strictness = Strictness::strict;
  std::string strictness_reason;
  std::vector<Hypothesis> hypotheses;
  Verdict verdict = Verdict::hypotheses_fail;
  std::vector<SingularityContribution> per_singularity;
  std::vector<std::string> notes;
};

/// Sum of gamma* against alpha*(D-K)^2 (rank one) or gamma*(D-K)^2 (products, ruled).
/// A pass that leans on search lower bounds is reported INCONCLUSIVE; unavailable
/// invariants give HYPOTHESES_FAIL.
CriterionReport evaluate(const SurfaceModel& model, const DivisorClass& d, const std::vector<SingularityTerm>& sings,
                         const EvaluateOptions& options = {});
CriterionReport evaluate(const SurfaceModel& model, const DivisorClass& d, const std::vector<GermSpec>& sings,
                         const EvaluateOptions& options = {});

/// non_strict for kappa > 0, or on the plane when some singularity has closed-form
/// gamma_1 > 4 tau_ci with exact tau_ci; strict otherwise.
StrictnessDecision strictness_mode(const SurfaceModel& model, const std::vector<SingularityTerm>& sings,
                                   const SearchBudget& budget = {});

struct LemmaInstance {
  SurfaceModel model;
  DivisorClass D;
  DivisorClass Delta;
  long deg_X0 = 0;
  std::vector<long> eps;
  std::vector<long> local_degs;
};

struct LemmaCondition {
  std::string name;
  bool holds = false;
  Rational lhs;  // condition reads lhs <= rhs, lhs < rhs, ...
  Rational rhs;
};

/// Conditions (a), (b), (c) and both bounds A1 on the local degrees, evaluated exactly.
/// Order: a, b, c, A1_lower, A1_upper. Throws InvalidInput on inconsistent instances.
std::vector<LemmaCondition> check_lemma_arithmetic(const LemmaInstance& inst);

struct CorollaryCheck {
  std::string name;
  long points = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty() && points > 0; }
};

/// Re-derives the quoted specialized bounds from evaluate() on parameter grids.
std::vector<CorollaryCheck> cross_check_corollaries();

}  // namespace tsmooth
