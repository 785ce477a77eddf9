#include "tsmooth/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "tsmooth/errors.hpp"

namespace tsmooth {

std::string to_string(Strictness s) { return s == Strictness::strict ? "strict" : "non_strict"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tsmooth_or_empty: return "TSMOOTH_OR_EMPTY";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::hypotheses_fail: return "HYPOTHESES_FAIL";
  }
  return "?";
}

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::tsmooth_or_empty: return "T-smooth or empty";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::hypotheses_fail: return "hypotheses fail";
  }
  return "?";
}

std::string to_string(CriterionFamily f) {
  switch (f) {
    case CriterionFamily::picard_one: return "picard_one";
    case CriterionFamily::product: return "product";
    case CriterionFamily::ruled: return "ruled";
  }
  return "?";
}

namespace {

bool is_plane(const SurfaceModel& model) {
  const auto p = model.picard_one_specialization();
  return p && p->L_self == 1 && p->kappa == -3;
}

}  // namespace

StrictnessDecision strictness_mode(const SurfaceModel& model, const std::vector<SingularityTerm>& sings,
                                   const SearchBudget& budget) {
  const auto p = model.picard_one_specialization();
  if (!p) return {Strictness::strict, "products and ruled surfaces use the strict inequality"};
  if (p->kappa > 0) return {Strictness::non_strict, "kappa = " + std::to_string(p->kappa) + " > 0"};
  if (!is_plane(model)) return {Strictness::strict, "kappa = " + std::to_string(p->kappa) + " <= 0"};
  for (const auto& term : sings) {
    const Alpha one(1);
    InvariantRecord rec;
    try {
      rec = invariants_of(term.spec, {one}, budget);
    } catch (const std::exception&) {
      continue;
    }
    if (!rec.singular || !rec.tau_ci || !rec.tau_ci->exact) continue;
    const auto& g = rec.gamma.at(one);
    if (g.provenance != Provenance::closed_form) continue;
    if (*g.value > 4 * rec.tau_ci->value)
      return {Strictness::non_strict, rec.label + ": gamma_1 = " + to_string(*g.value) + " > 4 tau_ci = " +
                                          std::to_string(4 * rec.tau_ci->value)};
  }
  return {Strictness::strict, "plane case without a singularity with gamma_1 > 4 tau_ci"};
}

CriterionReport evaluate(const SurfaceModel& model, const DivisorClass& d, const std::vector<SingularityTerm>& sings,
                         const EvaluateOptions& options) {
  if (sings.empty()) throw InvalidInput("evaluate needs at least one singularity");
  for (const auto& t : sings)
    if (t.count < 1) throw InvalidInput("singularity multiplicities must be >= 1");

  CriterionReport rep;
  rep.surface = model.describe();
  rep.family = model.family();
  rep.divisor = d;

  const CriterionConstants cc = criterion_constants(model, d);
  rep.dk_squared = cc.dk_squared;
  rep.hypotheses = cc.hypotheses;
  if (cc.alpha) {
    rep.alpha_used = *cc.alpha;
    rep.rhs_constant = cc.alpha->value();
  } else {
    rep.rhs_constant = cc.gamma;
  }
  rep.rhs = cc.rhs;

  const StrictnessDecision sd = strictness_mode(model, sings, options.budget);
  rep.strictness = sd.mode;
  rep.strictness_reason = sd.reason;
  if (options.force_strict && sd.mode == Strictness::non_strict) {
    rep.strictness = Strictness::strict;
    rep.strictness_reason = "forced strict (would be non_strict: " + sd.reason + ")";
  }

  bool any_lower_bound = false;
  bool any_unavailable = false;
  rep.lhs = 0;
  for (const auto& term : sings) {
    const InvariantRecord rec = invariants_of(term.spec, {rep.alpha_used}, options.budget);
    SingularityContribution c;
    c.label = rec.label;
    c.count = term.count;
    c.tau = rec.tau;
    c.tau_ci = rec.tau_ci;
    if (!rec.singular) {
      c.gamma = Rational(0);
      c.provenance = Provenance::closed_form;
      c.note = "no singularity; contributes 0";
    } else {
      const GammaValue& g = rec.gamma.at(rep.alpha_used);
      c.gamma = g.value;
      c.provenance = g.provenance;
      c.note = g.note;
    }
    if (c.provenance == Provenance::unavailable) {
      any_unavailable = true;
      rep.hypotheses.push_back({"gamma available for " + c.label, false,
                                "gamma_" + to_string(rep.alpha_used.value()) + " of " + c.label + " is unavailable" +
                                    (c.note.empty() ? "" : ": " + c.note)});
    } else {
      if (c.provenance == Provenance::search_lower_bound) any_lower_bound = true;
      rep.lhs += term.count * *c.gamma;
    }
    rep.per_singularity.push_back(std::move(c));
  }
  if (rep.rhs && !any_unavailable) rep.margin = *rep.rhs - rep.lhs;

  const bool hyps = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(), [](const Hypothesis& h) { return h.ok; });
  if (!hyps || !rep.rhs || any_unavailable) {
    rep.verdict = Verdict::hypotheses_fail;
    return rep;
  }
  const bool pass = rep.strictness == Strictness::strict ? rep.lhs < *rep.rhs : rep.lhs <= *rep.rhs;
  if (!pass) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("sufficient condition not met; this does not assert failure of T-smoothness");
  } else if (any_lower_bound) {
    rep.verdict = Verdict::inconclusive;
    rep.notes.push_back("condition holds with search lower bounds for gamma; the true sum may be larger");
  } else {
    rep.verdict = Verdict::tsmooth_or_empty;
  }
  return rep;
}

CriterionReport evaluate(const SurfaceModel& model, const DivisorClass& d, const std::vector<GermSpec>& sings,
                         const EvaluateOptions& options) {
  std::vector<SingularityTerm> terms;
  for (const auto& s : sings) terms.push_back({s, 1});
  return evaluate(model, d, terms, options);
}

std::vector<LemmaCondition> check_lemma_arithmetic(const LemmaInstance& inst) {
  if (inst.eps.size() != inst.local_degs.size()) throw InvalidInput("eps and local_degs differ in length");
  if (std::accumulate(inst.local_degs.begin(), inst.local_degs.end(), 0L) != inst.deg_X0)
    throw InvalidInput("deg_X0 must equal the sum of the local degrees");
  for (std::size_t i = 0; i < inst.eps.size(); ++i) {
    if (inst.local_degs[i] < 1) throw InvalidInput("local degrees must be positive");
    if (inst.eps[i] < 1 || inst.eps[i] > inst.local_degs[i]) throw InvalidInput("need 1 <= eps_i <= deg(X_i)");
  }
  const SurfaceModel& m = inst.model;
  const DivisorClass dk = inst.D - canonical_class(m);
  const Rational deg(inst.deg_X0);
  const Rational sum_eps(std::accumulate(inst.eps.begin(), inst.eps.end(), 0L));
  const Rational dk2(intersect(m, dk, dk));
  const Rational delta2(intersect(m, inst.Delta, inst.Delta));
  const Rational dk_delta(intersect(m, dk, inst.Delta));
  // (1/2 (D-K) - Delta)^2, kept rational
  const Rational half_sq = dk2 / 4 - dk_delta + delta2;

  std::vector<LemmaCondition> out;
  const Rational a_lhs(intersect(m, inst.D, inst.Delta));
  out.push_back({"a: D.Delta >= deg(X0) + sum eps", a_lhs >= deg + sum_eps, a_lhs, deg + sum_eps});
  const Rational b_rhs(intersect(m, dk - inst.Delta, inst.Delta));
  out.push_back({"b: deg(X0) >= (D-K-Delta).Delta", deg >= b_rhs, deg, b_rhs});
  const DivisorClass c_div = dk - 2 * inst.Delta;
  const Rational c_lhs(intersect(m, c_div, c_div));
  out.push_back({"c: (D-K-2 Delta)^2 > 0", c_lhs > 0, c_lhs, 0});
  const Rational mid = dk2 / 4 - deg;
  out.push_back({"A1 lower: 0 <= (D-K)^2/4 - deg(X0)", mid >= 0, 0, mid});
  out.push_back({"A1 upper: (D-K)^2/4 - deg(X0) <= ((D-K)/2 - Delta)^2", mid <= half_sq, mid, half_sq});
  return out;
}

}  // namespace tsmooth
