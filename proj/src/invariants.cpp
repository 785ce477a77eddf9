#include "tsmooth/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tsmooth/errors.hpp"

namespace tsmooth {

Rational lambda_alpha(long d, long i, const Alpha& alpha) {
  if (d < 1) throw InvalidInput("lambda_alpha needs dim R/I >= 1");
  if (i <= d)
    throw LemmaViolation("i(f,g) = " + std::to_string(i) + " <= dim R/I = " + std::to_string(d) +
                         "; g cannot lie in an ideal containing the Tjurina ideal of f");
  const Rational& a = alpha.value();
  const Rational num = a * i + (1 - a) * d;
  return square(num) / (i - d);
}

Rational AchievedMultiplicities::gamma(const Alpha& alpha) const {
  Rational best = square(1 + alpha.value()) * colength;
  for (const auto& [i, g] : witnesses) best = std::max(best, lambda_alpha(colength, i, alpha));
  return best;
}

namespace {

const std::vector<Rational>& combination_coefficients() {
  static const std::vector<Rational> cs = {Rational(1), Rational(-1), Rational(2),
                                           Rational(-2), Rational(1, 2), Rational(-1, 2)};
  return cs;
}

int working_truncation(const Jet& f, long d) {
  // Room for monomials up to degree 2d+1 and for the germ itself.
  return std::max({f.truncation(), static_cast<int>(2 * d + 2), f.degree() + 1});
}

}  // namespace

AchievedMultiplicities achieved_multiplicities(const Jet& f, const LocalIdealRep& ideal,
                                               const SearchBudget& budget) {
  const CertifiedIdeal certified(ideal, budget.colength);
  const long d = certified.colength().value;
  if (d < 1) throw InvalidInput("the ideal must lie in the maximal ideal (colength >= 1)");
  const LocalIdealRep tj = tjurina_ideal(f);
  for (const auto& t : tj.generators())
    if (!certified.contains(t)) throw InvalidInput("the ideal does not contain the Tjurina ideal of f");

  AchievedMultiplicities out;
  out.colength = d;
  const std::size_t wanted = static_cast<std::size_t>(d);  // every i in (d, 2d]
  const int n = ideal.exact() ? working_truncation(f, d) : ideal.truncation();

  // Candidate pool in priority order; the search stops once every i in (d, 2d] is hit.
  std::vector<Jet> base;
  const LocalIdealRep reduced = reduce_generators(ideal, budget.colength);
  for (const auto& g : reduced.generators())
    base.push_back(g.exact() ? g.with_truncation(std::max(n, g.truncation())) : g);
  std::vector<Jet> monomials;
  for (int s = 1; s <= 2 * d + 1; ++s)
    for (int j = 0; j <= s; ++j) {
      if (s >= n) break;
      Jet m = Jet::monomial(s - j, j, n);
      if (certified.contains(m)) monomials.push_back(std::move(m));
    }

  std::vector<Jet> candidates = base;
  candidates.insert(candidates.end(), monomials.begin(), monomials.end());
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = 0; b < base.size(); ++b)
      if (a != b)
        for (const auto& c : combination_coefficients()) candidates.push_back(base[a] + base[b] * c);
  for (const auto& g : base)
    for (const auto& m : monomials)
      for (const auto& c : combination_coefficients()) candidates.push_back(g + m * c);
  for (std::size_t a = 0; a < monomials.size(); ++a)
    for (std::size_t b = a + 1; b < monomials.size(); ++b)
      for (const auto& c : combination_coefficients()) candidates.push_back(monomials[a] + monomials[b] * c);

  // i(f,g) <= 2d forces m^(2d) into <f,g>, so a single elimination at truncation 2d+1
  // decides it; instability there means i > 2d or infinite, both skipped.
  ColengthOptions probe = budget.colength;
  probe.initial_truncation = static_cast<int>(2 * d + 1);
  probe.cap = probe.initial_truncation;

  for (const auto& g : candidates) {
    if (out.witnesses.size() == wanted) break;
    if (out.candidates_tried >= budget.max_candidates) {
      out.warnings.push_back("candidate budget exhausted after " + std::to_string(out.candidates_tried) + " elements");
      break;
    }
    if (g.is_zero()) continue;
    ++out.candidates_tried;
    long i = 0;
    try {
      i = intersection_multiplicity(f, g, probe).value;
    } catch (const NotFinite&) {
      continue;
    }
    if (i <= d)
      throw LemmaViolation("i(f,g) = " + std::to_string(i) + " <= dim R/I = " + std::to_string(d) +
                           " for g = " + g.to_string());
    if (i <= 2 * d) out.witnesses.try_emplace(i, g);
  }
  if (out.witnesses.empty())
    out.warnings.push_back("no candidate reached i(f,g) <= 2 dim R/I; value is the (1+alpha)^2 dim R/I floor");
  return out;
}

GammaSearchResult gamma_alpha_search(const Jet& f, const LocalIdealRep& ideal, const Alpha& alpha,
                                     const SearchBudget& budget) {
  const AchievedMultiplicities achieved = achieved_multiplicities(f, ideal, budget);
  GammaSearchResult out{achieved.gamma(alpha), {}, achieved.warnings};
  for (const auto& [i, g] : achieved.witnesses) out.witnesses.push_back(GammaWitness{i, g});
  return out;
}

TauCiSearchResult tau_ci_search(const Jet& f, Equivalence eq, const SearchBudget& budget) {
  if (eq == Equivalence::topological)
    throw InvalidInput("topological tau_ci is only available for catalog types");
  TauCiSearchResult out;
  const Colength tau = tjurina_number(f, budget.colength);
  out.tau = tau.value;
  if (tau.value == 0) {
    out.exact = true;
    return out;
  }
  const LocalIdealRep tj = tjurina_ideal(f);
  const LocalIdealRep reduced = reduce_generators(tj, budget.colength);
  const auto& rgens = reduced.generators();
  const int n = std::max(tj.truncation(), budget.ci_pool_degree + 1);

  // Any ideal containing I^ea contains m^tau, so truncation tau+1 settles every candidate.
  ColengthOptions probe = budget.colength;
  probe.initial_truncation = static_cast<int>(tau.value + 1);
  probe.cap = probe.initial_truncation;

  struct Found {
    LocalIdealRep ideal;
    CertifiedIdeal certified;
  };
  std::vector<Found> found;
  if (rgens.size() == 2) {
    out.exact = true;  // I^ea itself is a complete intersection, so tau_ci = tau
    found.push_back({reduced, CertifiedIdeal(reduced, probe)});
  }

  std::vector<Jet> pool(rgens.begin(), rgens.end());
  for (int s = 1; s <= budget.ci_pool_degree; ++s)
    for (int j = 0; j <= s; ++j) pool.push_back(Jet::monomial(s - j, j, n));
  const std::size_t plain = pool.size();
  for (std::size_t a = 0; a < rgens.size(); ++a)
    for (std::size_t b = 0; b < rgens.size(); ++b)
      if (a != b)
        for (const auto& c : combination_coefficients()) pool.push_back(rgens[a] + rgens[b] * c);
  for (std::size_t a = rgens.size(); a < plain; ++a)
    for (std::size_t b = a + 1; b < plain; ++b)
      if (pool[a].degree() == pool[b].degree())
        for (const auto& c : combination_coefficients()) pool.push_back(pool[a] + pool[b] * c);

  auto already_found = [&](const CertifiedIdeal& cand, const Jet& p, const Jet& q) {
    for (const auto& fd : found)
      if (fd.certified.colength().value == cand.colength().value && fd.certified.contains(p) &&
          fd.certified.contains(q))
        return true;
    return false;
  };

  int tried = 0;
  const int pair_budget = budget.max_candidates * 4;
  for (std::size_t a = 0; a < pool.size() && tried < pair_budget; ++a)
    for (std::size_t b = a + 1; b < pool.size() && tried < pair_budget; ++b) {
      const Jet& p = pool[a];
      const Jet& q = pool[b];
      if (p.is_zero() || q.is_zero()) continue;
      ++tried;
      LocalIdealRep cand({p, q});
      std::optional<CertifiedIdeal> ci;
      try {
        ci.emplace(cand, probe);
      } catch (const NotFinite&) {
        continue;
      }
      const long c = ci->colength().value;
      if (c < 1 || c > tau.value) continue;
      if (!std::all_of(rgens.begin(), rgens.end(), [&](const Jet& g) { return ci->contains(g); })) continue;
      if (already_found(*ci, p, q)) continue;
      found.push_back({std::move(cand), std::move(*ci)});
    }

  std::stable_sort(found.begin(), found.end(), [](const Found& l, const Found& r) {
    return l.certified.colength().value > r.certified.colength().value;
  });
  for (auto& fd : found) {
    out.colengths.push_back(fd.certified.colength().value);
    out.ideals.push_back(std::move(fd.ideal));
  }
  out.value = out.colengths.empty() ? 0 : out.colengths.front();
  return out;
}

InvariantRecord invariants_of(const GermSpec& spec, const std::vector<Alpha>& alphas, const SearchBudget& budget) {
  InvariantRecord rec;
  if (spec.is_catalog()) {
    rec = catalog_invariants(spec, alphas);
  } else {
    if (spec.equivalence() == Equivalence::topological)
      throw InvalidInput("topological invariants are only available for catalog types (A, D, E, M)");
    const Jet& f = spec.germ();
    rec.label = spec.label();
    rec.equivalence = Equivalence::analytic;
    TauCiSearchResult ci;
    try {
      ci = tau_ci_search(f, Equivalence::analytic, budget);
    } catch (const NotFinite& e) {
      throw NotFinite("non-reduced germ (Tjurina ideal is not m-primary): " + std::string(e.what()));
    }
    rec.tau = ci.tau;
    if (ci.tau == 0) {
      rec.singular = false;
      rec.tau_ci = TauCi{0, true};
      rec.notes.push_back("no singularity");
      return rec;
    }
    rec.tau_ci = TauCi{ci.value, ci.exact};

    std::vector<AchievedMultiplicities> achieved;
    for (const auto& ideal : ci.ideals) achieved.push_back(achieved_multiplicities(f, ideal, budget));
    for (const auto& a : alphas) {
      GammaValue gv;
      if (achieved.empty()) {
        gv.note = "no complete intersection containing the Tjurina ideal was found";
      } else {
        Rational best = achieved.front().gamma(a);
        for (const auto& am : achieved) best = std::max(best, am.gamma(a));
        gv.value = best;
        gv.search_value = best;
        gv.provenance = Provenance::search_lower_bound;
      }
      rec.gamma[a] = gv;
    }
    for (const auto& am : achieved)
      for (const auto& w : am.warnings) rec.notes.push_back(w);

    if (auto nf = recognize_normal_form(f)) {
      const InvariantRecord cat = catalog_invariants(GermSpec::catalog(nf->family, nf->index, Equivalence::analytic), alphas);
      if (cat.tau != rec.tau)
        throw std::logic_error("kernel tau disagrees with the catalog for " + to_string(*nf));
      rec.tau_ci = cat.tau_ci;
      rec.notes.push_back("normal form of " + to_string(*nf) + "; closed forms apply");
      for (const auto& a : alphas) {
        GammaValue& gv = rec.gamma[a];
        const Rational closed = *cat.gamma.at(a).value;
        if (gv.search_value && *gv.search_value > closed)
          throw std::logic_error("gamma search exceeded the closed form for " + to_string(*nf));
        gv.value = closed;
        gv.provenance = Provenance::closed_form;
        gv.note = gv.search_value && *gv.search_value == closed ? "search attains the closed form"
                                                               : "search stays below the closed form";
      }
    }
  }
  if (const auto bad = chain_violations(rec); !bad.empty())
    throw std::logic_error("invariant chain violated: " + bad.front());
  return rec;
}

}  // namespace tsmooth
