#include <sstream>

#include "tsmooth/errors.hpp"
#include "tsmooth/invariants.hpp"

namespace tsmooth {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::M: return "M";
  }
  return "?";
}

std::string to_string(Equivalence e) { return e == Equivalence::topological ? "topological" : "analytic"; }

std::string to_string(const CatalogType& t) { return to_string(t.family) + std::to_string(t.index); }

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::search_lower_bound: return "search_lower_bound";
    case Provenance::unavailable: return "unavailable";
  }
  return "?";
}

GermSpec GermSpec::catalog(Family family, int index, Equivalence eq) {
  const std::string name = to_string(CatalogType{family, index});
  switch (family) {
    case Family::A:
      if (index < 1) throw InvalidInput(name + ": A_k needs k >= 1");
      break;
    case Family::D:
      if (index < 4) throw InvalidInput(name + ": D_k needs k >= 4");
      break;
    case Family::E:
      if (index < 6 || index > 8) throw InvalidInput(name + ": E_k needs k in {6, 7, 8}");
      break;
    case Family::M:
      if (index < 2) throw InvalidInput(name + ": M_m needs m >= 2");
      break;
  }
  return GermSpec(CatalogType{family, index}, eq);
}

GermSpec GermSpec::explicit_germ(Jet f, Equivalence eq) {
  if (f.is_zero()) throw InvalidInput("explicit germ is the zero polynomial");
  if (sgn(f.coeff(0, 0)) != 0) throw InvalidInput("explicit germ must vanish at the origin");
  return GermSpec(std::move(f), eq);
}

std::string GermSpec::label() const {
  if (is_catalog()) {
    std::string s = to_string(catalog_type());
    if (catalog_type().family == Family::M && equivalence_ == Equivalence::analytic) s += "/analytic";
    return s;
  }
  return "poly(" + germ().to_string() + ")";
}

Alpha::Alpha(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) throw InvalidInput("alpha must lie in [0, 1], got " + to_string(value_));
}

namespace {

// First D_k branch while k <= 4 + sqrt(2)*(2+alpha), decided without irrationals.
bool d_first_branch(int k, const Rational& a) {
  if (k < 4) return true;
  const Rational lhs = Rational((k - 4) * (k - 4));
  return lhs <= 2 * square(2 + a);
}

Rational gamma_closed_form(const CatalogType& t, const Rational& a) {
  const int k = t.index;
  switch (t.family) {
    case Family::A:
      return square(k + a);
    case Family::D:
      return d_first_branch(k, a) ? Rational(square(k + 2 * a) / 2) : square(k - 2 + a);
    case Family::E:
      return square(k + 2 * a) / 2;
    case Family::M:
      if (k == 2) return square(1 + a);  // M_2 = A_1
      return 2 * square(k - 1 + a);
  }
  throw std::logic_error("unknown family");
}

long tau_ci_es_ordinary(int m) {
  if (m == 2) return 1;
  if (m % 2 == 1) return static_cast<long>(m + 1) * (m + 1) / 4;
  return static_cast<long>(m) * (m + 2) / 4;
}

}  // namespace

InvariantRecord catalog_invariants(const GermSpec& spec, const std::vector<Alpha>& alphas) {
  if (!spec.is_catalog()) throw InvalidInput("catalog_invariants needs a catalog type");
  const CatalogType t = spec.catalog_type();
  InvariantRecord rec;
  rec.label = spec.label();
  rec.equivalence = spec.equivalence();

  const bool simple = t.family != Family::M || t.index == 2;
  if (simple) {
    const long k = t.family == Family::M ? 1 : t.index;
    // Quasihomogeneous: I^ea = <f_x, f_y> is itself a complete intersection.
    rec.tau = k;
    rec.tau_ci = TauCi{k, true};
    if (t.family == Family::M) rec.notes.push_back("M2 is the node A1");
    for (const auto& a : alphas) rec.gamma[a] = GammaValue{gamma_closed_form(t, a.value()), Provenance::closed_form, {}, ""};
    return rec;
  }

  const int m = t.index;
  if (spec.equivalence() == Equivalence::topological) {
    // I^es(M_m) = <f_x, f_y> + m^m.
    rec.tau = (static_cast<long>(m) * m + m - 4) / 2;
    rec.tau_ci = TauCi{tau_ci_es_ordinary(m), true};
    for (const auto& a : alphas) rec.gamma[a] = GammaValue{gamma_closed_form(t, a.value()), Provenance::closed_form, {}, ""};
  } else {
    std::string note = "gamma^ea of an ordinary " + std::to_string(m) + "-fold point has no closed form";
    if (m == 3) note += " here; analytically M3 is D4";
    rec.notes.push_back(note);
    for (const auto& a : alphas) rec.gamma[a] = GammaValue{std::nullopt, Provenance::unavailable, {}, note};
  }
  return rec;
}

std::optional<CatalogType> recognize_normal_form(const Jet& f) {
  if (!f.exact()) return std::nullopt;
  const auto& t = f.terms();
  if (t.size() == 1 && t.begin()->first == Exponent{1, 1}) return CatalogType{Family::A, 1};
  if (t.size() != 2) return std::nullopt;
  const Exponent a = t.begin()->first;
  const Exponent b = std::next(t.begin())->first;
  for (auto [sq, pw] : {std::pair{a, b}, std::pair{b, a}}) {
    if (sq == Exponent{0, 2} && pw.y == 0 && pw.x >= 2) return CatalogType{Family::A, pw.x - 1};
    if (sq == Exponent{2, 0} && pw.x == 0 && pw.y >= 2) return CatalogType{Family::A, pw.y - 1};
  }
  return std::nullopt;
}

std::vector<std::string> chain_violations(const InvariantRecord& rec) {
  std::vector<std::string> out;
  if (!rec.singular || !rec.tau_ci) return out;
  const Rational tci(rec.tau_ci->value);
  for (const auto& [alpha, g] : rec.gamma) {
    if (!g.value) continue;
    const Rational& a = alpha.value();
    std::ostringstream where;
    where << rec.label << " at alpha=" << to_string(a) << ": ";
    if (g.provenance == Provenance::closed_form && rec.tau_ci->exact && square(1 + a) * tci > *g.value)
      out.push_back(where.str() + "(1+a)^2 tau_ci > gamma");
    if (*g.value > square(tci + a)) out.push_back(where.str() + "gamma > (tau_ci+a)^2");
    if (rec.tau && square(tci + a) > square(Rational(*rec.tau) + a))
      out.push_back(where.str() + "(tau_ci+a)^2 > (tau+a)^2");
  }
  return out;
}

}  // namespace tsmooth
