#include "tsmooth/surface.hpp"

#include <algorithm>

#include "tsmooth/errors.hpp"

namespace tsmooth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string str(long v) { return std::to_string(v); }

}  // namespace

SurfaceModel SurfaceModel::picard_one(long L_self, long kappa) {
  if (L_self < 1) throw InvalidInput("picard_one needs L^2 >= 1 (L ample)");
  return SurfaceModel(PicardOne{L_self, kappa});
}

SurfaceModel SurfaceModel::projective_plane() { return SurfaceModel(ProjectivePlane{}); }

SurfaceModel SurfaceModel::p3_hypersurface(long n) {
  if (n < 4) throw InvalidInput("p3_hypersurface needs degree n >= 4");
  return SurfaceModel(P3Hypersurface{n});
}

SurfaceModel SurfaceModel::k3(long n) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("k3 needs an even L^2 = n >= 2");
  return SurfaceModel(K3Surface{n});
}

SurfaceModel SurfaceModel::product_of_curves(long g1, long g2) {
  if (g2 < 0) throw InvalidInput("genera must be nonnegative");
  if (g1 < g2) throw InvalidInput("product_of_curves needs g1 >= g2 (swap the factors)");
  return SurfaceModel(ProductOfCurves{g1, g2});
}

SurfaceModel SurfaceModel::ruled(long g, long e) {
  if (g < 0) throw InvalidInput("genus must be nonnegative");
  if (e < -g) throw InvalidInput("ruled surface needs e >= -g");
  return SurfaceModel(RuledSurface{g, e});
}

std::string SurfaceModel::variant_name() const {
  return std::visit(overloaded{[](const PicardOne&) { return "picard_one"; },
                               [](const ProjectivePlane&) { return "projective_plane"; },
                               [](const P3Hypersurface&) { return "p3_hypersurface"; },
                               [](const K3Surface&) { return "k3"; },
                               [](const ProductOfCurves&) { return "product_of_curves"; },
                               [](const RuledSurface&) { return "ruled"; }},
                    v_);
}

std::string SurfaceModel::describe() const {
  const std::string params = std::visit(
      overloaded{[](const PicardOne& p) { return "L2=" + str(p.L_self) + ", kappa=" + str(p.kappa); },
                 [](const ProjectivePlane&) { return std::string(); },
                 [](const P3Hypersurface& p) { return "n=" + str(p.n); },
                 [](const K3Surface& p) { return "n=" + str(p.n); },
                 [](const ProductOfCurves& p) { return "g1=" + str(p.g1) + ", g2=" + str(p.g2); },
                 [](const RuledSurface& p) { return "g=" + str(p.g) + ", e=" + str(p.e); }},
      v_);
  return variant_name() + "(" + params + ")";
}

CriterionFamily SurfaceModel::family() const {
  if (std::holds_alternative<ProductOfCurves>(v_)) return CriterionFamily::product;
  if (std::holds_alternative<RuledSurface>(v_)) return CriterionFamily::ruled;
  return CriterionFamily::picard_one;
}

std::optional<PicardOne> SurfaceModel::picard_one_specialization() const {
  return std::visit(overloaded{[](const PicardOne& p) -> std::optional<PicardOne> { return p; },
                               [](const ProjectivePlane&) -> std::optional<PicardOne> { return PicardOne{1, -3}; },
                               [](const P3Hypersurface& p) -> std::optional<PicardOne> { return PicardOne{p.n, p.n - 4}; },
                               [](const K3Surface& p) -> std::optional<PicardOne> { return PicardOne{p.n, 0}; },
                               [](const auto&) -> std::optional<PicardOne> { return std::nullopt; }},
                    v_);
}

std::array<std::array<long, 2>, 2> SurfaceModel::intersection_form() const {
  if (auto p = picard_one_specialization()) return {{{p->L_self, 0}, {0, 0}}};
  if (std::holds_alternative<ProductOfCurves>(v_)) return {{{0, 1}, {1, 0}}};
  const auto& r = std::get<RuledSurface>(v_);
  return {{{-r.e, 1}, {1, 0}}};
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.coords.size() != b.coords.size()) throw InvalidInput("divisor rank mismatch");
  DivisorClass out = a;
  for (std::size_t i = 0; i < b.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

DivisorClass operator*(long s, const DivisorClass& a) {
  DivisorClass out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

Integer intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2) {
  const auto r = static_cast<std::size_t>(model.rank());
  if (d1.coords.size() != r || d2.coords.size() != r)
    throw InvalidInput(model.describe() + " has Neron-Severi rank " + std::to_string(r) + ", divisor has " +
                       std::to_string(d1.coords.size() == r ? d2.coords.size() : d1.coords.size()) + " coordinates");
  const auto form = model.intersection_form();
  Integer s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s += Integer(form[i][j]) * d1.coords[i] * d2.coords[j];
  return s;
}

DivisorClass canonical_class(const SurfaceModel& model) {
  if (auto p = model.picard_one_specialization()) return {{p->kappa}};
  if (const auto* c = std::get_if<ProductOfCurves>(&model.variant())) return {{2 * c->g2 - 2, 2 * c->g1 - 2}};
  const auto& r = std::get<RuledSurface>(model.variant());
  return {{-2, 2 * r.g - 2 - r.e}};
}

Rational d_minus_k_squared(const SurfaceModel& model, const DivisorClass& d) {
  const DivisorClass dk = d - canonical_class(model);
  return Rational(intersect(model, dk, dk));
}

bool CriterionConstants::hypotheses_ok() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.ok; });
}

namespace {

Hypothesis at_least(const std::string& name, long value, long bound) {
  Hypothesis h{name, value >= bound, ""};
  if (!h.ok) h.reason = name + " violated: " + str(value) + " < " + str(bound);
  return h;
}

}  // namespace

CriterionConstants criterion_constants(const SurfaceModel& model, const DivisorClass& d) {
  CriterionConstants out;
  out.family = model.family();
  out.dk_squared = d_minus_k_squared(model, d);

  if (auto p = model.picard_one_specialization()) {
    const long dd = d.coords.at(0);
    const long k = p->kappa;
    out.kappa = k;
    out.alpha = Alpha(1, std::max(1L, 1 + k));
    out.hypotheses.push_back(at_least("d >= max{kappa+1, -kappa}", dd, std::max(k + 1, -k)));
    out.rhs = out.alpha->value() * out.dk_squared;
    return out;
  }

  if (const auto* c = std::get_if<ProductOfCurves>(&model.variant())) {
    const long a = d.coords.at(0), b = d.coords.at(1);
    out.hypotheses.push_back(at_least("a >= max{2-2g2, 2g2-1}", a, std::max(2 - 2 * c->g2, 2 * c->g2 - 1)));
    out.hypotheses.push_back(at_least("b >= max{2-2g1, 2g1-1}", b, std::max(2 - 2 * c->g1, 2 * c->g1 - 1)));
    const long den = b - 2 * c->g1 + 2;
    if (den != 0) out.A = ratio(a - 2 * c->g2 + 2, den);
    if (!out.hypotheses_ok()) return out;
    const long g1 = c->g1, g2 = c->g2;
    if (g1 <= 1) {
      out.gamma = Rational(1, 4);
    } else {
      const Rational A = *out.A;
      Rational g = std::min(Rational(1, 4 * g1), Rational(1 / (4 * (g1 - 1) * A)));
      if (g2 >= 2) g = std::min({g, Rational(1, 4 * g1 + 4 * g2 - 4), Rational(A / (4 * (g2 - 1)))});
      out.gamma = g;
    }
    out.rhs = *out.gamma * out.dk_squared;
    return out;
  }

  const auto& r = std::get<RuledSurface>(model.variant());
  const long a = d.coords.at(0), b = d.coords.at(1);
  const Rational half_ae = ratio(a * r.e, 2);
  {
    const long m = std::max(2 * r.g - 2, 2 - 2 * r.g);
    Hypothesis h{"b > max{2g-2, 2-2g} + ae/2", Rational(b) > m + half_ae, ""};
    if (!h.ok) h.reason = h.name + " violated: " + str(b) + " <= " + to_string(m + half_ae);
    out.hypotheses.push_back(h);
    Hypothesis ha{"a > 2", a > 2, ""};
    if (!ha.ok) ha.reason = "a > 2 violated: a = " + str(a);
    out.hypotheses.push_back(ha);
  }
  const Rational kappa2 = Rational(b + 2 - 2 * r.g) - half_ae;
  if (sgn(kappa2) != 0) out.A = Rational(a + 2) / kappa2;
  if (!out.hypotheses_ok()) return out;
  if (r.g <= 1)
    out.gamma = Rational(1, 4);
  else
    out.gamma = std::min(Rational(1, 4 * r.g), Rational(1 / (4 * (r.g - 1) * *out.A)));
  out.rhs = *out.gamma * out.dk_squared;
  return out;
}

}  // namespace tsmooth
