#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsmooth/invariants.hpp"
#include "tsmooth/rational.hpp"

namespace tsmooth {

/// Picard number one: NS = Z*L, K = kappa*L.
struct PicardOne {
  long L_self;  // L^2
  long kappa;
};
struct ProjectivePlane {};
struct P3Hypersurface {
  long n;  // degree, >= 4
};
struct K3Surface {
  long n;  // L^2
};
/// C1 x C2 with NS = C1*Z + C2*Z (C_i the fibre classes), g1 >= g2.
struct ProductOfCurves {
  long g1;
  long g2;
};
/// Geometrically ruled over a genus g curve, NS = C0*Z + F*Z, invariant e >= -g.
struct RuledSurface {
  long g;
  long e;
};

enum class CriterionFamily { picard_one, product, ruled };

class SurfaceModel {
 public:
  using Variant = std::variant<PicardOne, ProjectivePlane, P3Hypersurface, K3Surface, ProductOfCurves, RuledSurface>;

  static SurfaceModel picard_one(long L_self, long kappa);
  static SurfaceModel projective_plane();
  static SurfaceModel p3_hypersurface(long n);
  static SurfaceModel k3(long n);
  static SurfaceModel product_of_curves(long g1, long g2);
  static SurfaceModel ruled(long g, long e);

  const Variant& variant() const { return v_; }
  std::string variant_name() const;  // "picard_one", "projective_plane", ...
  std::string describe() const;      // "p3_hypersurface(n=5)"
  CriterionFamily family() const;
  int rank() const { return family() == CriterionFamily::picard_one ? 1 : 2; }

  /// (L^2, kappa) for the rank-one variants.
  std::optional<PicardOne> picard_one_specialization() const;
  /// Gram matrix on the NS basis; 1x1 matrices live in entry [0][0].
  std::array<std::array<long, 2>, 2> intersection_form() const;

 private:
  explicit SurfaceModel(Variant v) : v_(v) {}
  Variant v_;
};

struct DivisorClass {
  std::vector<long> coords;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(long s, const DivisorClass& a);

/// Bilinear form. Throws InvalidInput on rank mismatch.
Integer intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2);

/// K in the model basis (for rank one: the single coordinate kappa).
DivisorClass canonical_class(const SurfaceModel& model);

Rational d_minus_k_squared(const SurfaceModel& model, const DivisorClass& d);

struct Hypothesis {
  std::string name;
  bool ok = true;
  std::string reason;
};

struct CriterionConstants {
  CriterionFamily family = CriterionFamily::picard_one;
  /// Rank one: 1/max{1, 1+kappa}.
  std::optional<Alpha> alpha;
  /// Products and ruled surfaces: the theorem constant (<= 1/4); absent when hypotheses fail.
  std::optional<Rational> gamma;
  /// Products and ruled surfaces, when the denominator is nonzero.
  std::optional<Rational> A;
  std::optional<long> kappa;
  Rational dk_squared;
  std::vector<Hypothesis> hypotheses;
  /// alpha * (D-K)^2 or gamma * (D-K)^2; absent when the constant could not be formed.
  std::optional<Rational> rhs;

  bool hypotheses_ok() const;
};

CriterionConstants criterion_constants(const SurfaceModel& model, const DivisorClass& d);

}  // namespace tsmooth
