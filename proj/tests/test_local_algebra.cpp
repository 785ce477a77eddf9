#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "oracles.hpp"
#include "tsmooth/errors.hpp"
#include "tsmooth/local_algebra.hpp"

using namespace tsmooth;

namespace {

Jet P(const char* text) { return make_jet(text, 40); }

LocalIdealRep ideal(std::initializer_list<const char*> gens) {
  std::vector<Jet> v;
  for (auto g : gens) v.push_back(P(g));
  return LocalIdealRep(std::move(v));
}

std::vector<Jet> polys(std::initializer_list<const char*> gens) {
  std::vector<Jet> v;
  for (auto g : gens) v.push_back(P(g));
  return v;
}

}  // namespace

TEST_CASE("maximal ideal has colength one") {
  Colength c = colength(ideal({"x", "y"}));
  CHECK(c.value == 1);
  CHECK(c.stable);
  CHECK(c.certificate == 1);
}

TEST_CASE("monomial staircase <x^2, y^3>") {
  CHECK(oracle::staircase_colength({{2, 0}, {0, 3}}) == 6);
  Colength c = colength(ideal({"x^2", "y^3"}));
  CHECK(c.value == 6);
  CHECK(c.stable);
}

TEST_CASE("Tjurina ideal of A2 written out") {
  // <x^2, y, y^2 - x^3> reduces to <x^2, y>.
  CHECK(oracle::staircase_colength({{2, 0}, {0, 1}}) == 2);
  CHECK(oracle::dense_colength(polys({"x^2", "y", "y^2 - x^3"})) == 2);
  CHECK(colength(ideal({"x^2", "y", "y^2 - x^3"})).value == 2);
}

TEST_CASE("intersection multiplicities") {
  CHECK(intersection_multiplicity(P("y^2 - x^3"), P("y")).value == 3);
  CHECK(intersection_multiplicity(P("x"), P("y")).value == 1);
  CHECK(oracle::dense_colength(polys({"x^2 - y^2", "x^2 + y^2"})) == 4);
  CHECK(intersection_multiplicity(P("x^2 - y^2"), P("x^2 + y^2")).value == 4);
  // Units do not count.
  CHECK(intersection_multiplicity(P("x*(1 + y)"), P("y")).value == 1);
  CHECK(intersection_multiplicity(P("1 + x"), P("y")).value == 0);
}

TEST_CASE("shared components are not finite") {
  CHECK_THROWS_AS(intersection_multiplicity(P("x*y"), P("x^2")), NotFinite);
  CHECK_THROWS_AS(intersection_multiplicity(P("y^2 - x^3"), P("(y^2 - x^3)*(x + y)")), NotFinite);
  CHECK_THROWS_AS(colength(ideal({"x"})), NotFinite);
  ColengthOptions tight;
  tight.cap = 12;
  // Three generators, no Bezout bound: escalation runs to the cap.
  CHECK_THROWS_AS(colength(ideal({"x*y", "x^2", "x^3*y"}), tight), NotFinite);
}

TEST_CASE("Tjurina ideal generators and numbers") {
  LocalIdealRep node = tjurina_ideal(P("x*y"));
  REQUIRE(node.generators().size() == 3);
  CHECK(node.generators()[0] == P("y").with_truncation(node.truncation()));
  CHECK(node.generators()[1] == P("x").with_truncation(node.truncation()));
  CHECK(colength(node).value == 1);

  LocalIdealRep cusp = tjurina_ideal(P("y^2 - x^3"));
  CHECK(cusp.generators()[0] == P("-3*x^2").with_truncation(cusp.truncation()));
  CHECK(cusp.generators()[1] == P("2*y").with_truncation(cusp.truncation()));
  CHECK(colength(cusp).value == 2);

  for (int k = 1; k <= 6; ++k) {
    Jet f = P(("y^2 - x^" + std::to_string(k + 1)).c_str());
    CHECK(oracle::dense_colength({f.partial_x(), f.partial_y(), f}) == k);
    CHECK(tjurina_number(f).value == k);
  }
}

TEST_CASE("Tjurina number of three concurrent lines") {
  Jet f = P("x*y*(x + y)");
  CHECK(oracle::dense_colength({f.partial_x(), f.partial_y(), f}) == 4);
  CHECK(tjurina_number(f).value == 4);
}

TEST_CASE("non-quasihomogeneous germ: tau < mu") {
  // x^4 + y^5 + x^2 y^3 (W-type perturbation): mu = 12, tau = 11.
  Jet f = P("x^4 + y^5 + x^2*y^3");
  const long oracle_tau = oracle::dense_colength({f.partial_x(), f.partial_y(), f});
  const long oracle_mu = oracle::dense_colength({f.partial_x(), f.partial_y()});
  CHECK(oracle_mu == 12);
  CHECK(oracle_tau == 11);
  CHECK(tjurina_number(f).value == oracle_tau);
  CHECK(intersection_multiplicity(f.partial_x(), f.partial_y()).value == oracle_mu);
}

TEST_CASE("smooth and non-reduced germs") {
  CHECK(tjurina_number(P("x")).value == 0);
  CHECK(tjurina_number(P("y + x^2")).value == 0);
  CHECK_THROWS_AS(tjurina_number(P("y^2")), NotFinite);
  CHECK_THROWS_AS(tjurina_number(P("(y - x^2)^2*(x + y)")), NotFinite);
  CHECK_THROWS_AS(tjurina_ideal(P("1 + x")), InvalidInput);
}

TEST_CASE("inexact generators only escalate up to their truncation") {
  Jet f = make_jet("y^2 - x^3 + x^20", 12);
  CHECK(tjurina_number(f).value == 2);
  Jet short_f = make_jet("y^2 - x^7", 8);
  CHECK(tjurina_number(short_f).value == 6);
  CHECK_THROWS_AS(tjurina_number(make_jet("y^2 - x^7", 5)), std::exception);
}

TEST_CASE("membership and generator reduction") {
  LocalIdealRep cusp = tjurina_ideal(P("y^2 - x^3"));
  CHECK(ideal_contains(cusp, P("x^2")));
  CHECK(ideal_contains(cusp, P("y + x^5")));
  CHECK_FALSE(ideal_contains(cusp, P("x")));
  CHECK_FALSE(ideal_contains(cusp, P("x + y")));
  LocalIdealRep reduced = reduce_generators(cusp);
  CHECK(reduced.generators().size() == 2);
  CHECK(colength(reduced).value == 2);

  LocalIdealRep w = tjurina_ideal(P("x^4 + y^5 + x^2*y^3"));
  CHECK(reduce_generators(w).generators().size() == 3);
}

TEST_CASE("certify records m^k ⊆ I") {
  LocalIdealRep c = certify(ideal({"x^2", "y^3"}));
  REQUIRE(c.primary_certificate());
  CHECK(*c.primary_certificate() == 4);  // x^2*y^2 is the last degree-4 monomial to fall in
}

// --- properties over a corpus of germs ------------------------------------

TEST_CASE("colength stability and certificate hold on the corpus") {
  for (auto text : kGermCorpus) {
    Jet f = P(text);
    LocalIdealRep t = tjurina_ideal(f);
    Colength c = colength(t);
    CAPTURE(text);
    REQUIRE(c.stable);
    CHECK(c.certificate <= c.value + 1);
    IdealSpan above(t.generators_at(c.truncation + 4), c.truncation + 4);
    CHECK(above.quotient_dimension() == c.value);
    IdealSpan at(t.generators_at(c.truncation + 2), c.truncation + 2);
    CHECK(at.contains_all_monomials_of_degree(static_cast<int>(c.value)));
    CHECK(oracle::dense_colength(t.generators()) == c.value);
  }
}

TEST_CASE("intersection multiplicity is symmetric and additive") {
  for (std::size_t a = 0; a < kGermCorpus.size(); ++a)
    for (std::size_t b = 0; b < kGermCorpus.size(); ++b) {
      if (a == b) continue;
      Jet f = P(kGermCorpus[a]);
      Jet g = P(kGermCorpus[b]);
      long fg = -1, gf = -1;
      try {
        fg = intersection_multiplicity(f, g).value;
      } catch (const NotFinite&) {
      }
      try {
        gf = intersection_multiplicity(g, f).value;
      } catch (const NotFinite&) {
      }
      CAPTURE(kGermCorpus[a]);
      CAPTURE(kGermCorpus[b]);
      CHECK(fg == gf);
    }
  const std::vector<const char*> lines = {"x", "y", "x + y", "x - 2*y", "y - x^2", "x + y^3"};
  for (auto ft : kGermCorpus) {
    Jet f = P(ft);
    for (auto gt : lines)
      for (auto ht : lines) {
        Jet g = P(gt), h = P(ht);
        long lhs = -1, rhs = -1;
        try {
          lhs = intersection_multiplicity(f, g * h).value;
          rhs = intersection_multiplicity(f, g).value + intersection_multiplicity(f, h).value;
        } catch (const NotFinite&) {
          continue;
        }
        CAPTURE(ft);
        CAPTURE(gt);
        CAPTURE(ht);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("Lemma: colength(I) < i(f,g) for g in I ⊇ I^ea(f)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (auto text : kGermCorpus) {
    Jet f = P(text);
    LocalIdealRep t = tjurina_ideal(f);
    const long d = colength(t).value;
    const auto& gens = t.generators();
    for (int s = 0; s < 6; ++s) {
      Jet g = gens[0] * Rational(coef(rng)) + gens[1] * Rational(coef(rng)) + gens[2] * Rational(coef(rng));
      g = g + gens[s % 2].shifted(s % 3, 1);
      if (g.is_zero()) continue;
      long i = -1;
      try {
        i = intersection_multiplicity(f, g).value;
      } catch (const NotFinite&) {
        continue;  // g shares a branch with f
      }
      CAPTURE(text);
      CAPTURE(g.to_string());
      CHECK(d < i);
    }
  }
}
