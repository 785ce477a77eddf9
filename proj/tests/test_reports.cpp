#include <doctest.h>

#include <sstream>

#include "tsmooth/errors.hpp"
#include "tsmooth/reports.hpp"

using namespace tsmooth;

TEST_CASE("germ JSON") {
  auto a = germ_from_json(json::parse(R"({"type":"A","k":3})"));
  CHECK(a.is_catalog());
  CHECK(a.catalog_type() == CatalogType{Family::A, 3});
  CHECK(a.equivalence() == Equivalence::topological);

  auto m = germ_from_json(json::parse(R"({"type":"M","m":4,"equivalence":"analytic"})"));
  CHECK(m.label() == "M4/analytic");

  auto p = germ_from_json(json::parse(R"({"poly":"y^2-x^5"})"));
  CHECK_FALSE(p.is_catalog());
  CHECK(p.equivalence() == Equivalence::analytic);
  CHECK(p.germ().exact());

  auto t = germ_from_json(json::parse(R"({"poly":"y^2-x^5","truncation":4})"));
  CHECK_FALSE(t.germ().exact());

  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"type":"A"})")), InvalidInput);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"type":"Q","k":1})")), InvalidInput);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"type":"A","k":"3"})")), InvalidInput);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"type":"A","k":3,"colour":1})")), InvalidInput);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"poly":"2x"})")), ParseError);
  CHECK_THROWS_AS(germ_from_json(json::parse(R"({"poly":"x+1"})")), InvalidInput);
}

TEST_CASE("surface and divisor JSON round-trip") {
  for (const char* s : {R"({"variant":"projective_plane"})", R"({"variant":"picard_one","L2":3,"kappa":-1})",
                        R"({"variant":"p3_hypersurface","n":5})", R"({"variant":"k3","n":4})",
                        R"({"variant":"product_of_curves","g1":2,"g2":1})", R"({"variant":"ruled","g":1,"e":-1})"}) {
    const json j = json::parse(s);
    const SurfaceModel m = surface_from_json(j);
    CHECK(to_json(m) == j);
    const json d = m.rank() == 1 ? json{{"d", 6}} : json{{"a", 4}, {"b", 9}};
    CHECK(to_json(divisor_from_json(d, m), m) == d);
  }
  CHECK_THROWS_AS(surface_from_json(json::parse(R"({"variant":"p3_hypersurface"})")), InvalidInput);
  CHECK_THROWS_AS(surface_from_json(json::parse(R"({"variant":"p3_hypersurface","n":3})")), InvalidInput);
  CHECK_THROWS_AS(divisor_from_json(json::parse(R"({"d":3})"), SurfaceModel::ruled(0, 0)), InvalidInput);
}

TEST_CASE("problem options") {
  const auto p = problem_from_json(json::parse(R"({
    "surface": {"variant": "projective_plane"}, "divisor": {"d": 5},
    "singularities": [{"type": "A", "k": 1, "count": 3}],
    "options": {"alphas": [0, "1/2"], "budget": 17, "strictness_override": "force_strict"}})"));
  CHECK(p.singularities.front().count == 3);
  CHECK(p.alphas.size() == 2);
  CHECK(p.options.budget.max_candidates == 17);
  CHECK(p.options.force_strict);
  const auto doc = check_document(p);
  CHECK(doc["meta"]["version"] == kVersion);
  CHECK(doc["invariants"].size() == 1);
  CHECK(doc["report"]["lhs"] == "12");

  CHECK_THROWS_AS(problem_from_json(json::parse(R"({
    "surface": {"variant": "projective_plane"}, "divisor": {"d": 5},
    "singularities": [{"type": "A", "k": 1, "count": 0}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({
    "surface": {"variant": "projective_plane"}, "divisor": {"d": 5},
    "singularities": [{"type": "A", "k": 1}], "options": {"alphas": ["2"]}})")),
                  InvalidInput);
}

TEST_CASE("rationals are serialized exactly") {
  const auto rep = evaluate(SurfaceModel::p3_hypersurface(5), DivisorClass{{4}},
                            std::vector<SingularityTerm>{{GermSpec::catalog(Family::A, 1), 10}});
  const json j = to_json(rep);
  CHECK(j["lhs"] == "45/2");
  CHECK(j["rhs"] == "45/2");
  CHECK(j["margin"] == "0");
  CHECK(j["alpha_used"] == "1/2");
  CHECK(j["verdict"] == "TSMOOTH_OR_EMPTY");
  CHECK(j["verdict_text"] == "T-smooth or empty");
}

namespace {

json sweep_json(const std::string& axes, const std::string& links = "[]") {
  return json::parse(R"({"base": {"surface": {"variant": "ruled", "g": 0, "e": 0}, "divisor": {"a": 3, "b": 9},
                         "singularities": [{"type": "A", "k": 2, "count": 1}]},
                         "axes": )" +
                     axes + R"(, "links": )" + links + "}");
}

}  // namespace

TEST_CASE("sweep order, links and CSV") {
  const auto s = sweep_from_json(sweep_json(
      R"([{"path": "/divisor/a", "from": 3, "to": 5}, {"path": "/singularities/0/count", "name": "r", "from": 1, "to": 4, "step": 3}])",
      R"([{"path": "/divisor/b", "axis": "a", "scale": 3, "offset": 1}])"));
  const auto rows = run_sweep(s);
  REQUIRE(rows.size() == 6);
  const std::vector<std::vector<long>> want = {{3, 1, 10}, {3, 4, 10}, {4, 1, 13}, {4, 4, 13}, {5, 1, 16}, {5, 4, 16}};
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].params == want[i]);
  std::ostringstream csv;
  write_sweep_csv(csv, s, rows);
  CHECK(csv.str().rfind("a,r,b,lhs,rhs,margin,margin_approx,strictness,verdict\n3,1,10,4,", 0) == 0);
}

TEST_CASE("sweep validation") {
  CHECK_THROWS_AS(sweep_from_json(sweep_json(R"([{"path": "/divisor/c", "from": 1, "to": 2}])")), InvalidInput);
  CHECK_THROWS_AS(sweep_from_json(sweep_json(R"([{"path": "/surface/variant", "from": 1, "to": 2}])")), InvalidInput);
  CHECK_THROWS_AS(sweep_from_json(sweep_json(R"([{"path": "/divisor/a", "from": 1, "to": 2, "step": 0}])")),
                  InvalidInput);
  CHECK_THROWS_AS(sweep_from_json(sweep_json(R"([{"path": "/divisor/a", "from": 1, "to": 2}])",
                                             R"([{"path": "/divisor/b", "axis": "q"}])")),
                  InvalidInput);
  const auto empty = sweep_from_json(sweep_json(R"([{"path": "/divisor/a", "from": 5, "to": 4}])"));
  CHECK(run_sweep(empty).empty());
}

TEST_CASE("catalog table defaults") {
  const auto rows = catalog_table(std::nullopt, std::nullopt, std::nullopt, {Alpha(1)});
  CHECK(rows.size() == 10 + 9 + 3 + 7);
  const auto d = catalog_table(Family::D, 4, 6, {Alpha(0)});
  CHECK(d.size() == 3);
  CHECK_THROWS_AS(catalog_table(Family::E, 5, 6, {Alpha(0)}), InvalidInput);
}
