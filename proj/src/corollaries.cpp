#include "tsmooth/criteria.hpp"

namespace tsmooth {

namespace {

SingularityTerm A(int k, long count) { return {GermSpec::catalog(Family::A, k), count}; }
SingularityTerm M(int m, long count) { return {GermSpec::catalog(Family::M, m), count}; }

bool passes(const CriterionReport& r) { return r.verdict == Verdict::tsmooth_or_empty; }

void compare(CorollaryCheck& c, bool got, bool want, const std::string& where) {
  ++c.points;
  if (got != want) c.mismatches.push_back(where + (got ? ": evaluate passes, bound fails" : ": bound passes, evaluate fails"));
}

std::string at(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += (s.empty() ? "" : ", ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

}  // namespace

std::vector<CorollaryCheck> cross_check_corollaries() {
  std::vector<CorollaryCheck> out;

  {
    // 4k + 9m + sum 2 m_i^2 against (d+3)^2; "<=" once a cusp or a triple point is present
    CorollaryCheck c{"plane: 4k+9m+sum 2m_i^2 vs (d+3)^2", 0, {}};
    const auto p2 = SurfaceModel::projective_plane();
    for (long d = 3; d <= 20; ++d)
      for (long k = 0; k <= 30; k += 3)
        for (long m = 0; m <= 12; ++m)
          for (int mult : {0, 3, 4}) {
            std::vector<SingularityTerm> s;
            if (k) s.push_back(A(1, k));
            if (m) s.push_back(A(2, m));
            if (mult) s.push_back(M(mult, 1));
            if (s.empty()) continue;
            const long lhs = 4 * k + 9 * m + 2 * mult * mult;
            const long rhs = (d + 3) * (d + 3);
            const bool relaxed = m > 0 || mult > 0;
            compare(c, passes(evaluate(p2, DivisorClass{{d}}, s)), relaxed ? lhs <= rhs : lhs < rhs,
                    at({{"d", d}, {"k", k}, {"m", m}, {"M", mult}}));
          }
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"P3 hypersurface: r nodes vs n(d-n+4)^2/(n-3)", 0, {}};
    for (long n = 4; n <= 8; ++n)
      for (long d = n - 3; d <= 20; ++d) {
        const auto s = SurfaceModel::p3_hypersurface(n);
        const Rational rhs = ratio(n * (d - n + 4) * (d - n + 4), n - 3);
        const Rational node = square(1 + Rational(1, n - 3));
        for (long r = 1; r * node <= rhs + 2; ++r) {
          const Rational lhs = r * node;
          compare(c, passes(evaluate(s, DivisorClass{{d}}, {A(1, r)})), n >= 5 ? lhs <= rhs : lhs < rhs,
                  at({{"n", n}, {"d", d}, {"r", r}}));
        }
      }
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"quintic: r <= floor(10/9 (d-1)^2)", 0, {}};
    const auto s = SurfaceModel::p3_hypersurface(5);
    for (long d = 2; d <= 20; ++d) {
      const long bound = 10 * (d - 1) * (d - 1) / 9;
      for (long r = 1; r <= bound + 3; ++r)
        compare(c, passes(evaluate(s, DivisorClass{{d}}, {A(1, r)})), r <= bound, at({{"d", d}, {"r", r}}));
    }
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"K3: 4r < d^2 n", 0, {}};
    for (long n : {2, 4, 6})
      for (long d = 1; d <= 20; ++d) {
        const auto s = SurfaceModel::k3(n);
        const auto rep = evaluate(s, DivisorClass{{d}}, {A(1, 1)});
        ++c.points;
        if (*rep.rhs != d * d * n) c.mismatches.push_back(at({{"n", n}, {"d", d}}) + ": rhs != d^2 n");
        for (long r = 1; 4 * r <= d * d * n + 8; ++r)
          compare(c, passes(evaluate(s, DivisorClass{{d}}, {A(1, r)})), 4 * r < d * d * n,
                  at({{"n", n}, {"d", d}, {"r", r}}));
      }
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"elliptic product: r < ab/2", 0, {}};
    const auto s = SurfaceModel::product_of_curves(1, 1);
    for (long a = 3; a <= 30; ++a)
      for (long b = 3; b <= 30; ++b)
        for (long r = 1; 2 * r <= a * b + 4; ++r)
          compare(c, passes(evaluate(s, DivisorClass{{a, b}}, {A(1, r)})), 2 * r < a * b,
                  at({{"a", a}, {"b", b}, {"r", r}}));
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"elliptic product: sum 4(m_i-1)^2 < ab", 0, {}};
    const auto s = SurfaceModel::product_of_curves(1, 1);
    std::vector<std::vector<int>> configs;
    // the quoted bound is for m_i >= 3; M2 is a node with gamma_0 = 1
    for (int m1 = 3; m1 <= 8; ++m1) {
      configs.push_back({m1});
      for (int m2 = m1; m2 <= 8; ++m2) {
        configs.push_back({m1, m2});
        for (int m3 = m2; m3 <= 8; ++m3) configs.push_back({m1, m2, m3});
      }
    }
    for (long a = 3; a <= 30; ++a)
      for (long b = 3; b <= 30; ++b)
        for (const auto& ms : configs) {
          std::vector<SingularityTerm> sing;
          long sum = 0;
          std::string label;
          for (int m : ms) {
            sing.push_back(M(m, 1));
            sum += 4L * (m - 1) * (m - 1);
            label += "M" + std::to_string(m);
          }
          compare(c, passes(evaluate(s, DivisorClass{{a, b}}, sing)), sum < a * b,
                  at({{"a", a}, {"b", b}}) + ", " + label);
        }
    out.push_back(std::move(c));
  }
  {
    CorollaryCheck c{"P1xP1, b=3a: 8r < 3a^2+8a+4", 0, {}};
    const auto s = SurfaceModel::ruled(0, 0);
    for (long a = 3; a <= 30; ++a) {
      const long bound = 3 * a * a + 8 * a + 4;
      for (long r = 1; 8 * r <= bound + 16; ++r)
        compare(c, passes(evaluate(s, DivisorClass{{a, 3 * a}}, {A(2, r)})), 8 * r < bound, at({{"a", a}, {"r", r}}));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tsmooth
