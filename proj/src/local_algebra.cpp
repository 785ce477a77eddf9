#include "tsmooth/local_algebra.hpp"

#include <algorithm>

#include "tsmooth/errors.hpp"

namespace tsmooth {

// ---------------------------------------------------------------------------
// LocalIdealRep

LocalIdealRep::LocalIdealRep(std::vector<Jet> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("an ideal needs at least one generator");
  const bool all_exact =
      std::all_of(generators_.begin(), generators_.end(), [](const Jet& g) { return g.exact(); });
  int n = generators_.front().truncation();
  for (const auto& g : generators_)
    n = all_exact ? std::max(n, g.truncation()) : std::min(n, g.truncation());
  for (auto& g : generators_)
    if (g.truncation() != n) g = g.with_truncation(n);
}

bool LocalIdealRep::exact() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Jet& g) { return g.exact(); });
}

std::vector<Jet> LocalIdealRep::generators_at(int n) const {
  std::vector<Jet> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.with_truncation(n));
  return out;
}

// ---------------------------------------------------------------------------
// IdealSpan

IdealSpan::IdealSpan(const std::vector<Jet>& generators, int truncation)
    : truncation_(truncation), pivot_of_column_(monomial_count(truncation), -1) {
  // Shift degree outermost: rows with low leading monomials are pivoted first, which keeps
  // fill-in confined to higher columns.
  int max_shift = -1;
  for (const auto& g : generators)
    if (!g.is_zero()) max_shift = std::max(max_shift, truncation - 1 - g.order());
  for (int s = 0; s <= max_shift; ++s) {
    for (const auto& g : generators) {
      if (g.is_zero() || s > truncation - 1 - g.order()) continue;
      for (int a = s; a >= 0; --a) {
        const int b = s - a;
        Row row;
        row.reserve(g.size());
        for (const auto& [e, c] : g.terms()) {
          const int i = e.x + a, j = e.y + b;
          if (i + j < truncation) row.emplace_back(monomial_index(i, j), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        insert(std::move(row));
      }
    }
  }
}

IdealSpan::Row IdealSpan::reduce(Row row) const {
  Row scratch;
  while (!row.empty()) {
    const int p = pivot_of_column_[row.front().first];
    if (p < 0) break;
    const Rational factor = row.front().second;
    const Row& pivot = rows_[p];
    scratch.clear();
    scratch.reserve(row.size() + pivot.size());
    auto a = row.begin() + 1;
    auto b = pivot.begin() + 1;
    while (a != row.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
        scratch.push_back(std::move(*a++));
      } else if (a == row.end() || b->first < a->first) {
        scratch.emplace_back(b->first, -factor * b->second);
        ++b;
      } else {
        Rational v = a->second - factor * b->second;
        if (sgn(v) != 0) scratch.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    row.swap(scratch);
  }
  return row;
}

void IdealSpan::insert(Row row) {
  row = reduce(std::move(row));
  if (row.empty()) return;
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& [c, v] : row) v /= lead;
  pivot_of_column_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
}

long IdealSpan::quotient_dimension(int t) const {
  if (t > truncation_) throw InvalidInput("quotient_dimension beyond span truncation");
  const int cols = monomial_count(t);
  long pivots = 0;
  for (int c = 0; c < cols; ++c)
    if (pivot_of_column_[c] >= 0) ++pivots;
  return cols - pivots;
}

bool IdealSpan::contains(const Jet& h) const {
  Row row;
  for (const auto& [e, c] : h.terms())
    if (e.degree() < truncation_) row.emplace_back(monomial_index(e.x, e.y), c);
  std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return reduce(std::move(row)).empty();
}

bool IdealSpan::contains_all_monomials_of_degree(int k) const {
  if (k >= truncation_) return true;
  for (int j = 0; j <= k; ++j)
    if (pivot_of_column_[monomial_index(k - j, j)] < 0 &&
        !contains(Jet::monomial(k - j, j, truncation_)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// colength

namespace {

std::optional<long> bezout_bound(const std::vector<Jet>& gens) {
  std::vector<const Jet*> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.size() != 2 || !nonzero[0]->exact() || !nonzero[1]->exact()) return std::nullopt;
  return static_cast<long>(nonzero[0]->degree()) * nonzero[1]->degree();
}

int smallest_certificate(const IdealSpan& span, long value) {
  for (int k = 0; k <= value; ++k)
    if (span.contains_all_monomials_of_degree(k)) return k;
  return -1;
}

}  // namespace

Colength colength(const LocalIdealRep& ideal, const ColengthOptions& options) {
  const auto& gens = ideal.generators();
  int max_degree = 0;
  std::size_t nonzero = 0;
  bool has_unit = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    ++nonzero;
    max_degree = std::max(max_degree, g.degree());
    has_unit = has_unit || g.order() == 0;
  }
  if (nonzero == 0) throw NotFinite("the zero ideal has infinite colength");
  if (has_unit) return Colength{0, true, 1, 0};
  if (nonzero == 1) throw NotFinite("a principal ideal in m has infinite colength");

  std::optional<long> bound = options.bound;
  if (!bound) bound = bezout_bound(gens);

  const bool exact = ideal.exact();
  const int cap = std::max(options.cap, 1);
  int t = options.initial_truncation > 0 ? options.initial_truncation : 2 * max_degree + 4;
  t = std::min(t, cap);
  if (!exact && t + 2 > ideal.truncation()) t = ideal.truncation() - 2;
  if (t < 1)
    throw InvalidInput("generators truncated at N=" + std::to_string(ideal.truncation()) +
                       " are too short to determine the colength");

  while (true) {
    const int top = t + 2;
    IdealSpan span(ideal.generators_at(top), top);
    const long low = span.quotient_dimension(t);
    const long high = span.quotient_dimension(top);
    if (low == high) {
      const int cert = smallest_certificate(span, low);
      if (cert < 0)
        throw std::logic_error("stable colength without m^d ⊆ I; kernel invariant broken");
      return Colength{low, true, t, cert};
    }
    if (bound && low > *bound)
      throw NotFinite("colength exceeds the bound " + std::to_string(*bound) +
                      " while still unstable; the ideal is not m-primary");
    if (t >= cap)
      throw NotFinite("colength did not stabilize up to truncation " + std::to_string(cap) +
                      "; the ideal is probably not m-primary");
    int next = std::min(2 * t, cap);
    if (!exact) {
      if (t + 2 >= ideal.truncation())
        throw InvalidInput("colength not yet stable at the generators' truncation N=" +
                           std::to_string(ideal.truncation()));
      next = std::min(next, ideal.truncation() - 2);
    }
    t = next;
  }
}

LocalIdealRep certify(const LocalIdealRep& ideal) {
  LocalIdealRep out = ideal;
  out.certificate_ = colength(ideal).certificate;
  return out;
}

Colength intersection_multiplicity(const Jet& f, const Jet& g, ColengthOptions options) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("intersection multiplicity needs nonzero germs");
  return colength(LocalIdealRep({f, g}), options);
}

LocalIdealRep tjurina_ideal(const Jet& f) {
  if (f.is_zero()) throw InvalidInput("the zero germ has no Tjurina ideal");
  if (sgn(f.coeff(0, 0)) != 0) throw InvalidInput("germ must vanish at the origin (nonzero constant term)");
  return LocalIdealRep({f.partial_x(), f.partial_y(), f});
}

Colength tjurina_number(const Jet& f, ColengthOptions options) {
  LocalIdealRep ideal = tjurina_ideal(f);
  if (!options.bound && f.exact() && f.degree() >= 2)
    options.bound = static_cast<long>(f.degree() - 1) * (f.degree() - 1);
  return colength(ideal, options);
}

CertifiedIdeal::CertifiedIdeal(const LocalIdealRep& ideal, const ColengthOptions& options)
    : CertifiedIdeal(ideal, tsmooth::colength(ideal, options)) {}

CertifiedIdeal::CertifiedIdeal(const LocalIdealRep& ideal, Colength c)
    : colength_(c),
      span_(ideal.generators_at(std::max(c.certificate, 1)), std::max(c.certificate, 1)) {}

bool CertifiedIdeal::contains(const Jet& h) const {
  if (colength_.certificate == 0) return true;
  if (!h.exact() && h.truncation() < colength_.certificate)
    throw InvalidInput("element truncated below the ideal's certificate degree");
  return span_.contains(h);
}

bool ideal_contains(const LocalIdealRep& ideal, const Jet& h, const ColengthOptions& options) {
  return CertifiedIdeal(ideal, options).contains(h);
}

LocalIdealRep reduce_generators(const LocalIdealRep& ideal, const ColengthOptions& options) {
  const long target = colength(ideal, options).value;
  std::vector<Jet> gens;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) gens.push_back(g);
  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens.size() <= 1) break;
    std::vector<Jet> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    try {
      // Same colength with one generator fewer means the dropped one was redundant.
      if (colength(LocalIdealRep(others), options).value == target) gens = std::move(others);
    } catch (const NotFinite&) {
    }
  }
  return LocalIdealRep(std::move(gens));
}

}  // namespace tsmooth
