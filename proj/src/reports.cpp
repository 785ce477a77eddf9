#include "tsmooth/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include "tsmooth/errors.hpp"

namespace tsmooth {

json meta_header(const std::string& kind) { return {{"tool", "tsmooth"}, {"version", kVersion}, {"kind", kind}}; }

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput((where.empty() ? std::string("document") : where) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing \"" + key + "\"");
  return *it;
}

long integer(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where + "/" + key, "expected an integer");
  return v.get<long>();
}

std::string text(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) bad(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      bad(where, "unknown key \"" + it.key() + "\"");
}

Alpha alpha_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Alpha(v.get<long>());
    if (v.is_string()) return Alpha::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(where, e.what());
  }
  bad(where, "alpha must be an integer or a \"p/q\" string");
}

std::string rat(const Rational& q) { return to_string(q); }

json opt_rat(const std::optional<Rational>& q) { return q ? json(rat(*q)) : json(nullptr); }

}  // namespace

std::optional<Family> parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "M") return Family::M;
  return std::nullopt;
}

Equivalence parse_equivalence(const std::string& s) {
  if (s == "topological") return Equivalence::topological;
  if (s == "analytic") return Equivalence::analytic;
  throw InvalidInput("equivalence must be \"topological\" or \"analytic\", got \"" + s + "\"");
}

GermSpec germ_from_json(const json& j) {
  const std::string where = "germ";
  if (!j.is_object()) bad(where, "expected an object");
  std::optional<Equivalence> eq;
  if (j.contains("equivalence")) eq = parse_equivalence(text(j, "equivalence", where));
  if (j.contains("poly")) {
    only_keys(j, {"poly", "equivalence", "truncation", "count"}, where);
    const std::string p = text(j, "poly", where);
    Jet f = j.contains("truncation") ? make_jet(p, static_cast<int>(integer(j, "truncation", where)))
                                     : parse_polynomial(p);
    return GermSpec::explicit_germ(std::move(f), eq.value_or(Equivalence::analytic));
  }
  only_keys(j, {"type", "k", "m", "equivalence", "count"}, where);
  const std::string t = text(j, "type", where);
  const auto fam = parse_family(t);
  if (!fam) bad(where + "/type", "unknown type \"" + t + "\" (expected A, D, E or M)");
  const long idx = *fam == Family::M ? integer(j, "m", where) : integer(j, "k", where);
  return GermSpec::catalog(*fam, static_cast<int>(idx), eq.value_or(Equivalence::topological));
}

SurfaceModel surface_from_json(const json& j) {
  const std::string where = "surface";
  const std::string v = text(j, "variant", where);
  if (v == "projective_plane") {
    only_keys(j, {"variant"}, where);
    return SurfaceModel::projective_plane();
  }
  if (v == "picard_one") {
    only_keys(j, {"variant", "L2", "kappa"}, where);
    return SurfaceModel::picard_one(integer(j, "L2", where), integer(j, "kappa", where));
  }
  if (v == "p3_hypersurface") {
    only_keys(j, {"variant", "n"}, where);
    return SurfaceModel::p3_hypersurface(integer(j, "n", where));
  }
  if (v == "k3") {
    only_keys(j, {"variant", "n"}, where);
    return SurfaceModel::k3(integer(j, "n", where));
  }
  if (v == "product_of_curves") {
    only_keys(j, {"variant", "g1", "g2"}, where);
    return SurfaceModel::product_of_curves(integer(j, "g1", where), integer(j, "g2", where));
  }
  if (v == "ruled") {
    only_keys(j, {"variant", "g", "e"}, where);
    return SurfaceModel::ruled(integer(j, "g", where), integer(j, "e", where));
  }
  bad(where + "/variant", "unknown variant \"" + v + "\"");
}

DivisorClass divisor_from_json(const json& j, const SurfaceModel& model) {
  const std::string where = "divisor";
  if (model.rank() == 1) {
    only_keys(j, {"d"}, where);
    return {{integer(j, "d", where)}};
  }
  only_keys(j, {"a", "b"}, where);
  return {{integer(j, "a", where), integer(j, "b", where)}};
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) bad("", "expected an object");
  only_keys(j, {"surface", "divisor", "singularities", "options"}, "");
  const SurfaceModel s = surface_from_json(field(j, "surface", ""));
  ProblemFile p{s, divisor_from_json(field(j, "divisor", ""), s), {}, {}, {}};
  const json& sings = field(j, "singularities", "");
  if (!sings.is_array() || sings.empty()) bad("singularities", "expected a nonempty array");
  for (std::size_t i = 0; i < sings.size(); ++i) {
    const std::string where = "singularities/" + std::to_string(i);
    long count = 1;
    if (sings[i].is_object() && sings[i].contains("count")) count = integer(sings[i], "count", where);
    if (count < 1) bad(where + "/count", "multiplicity must be >= 1");
    try {
      p.singularities.push_back({germ_from_json(sings[i]), count});
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      bad(where, e.what());
    }
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    only_keys(o, {"alphas", "budget", "strictness_override"}, "options");
    if (o.contains("alphas")) {
      if (!o["alphas"].is_array()) bad("options/alphas", "expected an array");
      for (std::size_t i = 0; i < o["alphas"].size(); ++i)
        p.alphas.push_back(alpha_from_json(o["alphas"][i], "options/alphas/" + std::to_string(i)));
    }
    if (o.contains("budget")) {
      const long b = integer(o, "budget", "options");
      if (b < 1) bad("options/budget", "must be >= 1");
      p.options.budget.max_candidates = static_cast<int>(b);
    }
    if (o.contains("strictness_override")) {
      const std::string so = text(o, "strictness_override", "options");
      if (so == "force_strict") p.options.force_strict = true;
      else if (so != "none") bad("options/strictness_override", "expected \"none\" or \"force_strict\"");
    }
  }
  return p;
}

json to_json(const GermSpec& g) {
  json j;
  if (g.is_catalog()) {
    const auto& t = g.catalog_type();
    j["type"] = to_string(t.family);
    j[t.family == Family::M ? "m" : "k"] = t.index;
  } else {
    j["poly"] = g.germ().to_string();
  }
  j["equivalence"] = to_string(g.equivalence());
  return j;
}

json to_json(const SurfaceModel& m) {
  json j = {{"variant", m.variant_name()}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PicardOne>) {
          j["L2"] = v.L_self;
          j["kappa"] = v.kappa;
        } else if constexpr (std::is_same_v<T, P3Hypersurface> || std::is_same_v<T, K3Surface>) {
          j["n"] = v.n;
        } else if constexpr (std::is_same_v<T, ProductOfCurves>) {
          j["g1"] = v.g1;
          j["g2"] = v.g2;
        } else if constexpr (std::is_same_v<T, RuledSurface>) {
          j["g"] = v.g;
          j["e"] = v.e;
        }
      },
      m.variant());
  return j;
}

json to_json(const DivisorClass& d, const SurfaceModel& m) {
  if (m.rank() == 1) return {{"d", d.coords.at(0)}};
  return {{"a", d.coords.at(0)}, {"b", d.coords.at(1)}};
}

json to_json(const InvariantRecord& r) {
  json gamma = json::array();
  for (const auto& [a, g] : r.gamma) {
    json e = {{"alpha", rat(a.value())}, {"value", opt_rat(g.value)}, {"provenance", to_string(g.provenance)}};
    if (g.search_value) e["search_value"] = rat(*g.search_value);
    if (!g.note.empty()) e["note"] = g.note;
    gamma.push_back(e);
  }
  json j = {{"label", r.label},
            {"equivalence", to_string(r.equivalence)},
            {"singular", r.singular},
            {"tau", r.tau ? json(*r.tau) : json(nullptr)},
            {"tau_ci", r.tau_ci ? json{{"value", r.tau_ci->value}, {"exact", r.tau_ci->exact}} : json(nullptr)},
            {"gamma", gamma},
            {"notes", r.notes}};
  return j;
}

json to_json(const CriterionReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"ok", h.ok}, {"reason", h.reason}});
  json per = json::array();
  for (const auto& c : r.per_singularity) {
    json e = {{"label", c.label},
              {"count", c.count},
              {"gamma", opt_rat(c.gamma)},
              {"provenance", to_string(c.provenance)},
              {"tau", c.tau ? json(*c.tau) : json(nullptr)},
              {"tau_ci", c.tau_ci ? json{{"value", c.tau_ci->value}, {"exact", c.tau_ci->exact}} : json(nullptr)}};
    if (!c.note.empty()) e["note"] = c.note;
    per.push_back(e);
  }
  return {{"surface", r.surface},
          {"family", to_string(r.family)},
          {"alpha_used", rat(r.alpha_used.value())},
          {"rhs_constant", opt_rat(r.rhs_constant)},
          {"dk_squared", rat(r.dk_squared)},
          {"lhs", rat(r.lhs)},
          {"rhs", opt_rat(r.rhs)},
          {"margin", opt_rat(r.margin)},
          {"strictness", to_string(r.strictness)},
          {"strictness_reason", r.strictness_reason},
          {"hypotheses", hyps},
          {"verdict", to_string(r.verdict)},
          {"verdict_text", verdict_text(r.verdict)},
          {"per_singularity", per},
          {"notes", r.notes}};
}

json check_document(const ProblemFile& p) {
  const CriterionReport rep = evaluate(p.surface, p.divisor, p.singularities, p.options);
  json j = {{"meta", meta_header("criterion_report")},
            {"input",
             {{"surface", to_json(p.surface)}, {"divisor", to_json(p.divisor, p.surface)}, {"singularities", json::array()}}},
            {"report", to_json(rep)}};
  for (const auto& t : p.singularities) {
    json g = to_json(t.spec);
    g["count"] = t.count;
    j["input"]["singularities"].push_back(g);
  }
  if (!p.alphas.empty()) {
    j["invariants"] = json::array();
    for (const auto& t : p.singularities) j["invariants"].push_back(to_json(invariants_of(t.spec, p.alphas, p.options.budget)));
  }
  return j;
}

json invariants_document(const InvariantRecord& r) { return {{"meta", meta_header("invariants")}, {"record", to_json(r)}}; }

// --- sweeps -------------------------------------------------------------------

SweepSpec sweep_from_json(const json& j) {
  if (!j.is_object()) bad("", "expected an object");
  only_keys(j, {"base", "axes", "links"}, "");
  SweepSpec s;
  s.base = field(j, "base", "");
  problem_from_json(s.base);  // validates the base problem

  auto check_path = [&](const std::string& path, const std::string& where) {
    json::json_pointer ptr;
    try {
      ptr = json::json_pointer(path);
    } catch (const json::exception&) {
      bad(where, "invalid JSON pointer \"" + path + "\"");
    }
    if (!s.base.contains(ptr) || !s.base.at(ptr).is_number_integer())
      bad(where, "\"" + path + "\" does not name an integer parameter of the base problem");
  };
  auto name_of = [](const json& e, const std::string& path) {
    if (e.contains("name")) return e["name"].get<std::string>();
    return path.substr(path.find_last_of('/') + 1);
  };

  std::set<std::string> names;
  const json& axes = field(j, "axes", "");
  if (!axes.is_array()) bad("axes", "expected an array");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string where = "axes/" + std::to_string(i);
    only_keys(axes[i], {"path", "name", "from", "to", "step"}, where);
    SweepAxis a;
    a.path = text(axes[i], "path", where);
    check_path(a.path, where);
    a.name = name_of(axes[i], a.path);
    a.from = integer(axes[i], "from", where);
    a.to = integer(axes[i], "to", where);
    if (axes[i].contains("step")) a.step = integer(axes[i], "step", where);
    if (a.step < 1) bad(where + "/step", "must be >= 1");
    if (!names.insert(a.name).second) bad(where, "duplicate column name \"" + a.name + "\"; set \"name\"");
    s.axes.push_back(a);
  }
  if (j.contains("links")) {
    const json& links = j["links"];
    if (!links.is_array()) bad("links", "expected an array");
    for (std::size_t i = 0; i < links.size(); ++i) {
      const std::string where = "links/" + std::to_string(i);
      only_keys(links[i], {"path", "name", "axis", "scale", "offset"}, where);
      SweepLink l;
      l.path = text(links[i], "path", where);
      check_path(l.path, where);
      l.name = name_of(links[i], l.path);
      l.axis = text(links[i], "axis", where);
      if (std::none_of(s.axes.begin(), s.axes.end(), [&](const SweepAxis& a) { return a.name == l.axis; }))
        bad(where + "/axis", "no axis named \"" + l.axis + "\"");
      if (links[i].contains("scale")) l.scale = integer(links[i], "scale", where);
      if (links[i].contains("offset")) l.offset = integer(links[i], "offset", where);
      if (!names.insert(l.name).second) bad(where, "duplicate column name \"" + l.name + "\"; set \"name\"");
      s.links.push_back(l);
    }
  }
  return s;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (const auto& a : spec.axes)
    if (a.from > a.to) return rows;
  if (spec.axes.empty()) return rows;

  std::vector<long> cur;
  for (const auto& a : spec.axes) cur.push_back(a.from);
  while (true) {
    json p = spec.base;
    std::map<std::string, long> by_name;
    std::vector<long> params = cur;
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
      p[json::json_pointer(spec.axes[i].path)] = cur[i];
      by_name[spec.axes[i].name] = cur[i];
    }
    for (const auto& l : spec.links) {
      const long v = l.scale * by_name.at(l.axis) + l.offset;
      p[json::json_pointer(l.path)] = v;
      params.push_back(v);
    }
    std::string where = "grid point";
    for (std::size_t i = 0; i < spec.axes.size(); ++i) where += " " + spec.axes[i].name + "=" + std::to_string(cur[i]);
    try {
      const ProblemFile pf = problem_from_json(p);
      rows.push_back({params, evaluate(pf.surface, pf.divisor, pf.singularities, pf.options)});
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
    // odometer, last axis fastest
    std::size_t k = spec.axes.size();
    while (k > 0) {
      --k;
      cur[k] += spec.axes[k].step;
      if (cur[k] <= spec.axes[k].to) break;
      cur[k] = spec.axes[k].from;
      if (k == 0) return rows;
    }
  }
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (const auto& a : spec.axes) cols.push_back(a.name);
  for (const auto& l : spec.links) cols.push_back(l.name);
  for (const char* c : {"lhs", "rhs", "margin", "margin_approx", "strictness", "verdict"}) cols.push_back(c);
  return cols;
}

namespace {

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", approx(q));
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const auto cols = sweep_columns(spec);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    for (long v : r.params) out << v << ',';
    const auto& rep = r.report;
    out << rat(rep.lhs) << ',' << (rep.rhs ? rat(*rep.rhs) : "") << ',' << (rep.margin ? rat(*rep.margin) : "") << ','
        << (rep.margin ? decimal(*rep.margin) : "") << ',' << to_string(rep.strictness) << ',' << to_string(rep.verdict)
        << '\n';
  }
}

json sweep_document(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  json j = {{"meta", meta_header("sweep")}, {"columns", sweep_columns(spec)}, {"rows", json::array()}};
  for (const auto& r : rows) {
    json params = json::object();
    for (std::size_t i = 0; i < spec.axes.size(); ++i) params[spec.axes[i].name] = r.params[i];
    for (std::size_t i = 0; i < spec.links.size(); ++i) params[spec.links[i].name] = r.params[spec.axes.size() + i];
    j["rows"].push_back({{"params", params}, {"report", to_json(r.report)}});
  }
  return j;
}

// --- catalog table ------------------------------------------------------------

std::vector<TableRow> catalog_table(std::optional<Family> family, std::optional<int> from, std::optional<int> to,
                                    const std::vector<Alpha>& alphas) {
  struct Range {
    Family f;
    int lo, hi;
  };
  const std::vector<Range> defaults = {{Family::A, 1, 10}, {Family::D, 4, 12}, {Family::E, 6, 8}, {Family::M, 2, 8}};
  std::vector<TableRow> rows;
  for (const auto& r : defaults) {
    if (family && *family != r.f) continue;
    const int lo = family && from ? *from : r.lo;
    const int hi = family && to ? *to : r.hi;
    for (int k = lo; k <= hi; ++k) {
      const GermSpec s = GermSpec::catalog(r.f, k);
      rows.push_back({s, catalog_invariants(s, alphas)});
    }
  }
  return rows;
}

namespace {

std::vector<std::vector<std::string>> table_cells(const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"type", "tau", "tau_ci"};
  for (const auto& a : alphas) head.push_back("gamma_" + rat(a.value()));
  cells.push_back(head);
  for (const auto& r : rows) {
    std::vector<std::string> line = {r.record.label, std::to_string(*r.record.tau), std::to_string(r.record.tau_ci->value)};
    for (const auto& a : alphas) line.push_back(opt_rat(r.record.gamma.at(a).value).dump());
    for (auto& c : line)
      if (c.size() >= 2 && c.front() == '"') c = c.substr(1, c.size() - 2);
    cells.push_back(line);
  }
  return cells;
}

}  // namespace

void write_table_text(std::ostream& out, const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas) {
  const auto cells = table_cells(rows, alphas);
  std::vector<std::size_t> w(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(w[i])) << (i == 0 ? std::left : std::right) << line[i];
    }
    out << '\n';
  }
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas) {
  for (const auto& line : table_cells(rows, alphas)) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
    out << '\n';
  }
}

json table_document(const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas) {
  json j = {{"meta", meta_header("catalog_table")}, {"alphas", json::array()}, {"rows", json::array()}};
  for (const auto& a : alphas) j["alphas"].push_back(rat(a.value()));
  for (const auto& r : rows) j["rows"].push_back({{"germ", to_json(r.spec)}, {"record", to_json(r.record)}});
  return j;
}

}  // namespace tsmooth
