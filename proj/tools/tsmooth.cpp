#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tsmooth/errors.hpp"
#include "tsmooth/reports.hpp"

using namespace tsmooth;

namespace {

enum Exit { ok = 0, inconclusive = 1, invalid = 2, not_finite = 3, io_error = 4 };

std::vector<Alpha> parse_alphas(const std::vector<std::string>& raw, std::vector<Alpha> fallback) {
  if (raw.empty()) return fallback;
  std::vector<Alpha> out;
  for (const auto& s : raw) {
    try {
      out.push_back(Alpha::parse(s));
    } catch (const std::invalid_argument& e) {
      throw InvalidInput("--alpha " + s + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity invariants and T-smoothness criteria for equisingular families of curves"};
  app.set_version_flag("--version", std::string("tsmooth ") + kVersion);
  app.require_subcommand(1);

  std::vector<std::string> alphas_raw;
  int budget = SearchBudget{}.max_candidates;
  std::string out_path;
  std::string format;

  auto* inv = app.add_subcommand("invariants", "Invariants of one singularity (catalog type or polynomial)");
  std::string type, poly, equivalence;
  int k = 0, m = 0;
  inv->add_option("--type", type, "Catalog family A, D, E or M")->check(CLI::IsMember({"A", "D", "E", "M"}));
  inv->add_option("--k", k, "Index for A_k, D_k, E_k");
  inv->add_option("--m", m, "Multiplicity for M_m");
  inv->add_option("--poly", poly, "Explicit germ, e.g. \"y^2-x^3\"");
  inv->add_option("--equivalence", equivalence, "topological or analytic")
      ->check(CLI::IsMember({"topological", "analytic"}));
  inv->add_option("--alpha", alphas_raw, "Alpha as p/q (repeatable)");
  inv->add_option("--budget", budget, "Candidate budget for the searches")->check(CLI::PositiveNumber);
  inv->add_option("--out", out_path, "Output file");

  auto* check = app.add_subcommand("check", "Evaluate the criterion for a problem file");
  std::string problem_path;
  bool force_strict = false;
  check->add_option("problem", problem_path, "Problem JSON file")->required();
  check->add_option("--budget", budget, "Candidate budget for the searches")->check(CLI::PositiveNumber);
  check->add_flag("--force-strict", force_strict, "Ignore the relaxations to <=");
  check->add_option("--out", out_path, "Output file");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
  std::string sweep_path;
  sweep->add_option("spec", sweep_path, "Sweep JSON file")->required();
  sweep->add_option("--out", out_path, "Output file");
  sweep->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));

  auto* table = app.add_subcommand("table", "Closed-form catalog table");
  std::string family;
  std::optional<int> from, to;
  table->add_option("--family", family, "A, D, E or M (default: all)")->check(CLI::IsMember({"A", "D", "E", "M"}));
  table->add_option("--from", from, "First index");
  table->add_option("--to", to, "Last index");
  table->add_option("--alpha", alphas_raw, "Alpha as p/q (repeatable)");
  table->add_option("--format", format, "text (default), json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    if (*inv) {
      SearchBudget b;
      b.max_candidates = budget;
      const std::vector<Alpha> alphas = parse_alphas(alphas_raw, {Alpha(0), Alpha(1)});
      std::optional<GermSpec> spec;
      if (!poly.empty()) {
        if (!type.empty()) throw InvalidInput("give either --poly or --type, not both");
        spec = GermSpec::explicit_germ(parse_polynomial(poly),
                                       equivalence.empty() ? Equivalence::analytic : parse_equivalence(equivalence));
      } else if (!type.empty()) {
        const Family f = *parse_family(type);
        const int index = f == Family::M ? m : k;
        if ((f == Family::M && inv->count("--m") == 0) || (f != Family::M && inv->count("--k") == 0))
          throw InvalidInput(f == Family::M ? "--type M needs --m" : "--type " + type + " needs --k");
        spec = GermSpec::catalog(f, index, equivalence.empty() ? Equivalence::topological : parse_equivalence(equivalence));
      } else {
        throw InvalidInput("give --type (with --k or --m) or --poly");
      }
      emit(out_path, invariants_document(invariants_of(*spec, alphas, b)).dump(2) + "\n");
      return ok;
    }
    if (*check) {
      ProblemFile p = problem_from_json(read_json(problem_path));
      if (check->count("--budget")) p.options.budget.max_candidates = budget;
      if (force_strict) p.options.force_strict = true;
      const json doc = check_document(p);
      emit(out_path, doc.dump(2) + "\n");
      const std::string v = doc["report"]["verdict"];
      if (v == "TSMOOTH_OR_EMPTY") return ok;
      if (v == "INCONCLUSIVE") return inconclusive;
      return invalid;
    }
    if (*sweep) {
      const SweepSpec s = sweep_from_json(read_json(sweep_path));
      const auto rows = run_sweep(s);
      std::ostringstream body;
      if (format == "json") body << sweep_document(s, rows).dump(2) << '\n';
      else write_sweep_csv(body, s, rows);
      emit(out_path, body.str());
      return ok;
    }
    if (*table) {
      const std::vector<Alpha> alphas = parse_alphas(alphas_raw, {Alpha(0), Alpha(1, 2), Alpha(1)});
      const auto rows = catalog_table(family.empty() ? std::nullopt : parse_family(family), from, to, alphas);
      std::ostringstream body;
      if (format == "json") body << table_document(rows, alphas).dump(2) << '\n';
      else if (format == "csv") write_table_csv(body, rows, alphas);
      else write_table_text(body, rows, alphas);
      emit(out_path, body.str());
      return ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return invalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return invalid;
  } catch (const NotFinite& e) {
    std::cerr << "error: not finite: " << e.what() << '\n';
    return *check || *sweep ? invalid : not_finite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_error;
  }
  return invalid;
}
