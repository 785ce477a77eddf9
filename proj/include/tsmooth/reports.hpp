#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsmooth/criteria.hpp"

namespace tsmooth {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// {"tool": "tsmooth", "version": ..., "kind": kind}. Carries no timestamp.
json meta_header(const std::string& kind);

// --- input --------------------------------------------------------------------

/// {"type":"A","k":3} | {"type":"M","m":4} | {"poly":"y^2-x^5"}, optional "equivalence".
GermSpec germ_from_json(const json& j);
/// {"variant":"ruled","g":0,"e":1}, ...
SurfaceModel surface_from_json(const json& j);
/// {"d":7} for rank one, {"a":3,"b":9} otherwise.
DivisorClass divisor_from_json(const json& j, const SurfaceModel& model);

struct ProblemFile {
  SurfaceModel surface;
  DivisorClass divisor;
  std::vector<SingularityTerm> singularities;
  std::vector<Alpha> alphas;  // extra invariants to list in the report
  EvaluateOptions options;
};

/// Throws InvalidInput (or ParseError for bad polynomials) with the offending JSON path.
ProblemFile problem_from_json(const json& j);

// --- output -------------------------------------------------------------------

json to_json(const GermSpec& g);
json to_json(const SurfaceModel& m);
json to_json(const DivisorClass& d, const SurfaceModel& m);
json to_json(const InvariantRecord& r);
json to_json(const CriterionReport& r);

/// Full document for `check`: meta header, report, optional invariants at the requested alphas.
json check_document(const ProblemFile& p);
json invariants_document(const InvariantRecord& r);

// --- sweeps -------------------------------------------------------------------

struct SweepAxis {
  std::string path;  // JSON pointer into the base problem
  std::string name;  // CSV column
  long from = 0;
  long to = 0;
  long step = 1;
};

/// path = scale * axis + offset, recomputed at every grid point.
struct SweepLink {
  std::string path;
  std::string name;
  std::string axis;  // name of an axis
  long scale = 1;
  long offset = 0;
};

struct SweepSpec {
  json base;
  std::vector<SweepAxis> axes;
  std::vector<SweepLink> links;
};

SweepSpec sweep_from_json(const json& j);

struct SweepRow {
  std::vector<long> params;  // axes then links
  CriterionReport report;
};

/// Grid points in lexicographic axis order (first axis outermost).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::vector<std::string> sweep_columns(const SweepSpec& spec);
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);
json sweep_document(const SweepSpec& spec, const std::vector<SweepRow>& rows);

// --- catalog table ------------------------------------------------------------

struct TableRow {
  GermSpec spec;
  InvariantRecord record;
};

/// Catalog types of one family (or all when `family` is empty) over an index range.
/// Missing bounds default to A 1..10, D 4..12, E 6..8, M 2..8.
std::vector<TableRow> catalog_table(std::optional<Family> family, std::optional<int> from, std::optional<int> to,
                                    const std::vector<Alpha>& alphas);

void write_table_text(std::ostream& out, const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas);
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas);
json table_document(const std::vector<TableRow>& rows, const std::vector<Alpha>& alphas);

std::optional<Family> parse_family(const std::string& s);
Equivalence parse_equivalence(const std::string& s);

}  // namespace tsmooth
