#pragma once
// Command-line front end: JSON serialization of reports, the reference-table
// replay, and the subcommand dispatcher used by the `pisot` executable.

#include "pisot/bounds.hpp"
#include "pisot/cycles.hpp"
#include "pisot/maxmin.hpp"
#include "pisot/pisot.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pisot::cli {

using Json = nlohmann::ordered_json;
using pisot::to_string;

/// Exit codes of the executable.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;  ///< not Pisot, or a table cell FAILed
inline constexpr int exit_input = 2;     ///< malformed input or usage error

// JSON encodings. Rationals are "p/q" strings; every *_from_json inverts the
// matching to_json exactly.
Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);
Json to_json(const PisotReport& r);
PisotReport pisot_report_from_json(const Json& j);
Json to_json(const SumProfile& p);
SumProfile sum_profile_from_json(const Json& j);
Json to_json(const ResidueCycle& c);
ResidueCycle residue_cycle_from_json(const Json& j);
Json to_json(const TaggedValue& v);
TaggedValue tagged_value_from_json(const Json& j);
Json to_json(const MaxMinResult& m);
MaxMinResult maxmin_result_from_json(const Json& j);
Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
Json to_json(const CycleSearchResult& r);
CycleSearchResult cycle_search_from_json(const Json& j);
Json to_json(const OrbitResult& r);
OrbitResult orbit_result_from_json(const Json& j);

/// Indented "key: value" rendering of a JSON document, used for --format text.
std::string render_text(const Json& j);

// Reference tables.

/// One printed cell: cubic tables (2..8) give (a1, a2, a3) and L; the quartic table (9) gives
/// (a1..a4), the periodic sequence over a common denominator, and L.
struct ReferenceCell {
  int table = 0;
  std::vector<std::int64_t> coeffs;
  std::string printed;                  ///< the value as printed
  Rat expected;
  std::int64_t z = 0;                   ///< quartic table only
  std::vector<std::int64_t> residues;   ///< quartic table only
};

/// Printed cells of table `which` (2..9). Throws InvalidArgument otherwise.
std::vector<ReferenceCell> reference_table(int which);

enum class CellStatus { pass, fail, skipped };
std::string to_string(CellStatus s);

struct CellOutcome {
  ReferenceCell cell;
  CellStatus status = CellStatus::skipped;
  std::optional<Rat> computed;
  std::string method;  ///< provenance tag of the computed value
  std::string note;
};

struct TableBudget {
  int max_depth = 10;
  double time_budget_s = 20;  ///< per cell; 0 = unlimited
  std::int64_t z_max = 40;
};

/// Recomputes every cell: exact formulas first, certified max-min search
/// otherwise (cubic tables); cycle verification for the quartic table. Cells whose
/// search is cut by the budget are SKIPPED.
std::vector<CellOutcome> run_table(int which, const TableBudget& budget);
Json to_json(const CellOutcome& o);

/// Parses argv and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pisot::cli
