#include "pisot/cli.hpp"

#include "pisot/error.hpp"

namespace pisot::cli {

namespace {

struct Cubic {
  std::int64_t a2, a3;
  const char* value;
};

struct CubicTable {
  int table;
  std::int64_t a1;
  std::vector<Cubic> cells;
};

// Degree 3, a3 < 0, even coefficient sum; one table per a1 = 2..8.
const std::vector<CubicTable>& cubic_tables() {
  static const std::vector<CubicTable> t = {
      {2, 2, {{1, -1, "4/13"}}},
      {3, 3, {{0, -1, "6/17"}, {2, -1, "9/25"}, {1, -2, "11/29"}}},
      {4, 4,
       {{-1, -1, "2/5"}, {1, -1, "11/29"}, {3, -1, "2/5"}, {0, -2, "15/37"}, {2, -2, "6/15"}, {1, -3, "22/53"}}},
      {5, 5,
       {{-2, -1, "3/7"},
        {0, -1, "15/37"},
        {2, -1, "2/5"},
        {4, -1, "3/7"},
        {-1, -2, "3/7"},
        {1, -2, "22/53"},
        {3, -2, "27/65"},
        {0, -3, "28/65"},
        {2, -3, "31/73"},
        {1, -4, "37/85"}}},
      {6, 6,
       {{-3, -1, "4/9"},
        {-1, -1, "3/7"},
        {1, -1, "22/53"},
        {3, -1, "3/7"},
        {5, -1, "4/9"},
        {-2, -2, "28/65"},
        {0, -2, "28/65"},
        {2, -2, "31/73"},
        {4, -2, "3/7"},
        {-1, -3, "4/9"},
        {1, -3, "37/85"},
        {3, -3, "42/97"},
        {0, -4, "45/101"},
        {2, -4, "48/109"},
        {1, -5, "56/125"}}},
      {7, 7,
       {{-4, -1, "5/11"},  {-2, -1, "4/9"},    {0, -1, "28/65"},   {2, -1, "3/7"},    {4, -1, "4/9"},
        {6, -1, "5/11"},   {-3, -2, "4/9"},    {-1, -2, "4/9"},    {1, -2, "37/85"},  {3, -2, "42/97"},
        {5, -2, "4/9"},    {-2, -3, "45/101"}, {0, -3, "45/101"},  {2, -3, "11/27"},  {4, -3, "11/25"},
        {-1, -4, "5/11"},  {1, -4, "56/125"},  {3, -4, "2/5"},     {0, -5, "66/145"}, {2, -5, "23/51"},
        {1, -6, "79/173"}}},
      {8, 8,
       {{-5, -1, "6/13"},   {-3, -1, "5/11"},   {-1, -1, "4/9"},    {1, -1, "37/85"},   {3, -1, "4/9"},
        {5, -1, "5/11"},    {7, -1, "6/13"},    {-4, -2, "5/11"},   {-2, -2, "45/101"}, {0, -2, "45/101"},
        {2, -2, "48/109"},  {4, -2, "4/9"},     {6, -2, "5/11"},    {-3, -3, "56/125"}, {-1, -3, "5/11"},
        {1, -3, "56/125"},  {3, -3, "61/137"},  {5, -3, "70/157"},  {-2, -4, "66/145"}, {0, -4, "66/145"},
        {2, -4, "23/51"},   {4, -4, "76/169"},  {-1, -5, "6/13"},   {1, -5, "79/173"},  {3, -5, "84/185"},
        {0, -6, "91/197"},  {2, -6, "94/205"},  {1, -7, "106/229"}}},
  };
  return t;
}

struct Quartic {
  std::array<std::int64_t, 4> a;
  std::int64_t z;
  std::vector<std::int64_t> residues;
  const char* value;
};

const std::vector<Quartic>& quartic_table() {
  static const std::vector<Quartic> t = {
      {{2, 2, 1, -1}, 17, {6, 10, 11, 7}, "6/17"},
      {{3, 0, 0, 1}, 63, {22, 25, 37}, "22/63"},
      {{3, 3, -1, -3}, 65, {27, 34, 38, 31}, "27/65"},
      {{4, 1, 1, -4}, 9, {4, 5}, "4/9"},
      {{4, 8, 2, -2}, 11, {5}, "5/11"},
      {{5, 0, -1, -2}, 7, {3, 3, 3, 4, 4, 4}, "3/7"},
      {{5, 1, -1, -1}, 215, {87, 93, 92, 128, 122, 123}, "87/215"},
      {{5, -1, 0, 2}, 40, {17, 17, 22}, "17/40"},
      {{5, 0, 0, 1}, 215, {87, 92, 122}, "87/215"},
  };
  return t;
}

CellOutcome run_cubic(const ReferenceCell& cell, const TableBudget& budget) {
  CellOutcome o;
  o.cell = cell;
  const IntPoly rec(cell.coeffs);
  const PisotReport pr = is_pisot(rec, make_rat(1, 1000));
  if (!pr.is_pisot) {
    o.status = CellStatus::fail;
    o.note = "not a Pisot polynomial (" + to_string(pr.failure_reason) + ")";
    return o;
  }
  BoundOptions opt;
  opt.z_max = budget.z_max;
  opt.exact = !exact_formula(rec).has_value();
  opt.search.auto_depth = true;
  opt.search.max_depth = budget.max_depth;
  opt.search.time_budget_s = budget.time_budget_s;
  const BoundReport r = bound_report(rec, opt);
  if (r.exact) {
    o.computed = r.exact->value;
    o.method = r.exact->source;
    o.status = *o.computed == cell.expected ? CellStatus::pass : CellStatus::fail;
    return o;
  }
  // No exact value within budget: the printed value must still lie in range.
  if (cell.expected < r.lower.value || cell.expected > r.upper.value) {
    o.status = CellStatus::fail;
    o.note = "printed value outside [" + to_string(r.lower.value) + ", " + to_string(r.upper.value) + "]";
  } else {
    o.status = CellStatus::skipped;
    o.note = "over budget; bounds [" + to_string(r.lower.value) + ", " + to_string(r.upper.value) + "]";
  }
  return o;
}

CellOutcome run_quartic(const ReferenceCell& cell) {
  CellOutcome o;
  o.cell = cell;
  const IntPoly rec(cell.coeffs);
  const SumProfile prof = sum_profile(rec, static_cast<int>(cell.residues.size()));
  if (!check_cycle(prof, cell.z, cell.residues)) {
    o.status = CellStatus::fail;
    o.note = "printed sequence is not periodic under the recurrence";
    return o;
  }
  const ResidueCycle c(prof, cell.z, cell.residues);
  o.computed = cycle_lower_bound(c);
  o.method = "cycle-check";
  if (*o.computed != cell.expected) {
    o.status = CellStatus::fail;
    o.note = "minimum distance differs from the printed value";
    return o;
  }
  if (cell.expected > upper_theorem1(rec)) {
    o.status = CellStatus::fail;
    o.note = "printed value exceeds the length bound";
    return o;
  }
  o.status = CellStatus::pass;
  return o;
}

} // namespace

std::vector<ReferenceCell> reference_table(int which) {
  std::vector<ReferenceCell> out;
  if (which == 9) {
    for (const auto& q : quartic_table())
      out.push_back({9, {q.a.begin(), q.a.end()}, q.value, parse_rat(q.value), q.z, q.residues});
    return out;
  }
  for (const auto& t : cubic_tables()) {
    if (t.table != which) continue;
    for (const auto& c : t.cells) out.push_back({which, {t.a1, c.a2, c.a3}, c.value, parse_rat(c.value), 0, {}});
    return out;
  }
  throw InvalidArgument("tables are numbered 2 to 9");
}

std::string to_string(CellStatus s) {
  switch (s) {
  case CellStatus::pass: return "PASS";
  case CellStatus::fail: return "FAIL";
  case CellStatus::skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<CellOutcome> run_table(int which, const TableBudget& budget) {
  const auto cells = reference_table(which);
  std::vector<CellOutcome> out;
  for (const auto& c : cells) out.push_back(which == 9 ? run_quartic(c) : run_cubic(c, budget));
  return out;
}

Json to_json(const CellOutcome& o) {
  Json j;
  j["table"] = o.cell.table;
  j["coefficients"] = o.cell.coeffs;
  if (o.cell.table == 9) {
    j["z"] = o.cell.z;
    j["residues"] = o.cell.residues;
  }
  j["printed"] = o.cell.printed;
  j["computed"] = o.computed ? to_json(*o.computed) : Json(nullptr);
  j["method"] = o.method;
  j["status"] = to_string(o.status);
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

} // namespace pisot::cli
