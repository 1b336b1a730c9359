#include "pisot/cli.hpp"

#include "pisot/atlas.hpp"
#include "pisot/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace pisot::cli {

namespace {

constexpr int exit_internal = 3;

struct UsageError : Error {
  using Error::Error;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) throw UsageError("bad range '" + s + "', expected N or LO..HI");
    return static_cast<std::int64_t>(v);
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = num(s);
    return {v, v};
  }
  auto lo = num(s.substr(0, dots)), hi = num(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

Json provenance(const std::string& quantity, const std::string& source) {
  return Json{{"quantity", quantity}, {"source", source}};
}

struct Doc {
  Json j;
  int code = exit_ok;

  explicit Doc(const std::string& command) {
    j["command"] = command;
    j["input"] = Json::object();
    j["result"] = nullptr;
    j["provenance"] = Json::array();
    j["warnings"] = Json::array();
  }
};

IntPoly require_coeffs(const std::vector<std::int64_t>& c) {
  if (c.empty()) throw UsageError("no coefficients given");
  return IntPoly(c);
}

Doc cmd_check(const std::vector<std::int64_t>& coeffs, const std::string& width) {
  Doc d("check");
  const IntPoly p = require_coeffs(coeffs);
  d.j["input"] = {{"coefficients", coeffs}, {"bracket_width", width}};
  if (p.a(p.degree()) == 0) throw InvalidArgument("a_d = 0: the polynomial is divisible by x");
  const Rat w = parse_rat(width);
  if (sgn(w) <= 0) throw InvalidArgument("bracket width must be positive");
  const PisotReport r = is_pisot(p, w);
  d.j["result"] = to_json(r);
  d.j["provenance"].push_back(provenance("root counts", "sturm-and-schur-cohn"));
  if (p.degree() <= 4) d.j["provenance"].push_back(provenance("irreducibility", "rational-root-and-quadratic-factor-search"));
  else d.j["provenance"].push_back(provenance("irreducibility", "implied-by-root-location"));
  if (!r.is_pisot) d.code = exit_negative;
  return d;
}

struct BoundsArgs {
  std::vector<std::int64_t> coeffs;
  bool exact = false;
  bool auto_depth = false;
  int depth = 0;
  int max_depth = 24;
  std::int64_t z_max = 40;
  double time_budget = 0;
  std::vector<int> periods{1, 2, 3, 4, 6, 8};
  bool no_cycle_search = false;
};

Doc cmd_bounds(const BoundsArgs& a) {
  Doc d("bounds");
  d.j["input"] = {{"coefficients", a.coeffs}, {"exact", a.exact},       {"auto", a.auto_depth},
                  {"depth", a.depth},         {"max_depth", a.max_depth}, {"z_max", a.z_max},
                  {"time_budget_s", a.time_budget}, {"periods", a.periods}, {"cycle_search", !a.no_cycle_search}};
  const IntPoly input = require_coeffs(a.coeffs);
  bool all_zero = true;
  for (auto c : a.coeffs) all_zero = all_zero && c == 0;
  if (all_zero) throw InvalidArgument("all coefficients are zero");
  const IntPoly rec = input.strip_trailing_zeros();
  const PisotReport pr = is_pisot(rec, make_rat(1, 1000000));
  if (!pr.is_pisot) {
    d.j["result"] = {{"pisot", to_json(pr)}};
    d.j["warnings"].push_back("not a Pisot polynomial: " + to_string(pr.failure_reason));
    d.code = exit_negative;
    return d;
  }
  BoundOptions opt;
  opt.periods = a.periods;
  opt.z_max = a.z_max;
  opt.cycle_search = !a.no_cycle_search;
  opt.exact = a.exact;
  opt.search.depth = a.depth;
  opt.search.auto_depth = a.auto_depth;
  opt.search.max_depth = a.max_depth;
  opt.search.time_budget_s = a.time_budget;
  const BoundReport r = bound_report(input, opt);
  d.j["result"] = to_json(r);
  d.j["result"]["status"] = r.exact ? "exact" : "bounds only";
  d.j["provenance"].push_back(provenance("lower", r.lower.source));
  d.j["provenance"].push_back(provenance("upper", r.upper.source));
  if (r.exact) d.j["provenance"].push_back(provenance("exact", r.exact->source));
  if (r.lower_cycle) d.j["provenance"].push_back(provenance("lower_cycle", "periodic orbit, period " + std::to_string(r.lower_cycle->period())));
  for (const auto& w : r.warnings) d.j["warnings"].push_back(w);
  return d;
}

Doc cmd_enumerate(int degree, const std::string& range, bool with_bounds) {
  Doc d("enumerate");
  d.j["input"] = {{"degree", degree}, {"a1", range}, {"bounds", with_bounds}};
  const auto [lo, hi] = parse_range(range);
  const auto tuples = enumerate_pisot(degree, lo, hi);
  Json rows = Json::array();
  for (const auto& t : tuples) {
    Json row;
    row["coefficients"] = t.coeffs();
    if (with_bounds) {
      BoundOptions opt;
      opt.cycle_search = false;
      const BoundReport r = bound_report(t, opt);
      row["lower"] = to_json(r.lower.value);
      row["upper"] = to_json(r.upper.value);
      row["exact"] = r.exact ? to_json(r.exact->value) : Json(nullptr);
      row["exact_source"] = r.exact ? Json(r.exact->source) : Json(nullptr);
      if (degree == 3 && t.sum() % 2 == 0) {
        const GammaClass g = gamma_class(t);
        row["gamma"] = to_string(g.tag);
        row["gamma_value"] = to_json(g.attained_value);
      }
    }
    rows.push_back(std::move(row));
  }
  d.j["result"] = {{"count", rows.size()}, {"tuples", std::move(rows)}};
  d.j["provenance"].push_back(provenance("membership", "exact Pisot test over the root-bound box"));
  if (degree == 3) {
    Json disc = Json::array();
    for (std::int64_t a1 = std::max<std::int64_t>(lo, 0); a1 <= hi; ++a1)
      for (const auto& x : enumerate_lambda3(a1).discrepancies)
        disc.push_back({{"tuple", x.tuple}, {"three_inequality_predicate", x.literal}, {"pisot", x.pisot}});
    for (const auto& x : disc)
      d.j["warnings"].push_back("three-inequality region description disagrees with the Pisot test at " +
                                x["tuple"].dump());
    d.j["result"]["region_predicate_discrepancies"] = std::move(disc);
  }
  return d;
}

Doc cmd_tables(const std::vector<int>& which, const TableBudget& budget, std::ostream* text_out) {
  Doc d("tables");
  d.j["input"] = {{"tables", which},
                  {"max_depth", budget.max_depth},
                  {"time_budget_s", budget.time_budget_s},
                  {"z_max", budget.z_max}};
  Json cells = Json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (int t : which) {
    for (const auto& o : run_table(t, budget)) {
      (o.status == CellStatus::pass ? pass : o.status == CellStatus::fail ? fail : skipped) += 1;
      Json c = to_json(o);
      if (text_out) {
        std::ostringstream coeffs;
        for (std::size_t i = 0; i < o.cell.coeffs.size(); ++i) coeffs << (i ? "," : "") << o.cell.coeffs[i];
        *text_out << to_string(o.status) << "  table " << t << "  (" << coeffs.str() << ")  printed "
                  << o.cell.printed << "  computed " << (o.computed ? to_string(*o.computed) : "none");
        if (!o.method.empty()) *text_out << "  via " << o.method;
        if (!o.note.empty()) *text_out << "  [" << o.note << "]";
        *text_out << std::endl;
      }
      cells.push_back(std::move(c));
    }
  }
  d.j["result"] = {{"cells", std::move(cells)},
                   {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
  d.j["provenance"].push_back(provenance("cells", "exact formulas, certified max-min search, cycle checks"));
  if (fail > 0) d.code = exit_negative;
  return d;
}

Doc cmd_cycles(const std::vector<std::int64_t>& coeffs, int t, std::int64_t z_max, std::int64_t budget) {
  Doc d("cycles");
  d.j["input"] = {{"coefficients", coeffs}, {"t", t}, {"z_max", z_max}, {"budget", budget}};
  const IntPoly rec = require_coeffs(coeffs);
  if (t < 1) throw InvalidArgument("period must be positive");
  const CycleSearchResult r = search_cycles(rec, t, z_max, budget);
  d.j["result"] = to_json(r);
  if (r.best)
    d.j["result"]["statement"] = "every Pisot number with these recurrence coefficients has L >= " +
                                 to_string(r.min_dist);
  else
    d.j["result"]["statement"] = "no periodic sequence avoiding integers for this period and z range";
  d.j["provenance"].push_back(provenance("best", "cycle-search"));
  if (!r.exhaustive) d.j["warnings"].push_back("per-z candidate budget reached; result is not exhaustive");
  return d;
}

Doc cmd_orbit(const std::vector<std::int64_t>& coeffs, std::int64_t z, const std::vector<std::int64_t>& init) {
  Doc d("orbit");
  d.j["input"] = {{"coefficients", coeffs}, {"z", z}, {"init", init}};
  const IntPoly rec = require_coeffs(coeffs);
  if (z <= 0) throw InvalidArgument("z must be positive");
  if (static_cast<int>(init.size()) != rec.degree())
    throw InvalidArgument("--init needs exactly " + std::to_string(rec.degree()) + " residues");
  for (auto r : init)
    if (r < 0 || r >= z) throw InvalidArgument("initial residues must lie in [0, z)");
  const OrbitResult r = orbit(rec, z, init);
  d.j["result"] = to_json(r);
  d.j["result"]["statement"] = "every Pisot number with these recurrence coefficients has L >= " +
                               to_string(r.cycle_min_dist);
  d.j["provenance"].push_back(provenance("cycle", "orbit iteration"));
  return d;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds for L(alpha) = sup_xi liminf ||xi alpha^n|| of Pisot numbers.\n"
               "Coefficients a_1 .. a_d describe P(x) = x^d - a_1 x^(d-1) - ... - a_d.",
               "pisot"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: PISOT_THREADS or hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::int64_t> coeffs;
  auto* check = app.add_subcommand("check", "exact Pisot test");
  std::string width = "1/1000000";
  check->add_option("coefficients", coeffs, "a_1 .. a_d")->required();
  check->add_option("--width", width, "maximal width of the dominant-root bracket (rational)");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "lower/upper bounds and exact values of L");
  bounds->add_option("coefficients", ba.coeffs, "a_1 .. a_d")->required();
  bounds->add_flag("--exact", ba.exact, "run the certified max-min search");
  bounds->add_flag("--auto", ba.auto_depth, "raise the form depth until certified");
  bounds->add_option("--depth", ba.depth, "form depth K (0: 2d)")->check(CLI::NonNegativeNumber);
  bounds->add_option("--max-depth", ba.max_depth, "depth cap for --auto")->check(CLI::PositiveNumber);
  bounds->add_option("--zmax,--max-z", ba.z_max, "denominator cap of the cycle search")->check(CLI::Range(2, 100000));
  bounds->add_option("--time-budget", ba.time_budget, "seconds per search (0: unlimited)")->check(CLI::NonNegativeNumber);
  bounds->add_option("--periods", ba.periods, "periods for the cycle search")->check(CLI::PositiveNumber);
  bounds->add_flag("--no-cycle-search", ba.no_cycle_search, "skip the cycle search");

  int degree = 0;
  std::string range;
  bool with_bounds = false;
  auto* enumerate = app.add_subcommand("enumerate", "Pisot coefficient tuples of a given degree");
  enumerate->add_option("--degree", degree, "1 to 4")->required();
  enumerate->add_option("--a1", range, "a1 value or range LO..HI")->required();
  enumerate->add_flag("--bounds", with_bounds, "add bound and class columns");

  std::vector<int> which;
  TableBudget tb;
  auto* tables = app.add_subcommand("tables", "recompute the reference tables 2..9");
  tables->add_option("which", which, "table numbers (default: all)")->check(CLI::Range(2, 9));
  tables->add_option("--max-depth", tb.max_depth, "depth cap of the max-min search")->check(CLI::PositiveNumber);
  tables->add_option("--time-budget", tb.time_budget_s, "seconds per cell (0: unlimited)")->check(CLI::NonNegativeNumber);
  tables->add_option("--zmax,--max-z", tb.z_max, "denominator cap of the cycle search")->check(CLI::Range(2, 100000));

  int t = 0;
  std::int64_t z_max = 0, cyc_budget = 20'000'000;
  auto* cycles = app.add_subcommand("cycles", "best periodic sequence modulo 1 for a period");
  cycles->add_option("coefficients", coeffs, "a_1 .. a_d")->required();
  cycles->add_option("--t", t, "period")->required()->check(CLI::PositiveNumber);
  cycles->add_option("--zmax,--max-z", z_max, "largest denominator")->required()->check(CLI::Range(1, 100000));
  cycles->add_option("--budget", cyc_budget, "candidates per denominator")->check(CLI::PositiveNumber);

  std::int64_t z = 0;
  std::vector<std::int64_t> init;
  auto* orb = app.add_subcommand("orbit", "eventual cycle of r_n = sum a_i r_(n-i) mod z");
  orb->add_option("coefficients", coeffs, "a_1 .. a_d")->required();
  orb->add_option("--z", z, "modulus")->required();
  orb->add_option("--init", init, "r_1 .. r_d")->required();


  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }

  if (threads > 0) setenv("PISOT_THREADS", std::to_string(threads).c_str(), 1);
  const bool json = format == "json";

  try {
    Doc d("");
    if (*check) d = cmd_check(coeffs, width);
    else if (*bounds) d = cmd_bounds(ba);
    else if (*enumerate) d = cmd_enumerate(degree, range, with_bounds);
    else if (*tables) {
      if (which.empty()) which = {2, 3, 4, 5, 6, 7, 8, 9};
      d = cmd_tables(which, tb, json ? nullptr : &out);
    } else if (*cycles) d = cmd_cycles(coeffs, t, z_max, cyc_budget);
    else d = cmd_orbit(coeffs, z, init);

    if (json) {
      out << d.j.dump(2) << '\n';
    } else if (*tables) {
      const Json& s = d.j["result"]["summary"];
      out << "summary: " << s["pass"] << " PASS, " << s["fail"] << " FAIL, " << s["skipped"]
          << " SKIPPED\n";
    } else {
      out << render_text(d.j);
    }
    return d.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const UnsupportedDegree& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const DegenerateCycle& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return exit_internal;
  }
}

} // namespace pisot::cli
