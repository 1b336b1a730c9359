#include "pisot/cli.hpp"

#include "pisot/error.hpp"

#include <sstream>

namespace pisot::cli {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  return j.at(key).get<T>();
}

const Json& sub(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

Json rat_list(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

RatVec rat_list_from(const Json& j) {
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

} // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("rational must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

Json to_json(const IntPoly& p) { return p.coeffs(); }

IntPoly int_poly_from_json(const Json& j) { return IntPoly(j.get<std::vector<std::int64_t>>()); }

Json to_json(const PisotReport& r) {
  Json j;
  j["is_pisot"] = r.is_pisot;
  j["is_irreducible"] = r.is_irreducible;
  j["irreducibility_known"] = r.irreducibility_known;
  if (r.dominant_root_bracket) {
    j["dominant_root_bracket"] = {to_json(r.dominant_root_bracket->first), to_json(r.dominant_root_bracket->second)};
    j["dominant_root_approx"] = r.dominant_root_bracket->first.get_d();
  } else {
    j["dominant_root_bracket"] = nullptr;
  }
  j["roots_inside_disk_count"] = r.roots_inside_disk_count;
  j["roots_on_circle_count"] = r.roots_on_circle_count;
  j["roots_outside_disk_count"] = r.roots_outside_disk_count;
  j["real_roots_above_one"] = r.real_roots_above_one;
  j["failure_reason"] = to_string(r.failure_reason);
  return j;
}

PisotReport pisot_report_from_json(const Json& j) {
  PisotReport r;
  r.is_pisot = field<bool>(j, "is_pisot");
  r.is_irreducible = field<bool>(j, "is_irreducible");
  r.irreducibility_known = field<bool>(j, "irreducibility_known");
  const Json& b = sub(j, "dominant_root_bracket");
  if (!b.is_null()) r.dominant_root_bracket = std::make_pair(rat_from_json(b.at(0)), rat_from_json(b.at(1)));
  r.roots_inside_disk_count = field<int>(j, "roots_inside_disk_count");
  r.roots_on_circle_count = field<int>(j, "roots_on_circle_count");
  r.roots_outside_disk_count = field<int>(j, "roots_outside_disk_count");
  r.real_roots_above_one = field<int>(j, "real_roots_above_one");
  r.failure_reason = parse_pisot_failure(field<std::string>(j, "failure_reason"));
  return r;
}

Json to_json(const SumProfile& p) { return Json{{"t", p.t}, {"s", p.s}}; }

SumProfile sum_profile_from_json(const Json& j) {
  return SumProfile{field<int>(j, "t"), field<std::vector<std::int64_t>>(j, "s")};
}

Json to_json(const ResidueCycle& c) {
  Json j;
  j["z"] = c.z();
  j["residues"] = c.residues();
  j["values"] = rat_list(c.values());
  j["min_dist"] = to_json(cycle_lower_bound(c));
  j["profile"] = to_json(c.profile());
  return j;
}

ResidueCycle residue_cycle_from_json(const Json& j) {
  return ResidueCycle(sum_profile_from_json(sub(j, "profile")), field<std::int64_t>(j, "z"),
                      field<std::vector<std::int64_t>>(j, "residues"));
}

Json to_json(const TaggedValue& v) {
  return Json{{"value", to_json(v.value)}, {"approx", v.value.get_d()}, {"source", v.source}};
}

TaggedValue tagged_value_from_json(const Json& j) {
  return TaggedValue{rat_from_json(sub(j, "value")), field<std::string>(j, "source")};
}

Json to_json(const MaxMinResult& m) {
  Json j;
  j["sup_value"] = to_json(m.sup_value);
  Json w = Json::array();
  for (const auto& p : m.witnesses) w.push_back(rat_list(p));
  j["witnesses"] = std::move(w);
  j["depth_used"] = m.depth_used;
  j["certified_exact"] = m.certified_exact;
  j["certificate"] = m.certificate ? to_json(*m.certificate) : Json(nullptr);
  j["method"] = m.method;
  j["nodes"] = m.nodes;
  j["complete"] = m.complete;
  return j;
}

MaxMinResult maxmin_result_from_json(const Json& j) {
  MaxMinResult m;
  m.sup_value = rat_from_json(sub(j, "sup_value"));
  for (const auto& p : sub(j, "witnesses")) m.witnesses.push_back(rat_list_from(p));
  m.depth_used = field<int>(j, "depth_used");
  m.certified_exact = field<bool>(j, "certified_exact");
  if (!sub(j, "certificate").is_null()) m.certificate = residue_cycle_from_json(j.at("certificate"));
  m.method = field<std::string>(j, "method");
  m.nodes = field<std::int64_t>(j, "nodes");
  m.complete = field<bool>(j, "complete");
  return m;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["coefficients"] = to_json(r.rec);
  j["lower"] = to_json(r.lower);
  j["upper"] = to_json(r.upper);
  j["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
  j["lower_cycle"] = r.lower_cycle ? to_json(*r.lower_cycle) : Json(nullptr);
  j["search"] = r.search ? to_json(*r.search) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.rec = int_poly_from_json(sub(j, "coefficients"));
  r.lower = tagged_value_from_json(sub(j, "lower"));
  r.upper = tagged_value_from_json(sub(j, "upper"));
  if (!sub(j, "exact").is_null()) r.exact = tagged_value_from_json(j.at("exact"));
  if (!sub(j, "lower_cycle").is_null()) r.lower_cycle = residue_cycle_from_json(j.at("lower_cycle"));
  if (!sub(j, "search").is_null()) r.search = maxmin_result_from_json(j.at("search"));
  r.warnings = field<std::vector<std::string>>(j, "warnings");
  return r;
}

Json to_json(const CycleSearchResult& r) {
  Json j;
  j["best"] = r.best ? to_json(*r.best) : Json(nullptr);
  j["min_dist"] = to_json(r.min_dist);
  j["candidates"] = r.candidates;
  j["exhaustive"] = r.exhaustive;
  return j;
}

CycleSearchResult cycle_search_from_json(const Json& j) {
  CycleSearchResult r;
  if (!sub(j, "best").is_null()) r.best = residue_cycle_from_json(j.at("best"));
  r.min_dist = rat_from_json(sub(j, "min_dist"));
  r.candidates = field<std::int64_t>(j, "candidates");
  r.exhaustive = field<bool>(j, "exhaustive");
  return r;
}

Json to_json(const OrbitResult& r) {
  return Json{{"preperiod", r.preperiod}, {"cycle", to_json(r.cycle)}, {"cycle_min_dist", to_json(r.cycle_min_dist)}};
}

OrbitResult orbit_result_from_json(const Json& j) {
  OrbitResult r;
  r.preperiod = field<std::int64_t>(j, "preperiod");
  r.cycle = residue_cycle_from_json(sub(j, "cycle"));
  r.cycle_min_dist = rat_from_json(sub(j, "cycle_min_dist"));
  return r;
}

namespace {

bool is_scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_scalar_list(v) && !v.empty()) {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      } else {
        os << pad << k << ": ";
        if (v.is_array()) {
          os << '(';
          for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
          os << ')';
        } else if (v.is_object()) {
          os << "{}";
        } else {
          os << scalar(v);
        }
        os << '\n';
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& v = j[i];
      if (is_scalar_list(v)) {
        os << pad << "- (";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar(v[k]);
        os << ")\n";
      } else if (v.is_structured()) {
        os << pad << "- [" << i << "]\n";
        render(v, indent + 2, os);
      } else {
        os << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

} // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

} // namespace pisot::cli
