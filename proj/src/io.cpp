#include "spinal/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace spinal {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::vector<int> integers(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(integer(x, what));
  return out;
}

const Json& array(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

Exactness exactness_from(const std::string& s) {
  if (s == "Exact") return Exactness::Exact;
  if (s == "NotExact") return Exactness::NotExact;
  if (s == "Unknown") return Exactness::Unknown;
  throw ParseError("unknown exactness flag \"" + s + "\"");
}

}  // namespace

Json to_json(const Surface& s) {
  if (s.is_orientable()) return Json{{"genus", s.genus()}, {"boundary", s.boundary()}};
  return Json{{"crosscaps", s.crosscaps()}, {"boundary", s.boundary()}};
}

Surface surface_from_json(const Json& j) {
  const int b = integer(field(j, "boundary"), "boundary");
  try {
    if (j.contains("crosscaps")) return Surface::nonorientable(integer(j["crosscaps"], "crosscaps"), b);
    return Surface::orientable(integer(field(j, "genus"), "genus"), b);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const SpinalOpenBook& sob) {
  Json out;
  out["generalized"] = sob.generalized;
  out["vertebrae"] = Json::array();
  for (const auto& v : sob.vertebrae) {
    Json circles = Json::array();
    for (auto c : v.circles) circles.push_back(c.value);
    out["vertebrae"].push_back({{"id", v.id.value}, {"surface", to_json(v.surface)}, {"circles", circles}});
  }
  out["papers"] = Json::array();
  for (const auto& p : sob.papers) {
    Json orbits = Json::array();
    for (const auto& o : p.orbits) {
      Json target;
      if (const auto* c = std::get_if<SpineCircleId>(&o.target)) {
        target["circle"] = c->value;
      } else {
        target["torus"] = std::get<BoundaryTorusId>(o.target).value;
      }
      orbits.push_back({{"labels", o.labels}, {"target", target}});
    }
    out["papers"].push_back(
        {{"id", p.id.value}, {"page", to_json(p.page)}, {"sigma", p.sigma}, {"orbits", orbits}});
  }
  out["boundary_tori"] = Json::array();
  for (const auto& t : sob.boundary_tori) {
    out["boundary_tori"].push_back({{"id", t.id.value}, {"framing", t.framing}});
  }
  return out;
}

SpinalOpenBook book_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spinal open book must be a JSON object");
  SpinalOpenBook sob;
  sob.generalized = j.contains("generalized") ? boolean(j["generalized"], "generalized") : false;
  for (const auto& v : array(j, "vertebrae")) {
    Vertebra x{VertebraId{integer(field(v, "id"), "vertebra id")}, surface_from_json(field(v, "surface")), {}};
    for (int c : integers(field(v, "circles"), "circle id")) x.circles.push_back(SpineCircleId{c});
    sob.vertebrae.push_back(std::move(x));
  }
  for (const auto& p : array(j, "papers")) {
    PaperComponent x;
    x.id = PaperId{integer(field(p, "id"), "paper id")};
    x.page = surface_from_json(field(p, "page"));
    x.sigma = integers(field(p, "sigma"), "sigma");
    for (const auto& o : array(p, "orbits")) {
      Orbit orbit;
      orbit.labels = integers(field(o, "labels"), "label");
      const Json& t = field(o, "target");
      if (t.is_object() && t.contains("circle")) {
        orbit.target = SpineCircleId{integer(t["circle"], "circle id")};
      } else if (t.is_object() && t.contains("torus")) {
        orbit.target = BoundaryTorusId{integer(t["torus"], "torus id")};
      } else {
        throw ParseError("orbit target must be {\"circle\": id} or {\"torus\": id}");
      }
      x.orbits.push_back(std::move(orbit));
    }
    sob.papers.push_back(std::move(x));
  }
  if (j.contains("boundary_tori")) {
    for (const auto& t : array(j, "boundary_tori")) {
      sob.boundary_tori.push_back({BoundaryTorusId{integer(field(t, "id"), "torus id")},
                                   t.contains("framing") ? integer(t["framing"], "framing") : 0});
    }
  }
  return sob;
}

Json to_json(const MulticurveData& mc) {
  Json out;
  out["base_orientable"] = mc.base_orientable;
  out["regions"] = Json::array();
  for (const auto& r : mc.regions) {
    out["regions"].push_back({{"surface", to_json(r.surface)}, {"sides", r.sides}});
  }
  out["curves"] = Json::array();
  for (const auto& c : mc.curves) {
    if (const auto* t = std::get_if<TwoSidedCurve>(&c)) {
      out["curves"].push_back({{"two_sided",
                                {{"side_a", t->side_a},
                                 {"side_b", t->side_b},
                                 {"orientation_reversing_gluing", t->orientation_reversing_gluing}}}});
    } else {
      out["curves"].push_back({{"one_sided", {{"side", std::get<OneSidedCurve>(c).side}}}});
    }
  }
  if (mc.euler_number) out["euler_number"] = *mc.euler_number;
  return out;
}

MulticurveData multicurve_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("multicurve data must be a JSON object");
  MulticurveData mc;
  mc.base_orientable = boolean(field(j, "base_orientable"), "base_orientable");
  for (const auto& r : array(j, "regions")) {
    mc.regions.push_back({surface_from_json(field(r, "surface")), integers(field(r, "sides"), "side id")});
  }
  for (const auto& c : array(j, "curves")) {
    if (c.is_object() && c.contains("two_sided")) {
      const Json& t = c["two_sided"];
      mc.curves.push_back(TwoSidedCurve{
          integer(field(t, "side_a"), "side_a"), integer(field(t, "side_b"), "side_b"),
          t.contains("orientation_reversing_gluing")
              ? boolean(t["orientation_reversing_gluing"], "orientation_reversing_gluing")
              : true});
    } else if (c.is_object() && c.contains("one_sided")) {
      mc.curves.push_back(OneSidedCurve{integer(field(c["one_sided"], "side"), "side")});
    } else {
      throw ParseError("curve must be {\"two_sided\": ...} or {\"one_sided\": ...}");
    }
  }
  if (j.contains("euler_number") && !j["euler_number"].is_null()) {
    mc.euler_number = integer(j["euler_number"], "euler_number");
  }
  return mc;
}

Json to_json(const LefschetzDescriptor& lf) {
  Json out;
  out["base"] = to_json(lf.base);
  out["fiber"] = to_json(lf.fiber);
  out["critical_points"] = Json::array();
  for (const auto& c : lf.critical_points) out["critical_points"].push_back({{"trivial", c.homologically_trivial}});
  out["groups"] = Json::array();
  for (const auto& g : lf.groups) {
    out["groups"].push_back({{"labels", g.labels}, {"cover_total", to_json(g.cover_total)}, {"mults", g.mults}});
  }
  return out;
}

LefschetzDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Lefschetz descriptor must be a JSON object");
  LefschetzDescriptor lf;
  lf.base = surface_from_json(field(j, "base"));
  lf.fiber = surface_from_json(field(j, "fiber"));
  if (j.contains("critical_points")) {
    for (const auto& c : array(j, "critical_points")) {
      lf.critical_points.push_back({boolean(field(c, "trivial"), "trivial")});
    }
  }
  for (const auto& g : array(j, "groups")) {
    HorizontalGroup group;
    group.labels = integers(field(g, "labels"), "label");
    group.cover_total = surface_from_json(field(g, "cover_total"));
    for (const auto& m : array(g, "mults")) group.mults.push_back(integers(m, "multiplicity"));
    lf.groups.push_back(std::move(group));
  }
  return lf;
}

ExactnessFlags flags_from_json(const Json& j, const SpinalOpenBook& sob) {
  if (!j.is_object()) throw ParseError("flags must be a JSON object");
  ExactnessFlags flags;
  const std::string def = j.contains("default") ? j["default"].get<std::string>() : "Unknown";
  if (def == "disk-rule") {
    flags = ExactnessFlags::disk_rule(sob);
  } else {
    flags = ExactnessFlags::all(sob, exactness_from(def));
  }
  if (j.contains("vertebrae")) {
    const Json& v = j["vertebrae"];
    if (!v.is_object()) throw ParseError("\"vertebrae\" must map ids to flags");
    for (const auto& [key, value] : v.items()) {
      int id = 0;
      try {
        id = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("vertebra key \"" + key + "\" is not an integer");
      }
      if (!value.is_string()) throw ParseError("flag values must be strings");
      flags.flags[VertebraId{id}] = exactness_from(value.get<std::string>());
    }
  }
  return flags;
}

Json to_json(const ExactnessFlags& flags) {
  Json v = Json::object();
  for (const auto& [id, e] : flags.flags) v[std::to_string(id.value)] = to_string(e);
  return Json{{"default", "Unknown"}, {"vertebrae", v}};
}

Json to_json(const TorsionWitness& w) {
  Json spines = Json::array();
  for (auto v : w.adjacent_spines) spines.push_back(v.value);
  return Json{{"order", w.order},
              {"piece", w.piece.value},
              {"adjacent_spines", spines},
              {"separating", to_string(w.separating)}};
}

Json to_json(const Verdict& v) {
  return Json{{"verdict", to_string(v.kind)},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
              {"citation", v.citation}};
}

Json to_json(const std::vector<Verdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) out.push_back(to_json(v));
  return out;
}

Json to_json(const forms::CheckReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"value", c.value}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"condition", r.condition}, {"min_value", r.min_value}, {"worst", r.worst},
              {"pass", r.pass},           {"samples", r.samples},     {"tolerance", r.tolerance},
              {"clauses", clauses},       {"summary", r.summary()}};
}

Json to_json(const CoverResult& result) {
  Json out;
  out["exists"] = result.exists;
  out["branching"] = result.branching;
  out["cover_type"] = result.cover_type ? to_json(*result.cover_type) : Json(nullptr);
  if (result.certificate) {
    Json handles = Json::array();
    for (const auto& [a, b] : result.certificate->handles) handles.push_back({a, b});
    out["certificate"] = {{"boundary", result.certificate->boundary},
                          {"handles", handles},
                          {"branch", result.certificate->branch}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back({{"code", v.code}, {"message", v.message}});
  return Json{{"valid", report.ok()}, {"violations", violations}};
}

SpinalOpenBook canonicalize(const SpinalOpenBook& sob) {
  SpinalOpenBook out;
  out.generalized = sob.generalized;

  std::vector<Vertebra> vertebrae = sob.vertebrae;
  std::sort(vertebrae.begin(), vertebrae.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::map<SpineCircleId, SpineCircleId> circle_map;
  for (std::size_t i = 0; i < vertebrae.size(); ++i) {
    Vertebra v{VertebraId{static_cast<int>(i)}, vertebrae[i].surface, {}};
    for (auto c : vertebrae[i].circles) {
      const SpineCircleId fresh{static_cast<int>(circle_map.size())};
      circle_map.emplace(c, fresh);
      v.circles.push_back(circle_map.at(c));
    }
    out.vertebrae.push_back(std::move(v));
  }

  std::vector<BoundaryTorus> tori = sob.boundary_tori;
  std::sort(tori.begin(), tori.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::map<BoundaryTorusId, BoundaryTorusId> torus_map;
  for (std::size_t i = 0; i < tori.size(); ++i) {
    torus_map.emplace(tori[i].id, BoundaryTorusId{static_cast<int>(i)});
    out.boundary_tori.push_back({BoundaryTorusId{static_cast<int>(i)}, tori[i].framing});
  }

  std::vector<PaperComponent> papers = sob.papers;
  std::sort(papers.begin(), papers.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < papers.size(); ++i) {
    PaperComponent p = papers[i];
    p.id = PaperId{static_cast<int>(i)};
    std::vector<Orbit> orbits;
    for (const auto& cycle : permutation_cycles(p.sigma)) {
      auto it = std::find_if(p.orbits.begin(), p.orbits.end(), [&](const Orbit& o) {
        return std::find(o.labels.begin(), o.labels.end(), cycle.front()) != o.labels.end();
      });
      if (it == p.orbits.end()) throw InvalidBook(validate(sob));
      Target t = it->target;
      if (const auto* c = std::get_if<SpineCircleId>(&t)) {
        if (circle_map.count(*c)) t = circle_map.at(*c);
      } else if (torus_map.count(std::get<BoundaryTorusId>(t))) {
        t = torus_map.at(std::get<BoundaryTorusId>(t));
      }
      orbits.push_back({cycle, t});
    }
    p.orbits = std::move(orbits);
    out.papers.push_back(std::move(p));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::vector<ZooEntry> load_zoo(const std::string& dir) {
  const Json index = read_json_file(dir + "/index.json");
  if (!index.is_array()) throw ParseError("zoo index must be an array");
  std::vector<ZooEntry> out;
  for (const auto& e : index) {
    try {
      ZooEntry entry;
      entry.name = e.at("name").get<std::string>();
      entry.citation = e.at("citation").get<std::string>();
      entry.expected_verdicts = e.at("expected_verdicts").get<std::vector<std::string>>();
      const std::string kind = e.at("kind").get<std::string>();
      const Json data = read_json_file(dir + "/" + e.at("file").get<std::string>());
      if (kind == "book") {
        entry.data = book_from_json(data);
      } else if (kind == "multicurve") {
        entry.data = multicurve_from_json(data);
      } else if (kind == "lefschetz") {
        entry.data = descriptor_from_json(data);
      } else {
        throw ParseError("unknown zoo kind \"" + kind + "\"");
      }
      out.push_back(std::move(entry));
    } catch (const Json::exception& ex) {
      throw ParseError(std::string("zoo index: ") + ex.what());
    }
  }
  return out;
}

std::vector<std::string> zoo_verdicts(const ZooEntry& entry) {
  std::vector<Verdict> vs;
  if (const auto* sob = std::get_if<SpinalOpenBook>(&entry.data)) {
    vs = verdict(*sob, ExactnessFlags::disk_rule(*sob));
  } else if (const auto* mc = std::get_if<MulticurveData>(&entry.data)) {
    vs = circle_bundle_verdicts(*mc).verdicts;
  } else {
    const SpinalOpenBook sob = boundary_sob(std::get<LefschetzDescriptor>(entry.data));
    vs = verdict(sob, ExactnessFlags::disk_rule(sob));
  }
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(to_string(v.kind));
  return out;
}

}  // namespace spinal
