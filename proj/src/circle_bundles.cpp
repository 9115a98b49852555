#include "spinal/circle_bundles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spinal {

namespace {

// Region index of every side.
std::map<int, int> side_owner(const MulticurveData& mc) {
  std::map<int, int> owner;
  for (std::size_t r = 0; r < mc.regions.size(); ++r) {
    for (int s : mc.regions[r].sides) owner.emplace(s, static_cast<int>(r));
  }
  return owner;
}

int owner_of(const std::map<int, int>& owner, int side) {
  auto it = owner.find(side);
  if (it == owner.end()) throw PreconditionError("dangling side id " + std::to_string(side));
  return it->second;
}

struct Gluing {
  int a;
  int b;
  bool reversing;
};

std::vector<Gluing> gluings(const MulticurveData& mc) {
  const auto owner = side_owner(mc);
  std::vector<Gluing> out;
  for (const auto& c : mc.curves) {
    if (const auto* t = std::get_if<TwoSidedCurve>(&c)) {
      out.push_back({owner_of(owner, t->side_a), owner_of(owner, t->side_b),
                     t->orientation_reversing_gluing});
    } else {
      owner_of(owner, std::get<OneSidedCurve>(c).side);
    }
  }
  return out;
}

}  // namespace

bool glued_base_orientable(const MulticurveData& mc) {
  for (const auto& c : mc.curves) {
    if (std::holds_alternative<OneSidedCurve>(c)) return false;
  }
  // Signs on regions with sign(a) * sign(b) = -1 across reversing gluings.
  const int r = static_cast<int>(mc.regions.size());
  std::vector<int> sign(r, 0);
  const auto glue = gluings(mc);
  for (int start = 0; start < r; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& g : glue) {
        if (g.a != x && g.b != x) continue;
        const int y = g.a == x ? g.b : g.a;
        const int want = g.reversing ? -sign[x] : sign[x];
        if (sign[y] == 0) {
          sign[y] = want;
          stack.push_back(y);
        } else if (sign[y] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> self_glued_curves(const MulticurveData& mc) {
  const auto owner = side_owner(mc);
  std::vector<int> out;
  for (std::size_t i = 0; i < mc.curves.size(); ++i) {
    if (const auto* t = std::get_if<TwoSidedCurve>(&mc.curves[i])) {
      if (owner_of(owner, t->side_a) == owner_of(owner, t->side_b)) {
        out.push_back(static_cast<int>(i));
      }
    }
  }
  return out;
}

std::vector<std::string> check_multicurve(const MulticurveData& mc) {
  std::vector<std::string> problems;
  if (mc.regions.empty()) problems.push_back("no regions");
  if (mc.curves.empty()) problems.push_back("no curves");

  std::map<int, int> region_uses;
  for (std::size_t r = 0; r < mc.regions.size(); ++r) {
    const auto& region = mc.regions[r];
    const std::string name = "region " + std::to_string(r);
    if (!region.surface.is_orientable()) problems.push_back(name + " must be orientable");
    if (region.sides.empty()) problems.push_back(name + " has no sides");
    if (static_cast<int>(region.sides.size()) != region.surface.boundary()) {
      problems.push_back(name + " side count differs from its boundary count");
    }
    for (int s : region.sides) ++region_uses[s];
  }
  std::map<int, int> curve_uses;
  for (const auto& c : mc.curves) {
    if (const auto* t = std::get_if<TwoSidedCurve>(&c)) {
      ++curve_uses[t->side_a];
      ++curve_uses[t->side_b];
    } else {
      ++curve_uses[std::get<OneSidedCurve>(c).side];
      if (mc.base_orientable) problems.push_back("one-sided curve on an orientable base");
    }
  }
  for (const auto& [side, n] : region_uses) {
    if (n != 1) problems.push_back("side " + std::to_string(side) + " belongs to several regions");
    if (!curve_uses.count(side)) problems.push_back("side " + std::to_string(side) + " is unused");
  }
  for (const auto& [side, n] : curve_uses) {
    if (!region_uses.count(side)) problems.push_back("dangling side id " + std::to_string(side));
    if (n != 1) problems.push_back("side " + std::to_string(side) + " is used by several curves");
  }
  if (!problems.empty()) return problems;

  const int r = static_cast<int>(mc.regions.size());
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gluings(mc)) parent[find(g.a)] = find(g.b);
  for (int i = 0; i < r; ++i) {
    if (find(i) != find(0)) {
      problems.push_back("regions do not glue to a connected base");
      break;
    }
  }
  if (glued_base_orientable(mc) != mc.base_orientable) {
    problems.push_back(mc.base_orientable ? "gluings make the base non-orientable"
                                          : "gluings make the base orientable");
  }
  return problems;
}

namespace {

void require_valid_multicurve(const MulticurveData& mc) {
  const auto problems = check_multicurve(mc);
  if (problems.empty()) return;
  std::string message = "invalid multicurve data:";
  for (const auto& p : problems) message += " " + p + ";";
  throw PreconditionError(message);
}

}  // namespace

bool inverts_orientations(const MulticurveData& mc) {
  gluings(mc);  // rejects dangling sides
  return std::all_of(mc.curves.begin(), mc.curves.end(), [](const Curve& c) {
    const auto* t = std::get_if<TwoSidedCurve>(&c);
    return t == nullptr || t->orientation_reversing_gluing;
  });
}

SpinalOpenBook build_sob(const MulticurveData& mc) {
  require_valid_multicurve(mc);
  if (!inverts_orientations(mc)) {
    throw PreconditionError(
        "multicurve does not invert orientations: a neighborhood must admit an orientation "
        "matching the complement on one side and opposite on the other");
  }
  SpinalOpenBook sob;
  for (std::size_t r = 0; r < mc.regions.size(); ++r) {
    Vertebra v{VertebraId{static_cast<int>(r)}, mc.regions[r].surface, {}};
    for (int s : mc.regions[r].sides) v.circles.push_back(SpineCircleId{s});
    sob.vertebrae.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < mc.curves.size(); ++j) {
    PaperComponent p;
    p.id = PaperId{static_cast<int>(j)};
    p.page = Surface::annulus();
    if (const auto* t = std::get_if<TwoSidedCurve>(&mc.curves[j])) {
      p.sigma = {1, 2};
      p.orbits = {{{1}, SpineCircleId{t->side_a}}, {{2}, SpineCircleId{t->side_b}}};
    } else {
      // Connected boundary, with multiplicity 2.
      p.sigma = {2, 1};
      p.orbits = {{{1, 2}, SpineCircleId{std::get<OneSidedCurve>(mc.curves[j]).side}}};
    }
    sob.papers.push_back(std::move(p));
  }
  require_valid(sob);
  return sob;
}

bool direct_torsion_criterion(const MulticurveData& mc) {
  const std::size_t r = mc.regions.size();
  return r >= 3 || (r >= 2 && !mc.base_orientable);
}

CircleBundleReport circle_bundle_verdicts(const MulticurveData& mc) {
  const SpinalOpenBook sob = build_sob(mc);
  CircleBundleReport report;
  report.torsion = direct_torsion_criterion(mc);
  report.verdicts = verdict(sob, ExactnessFlags::disk_rule(sob));

  const bool engine_torsion =
      std::any_of(report.verdicts.begin(), report.verdicts.end(), [](const Verdict& v) {
        return v.kind == VerdictKind::NotStronglyFillable;
      });
  if (engine_torsion != report.torsion) {
    throw InternalInconsistency("circle bundle: direct criterion says " +
                                std::string(report.torsion ? "torsion" : "no torsion") +
                                " but the obstruction engine disagrees");
  }
  for (const auto& v : report.verdicts) {
    if (v.witness && v.witness->order != 1) {
      throw InternalInconsistency("circle bundle torsion must have order 1");
    }
  }

  // Genus-zero pages and a nonempty multicurve: the Omega = 0 statements hold
  // whether or not there is torsion.
  for (VerdictKind kind :
       {VerdictKind::NoNonSeparatingContactEmbedding, VerdictKind::NoDisconnectedSemifilling}) {
    const bool present = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                                     [&](const Verdict& v) { return v.kind == kind; });
    if (!present) report.verdicts.push_back({kind, std::nullopt, citation_for(kind)});
  }
  for (int i : self_glued_curves(mc)) {
    report.notes.push_back("curve " + std::to_string(i) + " has both sides on one region");
  }
  return report;
}

}  // namespace spinal
