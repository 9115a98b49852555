#include "spinal/sob.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace spinal {

std::string to_string(const Target& target) {
  if (const auto* c = std::get_if<SpineCircleId>(&target)) {
    return "circle " + std::to_string(c->value);
  }
  return "torus " + std::to_string(std::get<BoundaryTorusId>(target).value);
}

const Vertebra* SpinalOpenBook::find_vertebra(VertebraId id) const {
  for (const auto& v : vertebrae) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const PaperComponent* SpinalOpenBook::find_paper(PaperId id) const {
  for (const auto& p : papers) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const BoundaryTorus* SpinalOpenBook::find_torus(BoundaryTorusId id) const {
  for (const auto& t : boundary_tori) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::optional<VertebraId> SpinalOpenBook::vertebra_of(SpineCircleId circle) const {
  for (const auto& v : vertebrae) {
    if (std::find(v.circles.begin(), v.circles.end(), circle) != v.circles.end()) {
      return v.id;
    }
  }
  return std::nullopt;
}

bool ValidationReport::contains(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

std::string describe(const ValidationReport& report) {
  std::string out = "invalid spinal open book:";
  for (const auto& v : report.violations) out += " [" + v.code + "] " + v.message + ";";
  return out;
}

std::string paper_name(PaperId id) { return "paper " + std::to_string(id.value); }

}  // namespace

InvalidBook::InvalidBook(ValidationReport report)
    : Error(describe(report)), report_(std::move(report)) {}

bool is_permutation_of(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int x : sigma) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = sigma[x - 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

ValidationReport validate(const SpinalOpenBook& sob) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  std::set<VertebraId> vertebra_ids;
  std::set<SpineCircleId> circle_ids;
  for (const auto& v : sob.vertebrae) {
    if (!vertebra_ids.insert(v.id).second) {
      add("DUP-ID", "vertebra id " + std::to_string(v.id.value) + " is used twice");
    }
    if (!v.surface.is_orientable() || v.surface.boundary() < 1) {
      add("VERTEBRA-SURFACE", "vertebra " + std::to_string(v.id.value) +
                                  " must be orientable with nonempty boundary, got " +
                                  v.surface.to_string());
    }
    if (static_cast<int>(v.circles.size()) != v.surface.boundary()) {
      add("VERTEBRA-CIRCLES", "vertebra " + std::to_string(v.id.value) + " lists " +
                                  std::to_string(v.circles.size()) + " circles but has " +
                                  std::to_string(v.surface.boundary()) +
                                  " boundary components");
    }
    for (const auto& c : v.circles) {
      if (!circle_ids.insert(c).second) {
        add("DUP-ID", "circle id " + std::to_string(c.value) + " is used twice");
      }
    }
  }

  std::set<BoundaryTorusId> torus_ids;
  for (const auto& t : sob.boundary_tori) {
    if (!torus_ids.insert(t.id).second) {
      add("DUP-ID", "torus id " + std::to_string(t.id.value) + " is used twice");
    }
  }

  std::map<SpineCircleId, int> circle_hits;
  std::map<BoundaryTorusId, int> torus_hits;
  std::set<PaperId> paper_ids;
  for (const auto& p : sob.papers) {
    const std::string name = paper_name(p.id);
    if (!paper_ids.insert(p.id).second) {
      add("DUP-ID", "paper id " + std::to_string(p.id.value) + " is used twice");
    }
    if (!p.page.is_orientable()) {
      add("PAGE-SURFACE", name + " has a non-orientable page " + p.page.to_string());
    }
    const int b = p.page.boundary();
    if (b == 0 && !sob.generalized) {
      add("PAGE-1", name + " has closed pages but the book is not generalized");
    }

    const bool sigma_ok = is_permutation_of(p.sigma, b);
    if (!sigma_ok) {
      add("SIGMA", name + " sigma is not a permutation of 1.." + std::to_string(b));
    } else {
      std::set<std::set<int>> expected;
      for (const auto& cycle : permutation_cycles(p.sigma)) {
        expected.insert(std::set<int>(cycle.begin(), cycle.end()));
      }
      std::set<std::set<int>> listed;
      bool malformed = false;
      for (const auto& orbit : p.orbits) {
        std::set<int> labels(orbit.labels.begin(), orbit.labels.end());
        if (labels.size() != orbit.labels.size() || labels.empty()) malformed = true;
        listed.insert(std::move(labels));
      }
      if (malformed || listed.size() != p.orbits.size() || listed != expected) {
        add("ORBIT-CYCLE", name + " orbits do not match the cycles of sigma");
      }
    }

    for (const auto& orbit : p.orbits) {
      if (const auto* c = std::get_if<SpineCircleId>(&orbit.target)) {
        if (!circle_ids.count(*c)) {
          add("INC-3", name + " has an orbit targeting missing " + to_string(orbit.target));
        } else {
          ++circle_hits[*c];
        }
      } else {
        const auto t = std::get<BoundaryTorusId>(orbit.target);
        if (!torus_ids.count(t)) {
          add("INC-3", name + " has an orbit targeting missing " + to_string(orbit.target));
        } else {
          ++torus_hits[t];
        }
      }
    }
  }

  for (const auto& c : circle_ids) {
    const int hits = circle_hits.count(c) ? circle_hits[c] : 0;
    if (hits != 1) {
      add("INC-1", "circle " + std::to_string(c.value) + " is the target of " +
                       std::to_string(hits) + " orbits");
    }
  }
  for (const auto& t : torus_ids) {
    const int hits = torus_hits.count(t) ? torus_hits[t] : 0;
    if (hits != 1) {
      add("INC-2", "torus " + std::to_string(t.value) + " is the target of " +
                       std::to_string(hits) + " orbits");
    }
  }
  return report;
}

void require_valid(const SpinalOpenBook& sob) {
  auto report = validate(sob);
  if (!report.ok()) throw InvalidBook(std::move(report));
}

int multiplicity(const SpinalOpenBook& sob, const Target& target) {
  int found = 0;
  int size = 0;
  for (const auto& p : sob.papers) {
    for (const auto& orbit : p.orbits) {
      if (orbit.target == target) {
        ++found;
        size = orbit.size();
      }
    }
  }
  if (found == 0) throw PreconditionError("no incident orbit at " + to_string(target));
  if (found > 1) throw PreconditionError("several orbits attached at " + to_string(target));
  return size;
}

Adjacency adjacency(const SpinalOpenBook& sob) {
  require_valid(sob);
  Adjacency graph;
  for (const auto& v : sob.vertebrae) graph.vertebrae.push_back(v.id);
  for (const auto& p : sob.papers) graph.papers.push_back(p.id);
  std::sort(graph.vertebrae.begin(), graph.vertebrae.end());
  std::sort(graph.papers.begin(), graph.papers.end());
  for (const auto& p : sob.papers) {
    for (const auto& orbit : p.orbits) {
      if (const auto* c = std::get_if<SpineCircleId>(&orbit.target)) {
        graph.edges.push_back({*sob.vertebra_of(*c), p.id, *c, orbit.size()});
      }
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const AdjacencyEdge& a, const AdjacencyEdge& b) {
              return std::tie(a.vertebra, a.paper, a.circle) <
                     std::tie(b.vertebra, b.paper, b.circle);
            });
  return graph;
}

std::vector<PaperId> interior_paper_components(const SpinalOpenBook& sob) {
  std::vector<PaperId> out;
  for (const auto& p : sob.papers) {
    const bool touches_boundary =
        std::any_of(p.orbits.begin(), p.orbits.end(), [](const Orbit& o) {
          return std::holds_alternative<BoundaryTorusId>(o.target);
        });
    if (!touches_boundary) out.push_back(p.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int connected_components(const SpinalOpenBook& sob) {
  // Nodes: vertebrae, then papers, then tori.
  const int nv = static_cast<int>(sob.vertebrae.size());
  const int np = static_cast<int>(sob.papers.size());
  const int nt = static_cast<int>(sob.boundary_tori.size());
  std::vector<int> parent(nv + np + nt);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::map<SpineCircleId, int> circle_node;
  for (int i = 0; i < nv; ++i) {
    for (const auto& c : sob.vertebrae[i].circles) circle_node[c] = i;
  }
  std::map<BoundaryTorusId, int> torus_node;
  for (int i = 0; i < nt; ++i) torus_node[sob.boundary_tori[i].id] = nv + np + i;

  for (int j = 0; j < np; ++j) {
    for (const auto& orbit : sob.papers[j].orbits) {
      if (const auto* c = std::get_if<SpineCircleId>(&orbit.target)) {
        if (circle_node.count(*c)) unite(nv + j, circle_node[*c]);
      } else if (torus_node.count(std::get<BoundaryTorusId>(orbit.target))) {
        unite(nv + j, torus_node[std::get<BoundaryTorusId>(orbit.target)]);
      }
    }
  }
  int roots = 0;
  for (int i = 0; i < nv + np + nt; ++i) roots += find(i) == i;
  return roots;
}

int spine_euler(const SpinalOpenBook& sob) {
  int total = 0;
  for (const auto& v : sob.vertebrae) total += v.surface.euler();
  return total;
}

}  // namespace spinal
