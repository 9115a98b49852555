#include "spinal/lefschetz.hpp"

#include <algorithm>
#include <numeric>

namespace spinal {

std::vector<std::string> check_descriptor(const LefschetzDescriptor& lf,
                                          const SearchBounds& bounds) {
  std::vector<std::string> problems;
  if (!lf.base.is_orientable() || lf.base.boundary() < 1) {
    problems.push_back("base must be orientable with nonempty boundary");
  }
  if (!lf.fiber.is_orientable() || lf.fiber.boundary() < 1) {
    problems.push_back("fiber must be orientable with nonempty boundary");
  }
  if (!problems.empty()) return problems;

  std::vector<int> all;
  for (const auto& g : lf.groups) all.insert(all.end(), g.labels.begin(), g.labels.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expected(lf.fiber.boundary());
  std::iota(expected.begin(), expected.end(), 1);
  if (all != expected) {
    problems.push_back("groups must partition the fiber boundary labels 1.." +
                       std::to_string(lf.fiber.boundary()));
  }

  for (std::size_t gi = 0; gi < lf.groups.size(); ++gi) {
    const auto& g = lf.groups[gi];
    const std::string name = "group " + std::to_string(gi);
    if (g.labels.empty()) {
      problems.push_back(name + " is empty");
      continue;
    }
    if (static_cast<int>(g.mults.size()) != lf.base.boundary()) {
      problems.push_back(name + " needs one multiplicity list per base boundary component");
      continue;
    }
    bool sums = true;
    int parts = 0;
    for (const auto& m : g.mults) {
      int s = 0;
      for (int x : m) {
        if (x < 1) sums = false;
        s += x;
      }
      parts += static_cast<int>(m.size());
      if (s != g.degree()) sums = false;
    }
    if (!sums) {
      problems.push_back(name + " multiplicities must be positive and sum to its degree");
      continue;
    }
    if (!g.cover_total.is_orientable() || g.cover_total.boundary() != parts) {
      problems.push_back(name + " cover total must be orientable with " + std::to_string(parts) +
                         " boundary components");
      continue;
    }
    if (g.cover_total.euler() != g.degree() * lf.base.euler()) {
      problems.push_back(name + " violates Riemann-Hurwitz for an unbranched cover");
      continue;
    }
    CoverSpec spec{lf.base, g.degree(), {}, true, true, g.cover_total};
    for (const auto& m : g.mults) spec.boundary_types.push_back(normalized(m));
    if (!exists_cover(spec, bounds).exists) {
      problems.push_back(name + " boundary data is not realized by a connected unbranched cover");
    }
  }
  return problems;
}

void require_valid(const LefschetzDescriptor& lf, const SearchBounds& bounds) {
  const auto problems = check_descriptor(lf, bounds);
  if (problems.empty()) return;
  std::string message = "invalid Lefschetz descriptor:";
  for (const auto& p : problems) message += " " + p + ";";
  throw PreconditionError(message);
}

bool is_allowable(const LefschetzDescriptor& lf) {
  return std::none_of(lf.critical_points.begin(), lf.critical_points.end(),
                      [](const CriticalPoint& c) { return c.homologically_trivial; });
}

int euler_total(const LefschetzDescriptor& lf) {
  return lf.base.euler() * lf.fiber.euler() + static_cast<int>(lf.critical_points.size());
}

SpinalOpenBook boundary_sob(const LefschetzDescriptor& lf, const SearchBounds& bounds) {
  require_valid(lf, bounds);
  SpinalOpenBook sob;
  const int b0 = lf.base.boundary();
  sob.papers.resize(b0);
  for (int j = 0; j < b0; ++j) {
    sob.papers[j].id = PaperId{j};
    sob.papers[j].page = lf.fiber;
    sob.papers[j].sigma.assign(lf.fiber.boundary(), 0);
  }

  int next_circle = 0;
  for (std::size_t gi = 0; gi < lf.groups.size(); ++gi) {
    const auto& g = lf.groups[gi];
    std::vector<int> labels = g.labels;
    std::sort(labels.begin(), labels.end());
    Vertebra v{VertebraId{static_cast<int>(gi)}, g.cover_total, {}};
    for (int j = 0; j < b0; ++j) {
      std::size_t at = 0;
      for (int m : g.mults[j]) {
        const SpineCircleId circle{next_circle++};
        v.circles.push_back(circle);
        Orbit orbit{{labels.begin() + at, labels.begin() + at + m}, circle};
        for (int i = 0; i < m; ++i) {
          sob.papers[j].sigma[orbit.labels[i] - 1] = orbit.labels[(i + 1) % m];
        }
        sob.papers[j].orbits.push_back(std::move(orbit));
        at += m;
      }
    }
    sob.vertebrae.push_back(std::move(v));
  }
  for (auto& p : sob.papers) {
    std::sort(p.orbits.begin(), p.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.labels.front() < b.labels.front(); });
  }
  require_valid(sob);
  return sob;
}

}  // namespace spinal
