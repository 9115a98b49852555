#include "spinal/surgery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace spinal {

namespace {

void require_vertebrae(const SpinalOpenBook& sob, const std::set<VertebraId>& ids) {
  for (VertebraId id : ids) {
    if (sob.find_vertebra(id) == nullptr) {
      throw PreconditionError("unknown vertebra " + std::to_string(id.value));
    }
  }
}

}  // namespace

SpineRemoval spine_remove(const SpinalOpenBook& sob, const std::set<VertebraId>& ids) {
  require_valid(sob);
  require_vertebrae(sob, ids);
  SpineRemoval out{sob, {}, {}};
  if (ids.empty()) return out;

  std::set<SpineCircleId> removed_circles;
  for (const auto& v : sob.vertebrae) {
    if (!ids.count(v.id)) continue;
    out.record.removed_vertebrae.push_back(v.id);
    removed_circles.insert(v.circles.begin(), v.circles.end());
  }
  std::erase_if(out.book.vertebrae, [&](const Vertebra& v) { return ids.count(v.id) > 0; });

  bool closed = false;
  for (auto& p : out.book.papers) {
    const int b = p.page.boundary();
    std::vector<bool> keep(b + 1, true);
    std::vector<Orbit> kept;
    int capped = 0;
    for (const auto& o : p.orbits) {
      const auto* c = std::get_if<SpineCircleId>(&o.target);
      if (c != nullptr && removed_circles.count(*c)) {
        for (int l : o.labels) keep[l] = false;
        capped += o.size();
        out.record.capped_orbits.push_back({p.id, o.labels, o.size()});
        out.record.euler_delta_pages += o.size();
      } else {
        kept.push_back(o);
      }
    }
    if (capped == 0) continue;

    std::vector<int> relabel(b + 1, 0);
    int next = 0;
    for (int l = 1; l <= b; ++l) {
      if (keep[l]) relabel[l] = ++next;
    }
    std::vector<int> sigma(next);
    for (int l = 1; l <= b; ++l) {
      if (keep[l]) sigma[relabel[l] - 1] = relabel[p.sigma[l - 1]];
    }
    for (auto& o : kept) {
      for (int& l : o.labels) l = relabel[l];
    }
    p.page = Surface::orientable(p.page.genus(), next);
    p.sigma = std::move(sigma);
    p.orbits = std::move(kept);
    if (p.closed_pages()) closed = true;
  }
  if (closed) {
    out.book.generalized = true;
    out.notes.push_back(kClosedPagesNote);
  }
  require_valid(out.book);
  return out;
}

SpinalOpenBook blow_up(const SpinalOpenBook& sob, const std::set<VertebraId>& ids) {
  require_valid(sob);
  require_vertebrae(sob, ids);
  for (VertebraId id : ids) {
    if (!sob.find_vertebra(id)->surface.is_disk()) {
      throw PreconditionError("blow-up requires disk vertebrae (vertebra " +
                              std::to_string(id.value) + " is " +
                              sob.find_vertebra(id)->surface.to_string() + ")");
    }
  }
  SpinalOpenBook out = sob;
  int next_torus = 0;
  for (const auto& t : sob.boundary_tori) next_torus = std::max(next_torus, t.id.value + 1);

  for (VertebraId id : ids) {
    const SpineCircleId circle = sob.find_vertebra(id)->circles.front();
    const BoundaryTorusId torus{next_torus++};
    for (auto& p : out.papers) {
      for (auto& o : p.orbits) {
        if (o.target == Target{circle}) o.target = torus;
      }
    }
    out.boundary_tori.push_back({torus, 0});
  }
  std::erase_if(out.vertebrae, [&](const Vertebra& v) { return ids.count(v.id) > 0; });
  require_valid(out);
  return out;
}

SpinalOpenBook binding_sum(const SpinalOpenBook& sob, SpineCircleId c1, SpineCircleId c2) {
  require_valid(sob);
  if (c1 == c2) throw PreconditionError("binding sum needs two distinct circles");
  const auto v1 = sob.vertebra_of(c1);
  const auto v2 = sob.vertebra_of(c2);
  if (!v1 || !v2) throw PreconditionError("binding sum: unknown circle");
  for (auto [c, v] : {std::pair{c1, *v1}, std::pair{c2, *v2}}) {
    if (!sob.find_vertebra(v)->surface.is_disk()) {
      throw PreconditionError("binding sum: circle " + std::to_string(c.value) +
                              " does not bound a disk vertebra");
    }
    if (multiplicity(sob, c) != 1) {
      throw PreconditionError("binding sum: circle " + std::to_string(c.value) +
                              " is attached with multiplicity " +
                              std::to_string(multiplicity(sob, c)));
    }
  }
  SpinalOpenBook out = sob;
  const VertebraId keep = std::min(*v1, *v2);
  const VertebraId drop = std::max(*v1, *v2);
  for (auto& v : out.vertebrae) {
    if (v.id == keep) {
      v.surface = Surface::annulus();
      v.circles = {c1, c2};
    }
  }
  std::erase_if(out.vertebrae, [&](const Vertebra& v) { return v.id == drop; });
  require_valid(out);
  return out;
}

namespace {

SpinalOpenBook fiber_sum_ordered(const SpinalOpenBook& sob, PaperId j0, PaperId j1,
                                 const std::vector<int>& ident) {
  const PaperComponent& p0 = *sob.find_paper(j0);
  const PaperComponent& p1 = *sob.find_paper(j1);
  const int b = p0.page.boundary();

  // Attachment points (side, label): side 0 is j0, side 1 is j1.
  std::vector<int> inv_ident(b + 1);
  for (int l = 1; l <= b; ++l) inv_ident[ident[l - 1]] = l;
  const std::vector<int>* sigma[2] = {&p0.sigma, &p1.sigma};
  auto point = [b](int side, int label) { return side * b + label - 1; };
  auto succ = [&](int q) {
    const int side = q / b;
    return point(side, (*sigma[side])[q % b]);
  };
  auto across = [&](int q) {
    const int side = q / b;
    const int label = q % b + 1;
    return side == 0 ? point(1, ident[label - 1]) : point(0, inv_ident[label]);
  };

  // Old circle of each attachment point.
  std::vector<SpineCircleId> old_circle(2 * b);
  for (int side = 0; side < 2; ++side) {
    for (const auto& o : (side == 0 ? p0 : p1).orbits) {
      for (int l : o.labels) old_circle[point(side, l)] = std::get<SpineCircleId>(o.target);
    }
  }

  // New boundary circles: follow an old circle to the next attachment point,
  // then cross the band there.
  std::vector<int> new_circle(2 * b, -1);
  int circle_count = 0;
  for (int start = 0; start < 2 * b; ++start) {
    if (new_circle[start] >= 0) continue;
    for (int q = start; new_circle[q] < 0; q = across(succ(q))) new_circle[q] = circle_count;
    ++circle_count;
  }

  // Vertebrae joined by the bands.
  std::map<VertebraId, VertebraId> parent;
  for (const auto& v : sob.vertebrae) parent[v.id] = v.id;
  std::function<VertebraId(VertebraId)> find = [&](VertebraId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (int l = 1; l <= b; ++l) {
    const VertebraId a = *sob.vertebra_of(old_circle[point(0, l)]);
    const VertebraId c = *sob.vertebra_of(old_circle[point(1, ident[l - 1])]);
    const VertebraId ra = find(a);
    const VertebraId rc = find(c);
    if (ra != rc) parent[std::max(ra, rc)] = std::min(ra, rc);
  }
  std::map<VertebraId, int> bands;
  for (int l = 1; l <= b; ++l) ++bands[find(*sob.vertebra_of(old_circle[point(0, l)]))];

  int next_circle_id = 0;
  for (const auto& v : sob.vertebrae) {
    for (auto c : v.circles) next_circle_id = std::max(next_circle_id, c.value + 1);
  }
  std::vector<SpineCircleId> new_ids(circle_count);
  for (int i = 0; i < circle_count; ++i) new_ids[i] = SpineCircleId{next_circle_id + i};

  std::set<SpineCircleId> consumed(old_circle.begin(), old_circle.end());
  std::map<VertebraId, Vertebra> merged;
  std::map<VertebraId, int> euler;
  for (const auto& v : sob.vertebrae) {
    const VertebraId root = find(v.id);
    auto& m = merged[root];
    m.id = root;
    euler[root] += v.surface.euler();
    for (auto c : v.circles) {
      if (!consumed.count(c)) m.circles.push_back(c);
    }
  }
  for (int i = 0; i < circle_count; ++i) {
    int q = 0;
    while (new_circle[q] != i) ++q;
    merged[find(*sob.vertebra_of(old_circle[q]))].circles.push_back(new_ids[i]);
  }

  SpinalOpenBook out;
  out.generalized = sob.generalized;
  out.boundary_tori = sob.boundary_tori;
  for (const auto& v : sob.vertebrae) {
    if (find(v.id) != v.id) continue;
    Vertebra m = merged[v.id];
    const int chi = euler[v.id] - bands[v.id];
    const int boundary = static_cast<int>(m.circles.size());
    if ((2 - chi - boundary) < 0 || (2 - chi - boundary) % 2 != 0) {
      throw InternalInconsistency("fiber sum produced a non-surface vertebra");
    }
    m.surface = Surface::orientable((2 - chi - boundary) / 2, boundary);
    out.vertebrae.push_back(std::move(m));
  }

  // Monodromy: sigma0 first, then sigma1 carried back through ident.
  PaperComponent sum;
  sum.id = std::min(j0, j1);
  sum.page = p0.page;
  sum.sigma.resize(b);
  for (int l = 1; l <= b; ++l) sum.sigma[l - 1] = inv_ident[p1.sigma[ident[p0.sigma[l - 1] - 1] - 1]];
  for (const auto& cycle : permutation_cycles(sum.sigma)) {
    sum.orbits.push_back({cycle, new_ids[new_circle[point(0, cycle.front())]]});
  }
  for (const auto& p : sob.papers) {
    if (p.id == sum.id) {
      out.papers.push_back(sum);
    } else if (p.id != j0 && p.id != j1) {
      out.papers.push_back(p);
    }
  }

  auto report = validate(out);
  if (!report.ok()) {
    throw InternalInconsistency(std::string("fiber sum result is inconsistent: ") +
                                InvalidBook(report).what());
  }
  return out;
}

}  // namespace

SpinalOpenBook fiber_sum_pages(const SpinalOpenBook& sob, PaperId j0, PaperId j1,
                               const std::vector<int>& ident, FiberSumOrder order) {
  require_valid(sob);
  if (j0 == j1) throw PreconditionError("fiber sum of a paper component with itself is not supported");
  const PaperComponent* p0 = sob.find_paper(j0);
  const PaperComponent* p1 = sob.find_paper(j1);
  if (p0 == nullptr || p1 == nullptr) throw PreconditionError("fiber sum: unknown paper id");
  if (!same_type(p0->page, p1->page)) {
    throw PreconditionError("fiber sum: page types differ (" + p0->page.to_string() + " vs " +
                            p1->page.to_string() + ")");
  }
  const int b = p0->page.boundary();
  if (b < 1) throw PreconditionError("fiber sum needs pages with boundary");
  if (!is_permutation_of(ident, b)) {
    throw PreconditionError("fiber sum: ident is not a bijection of 1.." + std::to_string(b));
  }
  for (const auto* p : {p0, p1}) {
    for (const auto& o : p->orbits) {
      if (!std::holds_alternative<SpineCircleId>(o.target)) {
        throw PreconditionError("fiber sum: paper " + std::to_string(p->id.value) +
                                " reaches a boundary torus");
      }
    }
  }
  if (order == FiberSumOrder::FirstThenSecond) return fiber_sum_ordered(sob, j0, j1, ident);
  std::vector<int> inverse(b);
  for (int l = 1; l <= b; ++l) inverse[ident[l - 1] - 1] = l;
  return fiber_sum_ordered(sob, j1, j0, inverse);
}

}  // namespace spinal
