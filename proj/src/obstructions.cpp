#include "spinal/obstructions.hpp"

#include <algorithm>
#include <set>

namespace spinal {

Exactness ExactnessFlags::at(VertebraId id) const {
  auto it = flags.find(id);
  return it == flags.end() ? Exactness::Unknown : it->second;
}

ExactnessFlags ExactnessFlags::disk_rule(const SpinalOpenBook& sob) {
  ExactnessFlags out;
  for (const auto& v : sob.vertebrae) {
    out.flags[v.id] = v.surface.is_disk() ? Exactness::Exact : Exactness::Unknown;
  }
  return out;
}

ExactnessFlags ExactnessFlags::all(const SpinalOpenBook& sob, Exactness value) {
  ExactnessFlags out;
  for (const auto& v : sob.vertebrae) out.flags[v.id] = value;
  return out;
}

std::string SymmetryWitness::describe() const {
  switch (kind) {
    case Kind::BoundaryNonEmpty:
      return "manifold has boundary tori";
    case Kind::PageTypes:
      return "pages of paper " + std::to_string(paper_a.value) + " and paper " +
             std::to_string(paper_b.value) + " are not diffeomorphic";
    case Kind::Counts:
      return "vertebra " + std::to_string(vertebra.value) + ": count " +
             std::to_string(count_a) + " for paper " + std::to_string(paper_a.value) +
             ", count " + std::to_string(count_b) + " for paper " +
             std::to_string(paper_b.value);
  }
  return {};
}

int page_count_at(const SpinalOpenBook& sob, PaperId paper, VertebraId vertebra) {
  const PaperComponent* p = sob.find_paper(paper);
  if (p == nullptr) throw PreconditionError("unknown paper " + std::to_string(paper.value));
  int count = 0;
  for (const auto& orbit : p->orbits) {
    const auto* circle = std::get_if<SpineCircleId>(&orbit.target);
    if (circle != nullptr && sob.vertebra_of(*circle) == vertebra) count += orbit.size();
  }
  return count;
}

SymmetryResult is_symmetric(const SpinalOpenBook& sob) {
  if (sob.generalized) throw PreconditionError("symmetry undefined for generalized books");
  require_valid(sob);
  SymmetryResult out;
  if (!sob.boundary_tori.empty()) {
    out.witness = SymmetryWitness{SymmetryWitness::Kind::BoundaryNonEmpty, {}, {}, {}, 0, 0};
    return out;
  }
  if (sob.papers.empty()) {
    out.symmetric = true;
    return out;
  }
  const PaperComponent& first = sob.papers.front();
  for (const auto& p : sob.papers) {
    if (!same_type(p.page, first.page)) {
      out.witness = SymmetryWitness{SymmetryWitness::Kind::PageTypes, first.id, p.id, {}, 0, 0};
      return out;
    }
  }
  for (const auto& v : sob.vertebrae) {
    const int reference = page_count_at(sob, first.id, v.id);
    for (const auto& p : sob.papers) {
      const int c = page_count_at(sob, p.id, v.id);
      if (c != reference) {
        out.witness =
            SymmetryWitness{SymmetryWitness::Kind::Counts, first.id, p.id, v.id, reference, c};
        return out;
      }
    }
  }
  out.symmetric = true;
  return out;
}

bool brute_force_symmetry_oracle(const SpinalOpenBook& sob) {
  if (sob.generalized) throw PreconditionError("symmetry undefined for generalized books");
  for (const auto& p : sob.papers) {
    for (const auto& o : p.orbits) {
      if (std::holds_alternative<BoundaryTorusId>(o.target)) return false;
    }
  }
  if (!sob.boundary_tori.empty()) return false;

  // Count, label by label, which vertebra each page boundary component lies over.
  auto count = [&](const PaperComponent& p, const Vertebra& v) {
    int n = 0;
    for (int label = 1; label <= p.page.boundary(); ++label) {
      for (const auto& o : p.orbits) {
        if (std::find(o.labels.begin(), o.labels.end(), label) == o.labels.end()) continue;
        const auto* c = std::get_if<SpineCircleId>(&o.target);
        if (c != nullptr && std::find(v.circles.begin(), v.circles.end(), *c) != v.circles.end()) {
          ++n;
        }
      }
    }
    return n;
  };
  for (const auto& a : sob.papers) {
    for (const auto& b : sob.papers) {
      if (a.page.is_orientable() != b.page.is_orientable() ||
          a.page.genus() != b.page.genus() || a.page.boundary() != b.page.boundary()) {
        return false;
      }
      for (const auto& v : sob.vertebrae) {
        if (count(a, v) != count(b, v)) return false;
      }
    }
  }
  return true;
}

namespace {

struct Admissible {
  Surface base;
  std::vector<VertebraCover> covers;
  bool unbranched = true;
};

// Bases of genus 0..max_base_genus that pass Riemann-Hurwitz and carry the
// required covers for every vertebra.
std::vector<Admissible> admissible_bases(const SpinalOpenBook& sob, int max_base_genus,
                                         const SearchBounds& bounds) {
  std::vector<Admissible> out;
  const int b0 = static_cast<int>(sob.papers.size());
  if (b0 == 0) return out;

  std::vector<int> degree;
  for (const auto& v : sob.vertebrae) degree.push_back(page_count_at(sob, sob.papers[0].id, v.id));

  for (int g0 = 0; g0 <= max_base_genus; ++g0) {
    const Surface base = Surface::orientable(g0, b0);
    bool feasible = true;
    for (std::size_t i = 0; i < sob.vertebrae.size(); ++i) {
      if (sob.vertebrae[i].surface.euler() > degree[i] * base.euler()) feasible = false;
    }
    if (!feasible) break;  // euler(base) only decreases with the genus

    Admissible candidate{base, {}, true};
    bool all_exist = true;
    for (std::size_t i = 0; i < sob.vertebrae.size() && all_exist; ++i) {
      const Vertebra& v = sob.vertebrae[i];
      CoverSpec spec;
      spec.base = base;
      spec.degree = degree[i];
      spec.unbranched = false;
      spec.require_connected = true;
      spec.total = v.surface;
      for (const auto& p : sob.papers) {
        Partition type;
        for (const auto& o : p.orbits) {
          const auto* c = std::get_if<SpineCircleId>(&o.target);
          if (c != nullptr && sob.vertebra_of(*c) == v.id) type.push_back(o.size());
        }
        spec.boundary_types.push_back(normalized(std::move(type)));
      }
      CoverResult result = exists_cover(spec, bounds);
      if (!result.exists) {
        all_exist = false;
        break;
      }
      if (result.branching != 0) candidate.unbranched = false;
      candidate.covers.push_back({v.id, std::move(spec), std::move(result)});
    }
    if (all_exist) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace

UniformResult is_uniform(const SpinalOpenBook& sob, int max_base_genus,
                         const SearchBounds& bounds) {
  UniformResult out;
  if (!is_symmetric(sob).symmetric) return out;
  auto bases = admissible_bases(sob, max_base_genus, bounds);
  if (bases.empty()) return out;
  auto chosen = std::find_if(bases.begin(), bases.end(), [](const Admissible& a) {
    return a.unbranched;
  });
  if (chosen == bases.end()) chosen = bases.begin();
  out.uniform = true;
  out.base = chosen->base;
  out.assignments = std::move(chosen->covers);
  return out;
}

AmenabilityResult is_lefschetz_amenable(const SpinalOpenBook& sob, int max_base_genus,
                                        const SearchBounds& bounds) {
  AmenabilityResult out;
  if (!is_symmetric(sob).symmetric) return out;
  auto bases = admissible_bases(sob, max_base_genus, bounds);
  if (bases.empty()) return out;
  out.uniform = true;
  for (const auto& a : bases) {
    for (const auto& c : a.covers) {
      if (c.result.branching != 0) {
        out.branched_base = a.base;
        out.branched_vertebra = c.vertebra;
        out.branching = c.result.branching;
        return out;
      }
    }
  }
  out.amenable = true;
  return out;
}

std::optional<TorsionWitness> find_planar_torsion(const SpinalOpenBook& sob,
                                                  const ExactnessFlags& flags) {
  if (sob.generalized) throw PreconditionError("planar torsion undefined for generalized books");
  if (is_symmetric(sob).symmetric) return std::nullopt;

  std::optional<TorsionWitness> best;
  for (PaperId id : interior_paper_components(sob)) {
    const PaperComponent& p = *sob.find_paper(id);
    if (!p.page.is_orientable() || p.page.genus() != 0 || p.page.boundary() < 1) continue;
    TorsionWitness w;
    w.order = p.page.boundary() - 1;
    w.piece = id;
    std::set<VertebraId> adjacent;
    for (const auto& o : p.orbits) {
      if (const auto* c = std::get_if<SpineCircleId>(&o.target)) {
        if (auto v = sob.vertebra_of(*c)) adjacent.insert(*v);
      }
    }
    w.adjacent_spines.assign(adjacent.begin(), adjacent.end());
    const bool disks = std::all_of(adjacent.begin(), adjacent.end(), [&](VertebraId v) {
      return sob.find_vertebra(v)->surface.is_disk();
    });
    const bool exact = std::all_of(adjacent.begin(), adjacent.end(), [&](VertebraId v) {
      return flags.at(v) == Exactness::Exact;
    });
    w.separating = disks   ? Separation::FullySeparatingByDiskRule
                   : exact ? Separation::OmegaSeparating
                           : Separation::Unknown;
    if (!best || w.order < best->order || (w.order == best->order && w.piece < best->piece)) {
      best = std::move(w);
    }
  }
  return best;
}

std::vector<Verdict> verdict(const SpinalOpenBook& sob, const ExactnessFlags& flags) {
  std::vector<Verdict> out;
  const auto torsion = find_planar_torsion(sob, flags);
  if (!torsion) return out;
  auto emit = [&](VerdictKind kind) { out.push_back({kind, torsion, citation_for(kind)}); };

  const bool separating = torsion->separating != Separation::Unknown;
  emit(VerdictKind::NotStronglyFillable);
  if (separating) emit(VerdictKind::NotWeaklyFillableForThisClass);
  if (torsion->separating == Separation::FullySeparatingByDiskRule || torsion->order == 0) {
    emit(VerdictKind::NotWeaklyFillable);
  }
  if (torsion->order == 0) emit(VerdictKind::Overtwisted);
  emit(VerdictKind::NoNonSeparatingContactEmbedding);
  emit(VerdictKind::NoDisconnectedSemifilling);
  return out;
}

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::Exact: return "Exact";
    case Exactness::NotExact: return "NotExact";
    case Exactness::Unknown: return "Unknown";
  }
  return {};
}

std::string to_string(Separation s) {
  switch (s) {
    case Separation::OmegaSeparating: return "OmegaSeparating";
    case Separation::FullySeparatingByDiskRule: return "FullySeparatingByDiskRule";
    case Separation::Unknown: return "Unknown";
  }
  return {};
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::NotStronglyFillable: return "NotStronglyFillable";
    case VerdictKind::NotWeaklyFillableForThisClass: return "NotWeaklyFillableForThisClass";
    case VerdictKind::NotWeaklyFillable: return "NotWeaklyFillable";
    case VerdictKind::Overtwisted: return "Overtwisted";
    case VerdictKind::NoNonSeparatingContactEmbedding: return "NoNonSeparatingContactEmbedding";
    case VerdictKind::NoDisconnectedSemifilling: return "NoDisconnectedSemifilling";
  }
  return {};
}

std::string citation_for(VerdictKind v) {
  switch (v) {
    case VerdictKind::NotStronglyFillable:
      return "planar torsion: if (M,xi) has planar torsion, then it is not strongly fillable";
    case VerdictKind::NotWeaklyFillableForThisClass:
      return "planar torsion: Omega-separating planar torsion admits no weak filling with "
             "omega|TM cohomologous to Omega";
    case VerdictKind::NotWeaklyFillable:
      return "planar torsion: not weakly fillable whenever it has fully separating planar "
             "torsion; overtwisted manifolds are not weakly fillable";
    case VerdictKind::Overtwisted:
      return "overtwistedness: overtwisted if and only if it has planar 0-torsion";
    case VerdictKind::NoNonSeparatingContactEmbedding:
      return "non-separating embeddings: no closed symplectic 4-manifold admits a "
             "non-separating embedding (Omega = 0 case)";
    case VerdictKind::NoDisconnectedSemifilling:
      return "semifillings: admits no weak semifilling with disconnected boundary for which "
             "the partially planar domain is separating";
  }
  return {};
}

}  // namespace spinal
