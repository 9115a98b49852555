#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinal/error.hpp"
#include "spinal/surface.hpp"

namespace spinal {

template <class Tag>
struct Id {
  int value = 0;
  friend auto operator<=>(const Id&, const Id&) = default;
};

using VertebraId = Id<struct VertebraTag>;
using PaperId = Id<struct PaperTag>;
using SpineCircleId = Id<struct SpineCircleTag>;
using BoundaryTorusId = Id<struct BoundaryTorusTag>;

// Where a cycle of page-boundary labels is attached: an interface torus over a
// boundary circle of some vertebra, or a boundary torus of the manifold.
using Target = std::variant<SpineCircleId, BoundaryTorusId>;

std::string to_string(const Target& target);

// Component of a vertebra: a compact oriented surface with nonempty boundary;
// the spine over it is the trivial circle bundle.
struct Vertebra {
  VertebraId id;
  Surface surface;
  std::vector<SpineCircleId> circles;  // one per boundary component

  friend bool operator==(const Vertebra&, const Vertebra&) = default;
};

// One cycle of the boundary permutation. Its size is the multiplicity of the
// page fibration at the attached torus.
struct Orbit {
  std::vector<int> labels;  // 1-based page boundary labels
  Target target;

  int size() const { return static_cast<int>(labels.size()); }

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

// A connected component of the paper: a mapping torus whose monodromy is
// recorded only through its action on the boundary components of the page.
struct PaperComponent {
  PaperId id;
  Surface page;
  std::vector<int> sigma;  // one-line permutation of 1..page.boundary()
  std::vector<Orbit> orbits;

  bool closed_pages() const { return page.boundary() == 0; }

  friend bool operator==(const PaperComponent&, const PaperComponent&) = default;
};

// A boundary torus of the manifold. The preferred meridian is (1, framing) in
// the basis where the page boundary class is (0, 1).
struct BoundaryTorus {
  BoundaryTorusId id;
  int framing = 0;

  friend bool operator==(const BoundaryTorus&, const BoundaryTorus&) = default;
};

struct SpinalOpenBook {
  std::vector<Vertebra> vertebrae;
  std::vector<PaperComponent> papers;
  std::vector<BoundaryTorus> boundary_tori;
  // Generalized books may contain paper components with closed pages.
  bool generalized = false;

  const Vertebra* find_vertebra(VertebraId id) const;
  const PaperComponent* find_paper(PaperId id) const;
  const BoundaryTorus* find_torus(BoundaryTorusId id) const;
  std::optional<VertebraId> vertebra_of(SpineCircleId circle) const;

  bool is_closed() const { return boundary_tori.empty(); }

  friend bool operator==(const SpinalOpenBook&, const SpinalOpenBook&) = default;
};

struct Violation {
  std::string code;  // e.g. "INC-1"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool contains(const std::string& code) const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Thrown by operations that require a valid book.
class InvalidBook : public Error {
 public:
  explicit InvalidBook(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Lists every violated incidence, permutation and surface invariant. Never
// throws on structurally well-formed input.
ValidationReport validate(const SpinalOpenBook& sob);

// Throws InvalidBook unless validate(sob) is empty.
void require_valid(const SpinalOpenBook& sob);

// Size of the unique orbit attached to the given circle or torus.
int multiplicity(const SpinalOpenBook& sob, const Target& target);

struct AdjacencyEdge {
  VertebraId vertebra;
  PaperId paper;
  SpineCircleId circle;
  int multiplicity = 0;

  friend bool operator==(const AdjacencyEdge&, const AdjacencyEdge&) = default;
};

// Bipartite vertebra/paper graph with one edge per spine-attached orbit.
struct Adjacency {
  std::vector<VertebraId> vertebrae;
  std::vector<PaperId> papers;
  std::vector<AdjacencyEdge> edges;
};

Adjacency adjacency(const SpinalOpenBook& sob);

// Paper components none of whose orbits reach a boundary torus.
std::vector<PaperId> interior_paper_components(const SpinalOpenBook& sob);

// Number of connected components of the book (vertebrae, papers and boundary
// tori joined by orbits).
int connected_components(const SpinalOpenBook& sob);

// Sum of the Euler characteristics of all vertebrae.
int spine_euler(const SpinalOpenBook& sob);

// Cycles of a 1-based one-line permutation, each starting at its smallest
// label, ordered by that label.
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& sigma);

// True iff sigma is a permutation of 1..n.
bool is_permutation_of(const std::vector<int>& sigma, int n);

}  // namespace spinal
