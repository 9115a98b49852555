#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinal/covers.hpp"
#include "spinal/sob.hpp"

namespace spinal {

enum class Exactness { Exact, NotExact, Unknown };

// Caller-supplied knowledge about whether the ambient closed 2-form is exact on
// each vertebra's spinal component. Missing entries read as Unknown.
struct ExactnessFlags {
  std::map<VertebraId, Exactness> flags;

  Exactness at(VertebraId id) const;

  // Disk vertebrae (solid tori) Exact, all others Unknown.
  static ExactnessFlags disk_rule(const SpinalOpenBook& sob);
  // Every vertebra gets the same flag.
  static ExactnessFlags all(const SpinalOpenBook& sob, Exactness value);
};

struct SymmetryWitness {
  enum class Kind { BoundaryNonEmpty, PageTypes, Counts };
  Kind kind = Kind::Counts;
  PaperId paper_a;
  PaperId paper_b;
  VertebraId vertebra;  // Counts only
  int count_a = 0;
  int count_b = 0;

  std::string describe() const;
};

struct SymmetryResult {
  bool symmetric = false;
  std::optional<SymmetryWitness> witness;
};

// Closed, all pages diffeomorphic, and every page meets each vertebra in the
// same number of boundary components. Throws PreconditionError on generalized
// books.
SymmetryResult is_symmetric(const SpinalOpenBook& sob);

// Direct enumeration of the same definition, sharing no code with is_symmetric.
bool brute_force_symmetry_oracle(const SpinalOpenBook& sob);

// Number of boundary components of one page of the given paper component that
// lie over the boundary of the given vertebra.
int page_count_at(const SpinalOpenBook& sob, PaperId paper, VertebraId vertebra);

struct VertebraCover {
  VertebraId vertebra;
  CoverSpec spec;
  CoverResult result;
};

struct UniformResult {
  bool uniform = false;
  std::optional<Surface> base;
  std::vector<VertebraCover> assignments;
};

// Searches a common base with one boundary circle per paper component and
// genus up to max_base_genus. Among admissible bases, one whose covers are all
// unbranched is preferred, otherwise the one of least genus.
UniformResult is_uniform(const SpinalOpenBook& sob, int max_base_genus,
                         const SearchBounds& bounds = {});

struct AmenabilityResult {
  bool amenable = false;
  bool uniform = false;
  // Set when some admissible base forces branching.
  std::optional<Surface> branched_base;
  std::optional<VertebraId> branched_vertebra;
  int branching = 0;
};

AmenabilityResult is_lefschetz_amenable(const SpinalOpenBook& sob, int max_base_genus,
                                        const SearchBounds& bounds = {});

enum class Separation { OmegaSeparating, FullySeparatingByDiskRule, Unknown };

struct TorsionWitness {
  int order = 0;
  PaperId piece;
  std::vector<VertebraId> adjacent_spines;
  Separation separating = Separation::Unknown;

  friend bool operator==(const TorsionWitness&, const TorsionWitness&) = default;
};

// Planar torsion of least order, ties broken by the smallest paper id. None
// for symmetric books.
std::optional<TorsionWitness> find_planar_torsion(const SpinalOpenBook& sob,
                                                  const ExactnessFlags& flags);

enum class VerdictKind {
  NotStronglyFillable,
  NotWeaklyFillableForThisClass,
  NotWeaklyFillable,
  Overtwisted,
  NoNonSeparatingContactEmbedding,
  NoDisconnectedSemifilling,
};

struct Verdict {
  VerdictKind kind;
  std::optional<TorsionWitness> witness;
  std::string citation;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::vector<Verdict> verdict(const SpinalOpenBook& sob, const ExactnessFlags& flags);

std::string to_string(Exactness e);
std::string to_string(Separation s);
std::string to_string(VerdictKind v);
std::string citation_for(VerdictKind v);

}  // namespace spinal
