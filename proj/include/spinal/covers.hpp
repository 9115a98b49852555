#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinal/surface.hpp"

namespace spinal {

// One-line 0-based permutation of {0..k-1}. Products are read left to right:
// (x * y)(i) = y[x[i]].
using Permutation = std::vector<int>;

// Cycle type as a list of cycle lengths, sorted in non-increasing order.
using Partition = std::vector<int>;

Partition normalized(Partition p);
Partition cycle_type(const Permutation& p);

struct CoverSpec {
  Surface base;  // orientable, at least one boundary circle
  int degree = 1;
  // One cycle type per boundary circle of the base, each a partition of degree.
  std::vector<Partition> boundary_types;
  bool unbranched = true;
  bool require_connected = true;
  // When set, the total space must be this surface. Riemann-Hurwitz then fixes
  // the branching number to degree * euler(base) - euler(total).
  std::optional<Surface> total;
};

struct SearchBounds {
  int max_degree = 5;
  int max_genus = 3;
};

// Monodromy of a cover of a surface with boundary. Boundary and handle
// generators satisfy
//   c_1 * ... * c_b * [a_1,b_1] * ... * [a_g,b_g] * t_1 * ... * t_r = id
// with [a,b] = a * b * a^-1 * b^-1 and each t_j a transposition (a simple
// branch point).
struct CoverCertificate {
  std::vector<Permutation> boundary;
  std::vector<std::pair<Permutation, Permutation>> handles;
  std::vector<Permutation> branch;

  friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

struct CoverResult {
  bool exists = false;
  std::optional<CoverCertificate> certificate;
  // Total space when the certificate acts transitively.
  std::optional<Surface> cover_type;
  // Branching number of the certificate (number of simple branch points).
  int branching = 0;
};

// Decides existence of a (branched) cover with the prescribed boundary cycle
// types. The certificate returned is the lexicographically smallest one with
// the first boundary generator fixed to the canonical representative of its
// cycle type and the fewest branch points (or exactly the branching forced by
// spec.total). Throws SearchBoundExceeded past the bounds.
CoverResult exists_cover(const CoverSpec& spec, const SearchBounds& bounds = {});

// True iff euler(candidate_total) == k * euler(base).
bool riemann_hurwitz_unbranched_ok(const Surface& base, int k, const Surface& candidate_total);

// Checks that the certificate satisfies the surface-group relation, the
// boundary cycle types, and transitivity when the spec requires it.
bool certificate_satisfies(const CoverSpec& spec, const CoverCertificate& cert);

}  // namespace spinal
