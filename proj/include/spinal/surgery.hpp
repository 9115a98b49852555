#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinal/sob.hpp"

namespace spinal {

struct CappedOrbit {
  PaperId paper;
  std::vector<int> labels;  // labels in the input book
  int cap_count = 0;

  friend bool operator==(const CappedOrbit&, const CappedOrbit&) = default;
};

// Combinatorial shadow of the handle Sigma_rem x D^2 attached by spine removal.
struct HandleRecord {
  std::vector<VertebraId> removed_vertebrae;
  std::vector<CappedOrbit> capped_orbits;
  int euler_delta_pages = 0;  // sum of cap counts

  friend bool operator==(const HandleRecord&, const HandleRecord&) = default;
};

inline constexpr const char* kClosedPagesNote =
    "closed pages present: a Giroux form cannot exist in this case";

struct SpineRemoval {
  SpinalOpenBook book;
  HandleRecord record;
  std::vector<std::string> notes;
};

// Deletes the vertebrae and caps every page boundary component over them with a
// disk. Surviving page labels are renumbered densely in their original order.
SpineRemoval spine_remove(const SpinalOpenBook& sob, const std::set<VertebraId>& ids);

// Replaces each disk vertebra by a boundary torus with framing 0.
SpinalOpenBook blow_up(const SpinalOpenBook& sob, const std::set<VertebraId>& ids);

// Replaces the disk vertebrae of c1 and c2 by one annulus vertebra carrying
// both circles. The merged vertebra keeps the smaller id.
SpinalOpenBook binding_sum(const SpinalOpenBook& sob, SpineCircleId c1, SpineCircleId c2);

enum class FiberSumOrder { FirstThenSecond, SecondThenFirst };

// Connected sum along pages of two paper components with diffeomorphic pages.
// ident[l - 1] is the label of the second page glued to label l of the first.
// One band is attached to the spine per page boundary component; the merged
// paper takes the smaller id. Throws InternalInconsistency if the result does
// not validate.
SpinalOpenBook fiber_sum_pages(const SpinalOpenBook& sob, PaperId j0, PaperId j1,
                               const std::vector<int>& ident,
                               FiberSumOrder order = FiberSumOrder::FirstThenSecond);

}  // namespace spinal
