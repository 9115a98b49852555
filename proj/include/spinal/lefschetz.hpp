#pragma once

#include <string>
#include <vector>

#include "spinal/covers.hpp"
#include "spinal/sob.hpp"

namespace spinal {

struct CriticalPoint {
  bool homologically_trivial = false;

  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

// Fiber boundary labels lying over one connected component of the horizontal
// boundary. That component covers the base with degree labels.size(); over
// boundary component j of the base it restricts to circles of degrees mults[j].
struct HorizontalGroup {
  std::vector<int> labels;
  Surface cover_total;
  std::vector<Partition> mults;

  int degree() const { return static_cast<int>(labels.size()); }

  friend bool operator==(const HorizontalGroup&, const HorizontalGroup&) = default;
};

struct LefschetzDescriptor {
  Surface base;
  Surface fiber;
  std::vector<CriticalPoint> critical_points;
  std::vector<HorizontalGroup> groups;

  friend bool operator==(const LefschetzDescriptor&, const LefschetzDescriptor&) = default;
};

// Problems with the descriptor, empty when valid. Each group must be realized
// by a connected unbranched cover of the base with the listed boundary data.
std::vector<std::string> check_descriptor(const LefschetzDescriptor& lf,
                                          const SearchBounds& bounds = {});

// Throws PreconditionError listing the problems found by check_descriptor.
void require_valid(const LefschetzDescriptor& lf, const SearchBounds& bounds = {});

bool is_allowable(const LefschetzDescriptor& lf);

// euler(base) * euler(fiber) + number of critical points.
int euler_total(const LefschetzDescriptor& lf);

// The spinal open book induced on the vertical and horizontal boundary: one
// vertebra per group, one paper component per boundary component of the base.
// Vertebra ids follow the group order; circle ids run over groups, then base
// boundary components, then parts.
SpinalOpenBook boundary_sob(const LefschetzDescriptor& lf, const SearchBounds& bounds = {});

}  // namespace spinal
