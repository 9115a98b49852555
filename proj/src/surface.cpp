#include "spinal/surface.hpp"

#include "spinal/error.hpp"

namespace spinal {

Surface Surface::orientable(int genus, int boundary) {
  if (genus < 0 || boundary < 0) {
    throw PreconditionError("surface genus and boundary must be non-negative");
  }
  Surface s;
  s.orientable_ = true;
  s.genus_ = genus;
  s.boundary_ = boundary;
  return s;
}

Surface Surface::nonorientable(int crosscaps, int boundary) {
  if (crosscaps < 1 || boundary < 0) {
    throw PreconditionError("a non-orientable surface needs at least one crosscap");
  }
  Surface s;
  s.orientable_ = false;
  s.crosscaps_ = crosscaps;
  s.boundary_ = boundary;
  return s;
}

int Surface::euler() const {
  if (orientable_) return 2 - 2 * genus_ - boundary_;
  return 2 - crosscaps_ - boundary_;
}

std::string Surface::to_string() const {
  if (orientable_) {
    return "(g" + std::to_string(genus_) + ",b" + std::to_string(boundary_) + ")";
  }
  return "(c" + std::to_string(crosscaps_) + ",b" + std::to_string(boundary_) + ")";
}

bool same_type(const Surface& a, const Surface& b) {
  return a.is_orientable() == b.is_orientable() && a.genus() == b.genus() &&
         a.crosscaps() == b.crosscaps() && a.boundary() == b.boundary();
}

Surface orientable_from_euler(int euler, int boundary) {
  const int twice_genus = 2 - euler - boundary;
  if (boundary < 0 || twice_genus < 0 || twice_genus % 2 != 0) {
    throw PreconditionError("no connected orientable surface has euler characteristic " +
                            std::to_string(euler) + " and " + std::to_string(boundary) +
                            " boundary circles");
  }
  return Surface::orientable(twice_genus / 2, boundary);
}

}  // namespace spinal
