#pragma once

#include <string>

namespace spinal {

// Diffeomorphism type of a compact surface: orientability, genus (or number of
// crosscaps) and number of boundary circles. No embedding data is kept.
class Surface {
 public:
  Surface() = default;

  static Surface orientable(int genus, int boundary);
  static Surface nonorientable(int crosscaps, int boundary);

  static Surface disk() { return orientable(0, 1); }
  static Surface annulus() { return orientable(0, 2); }
  static Surface pants() { return orientable(0, 3); }

  bool is_orientable() const { return orientable_; }
  // Genus of an orientable surface; 0 for non-orientable ones.
  int genus() const { return genus_; }
  // Number of crosscaps of a non-orientable surface; 0 for orientable ones.
  int crosscaps() const { return crosscaps_; }
  int boundary() const { return boundary_; }

  int euler() const;

  bool is_disk() const { return orientable_ && genus_ == 0 && boundary_ == 1; }

  // "(g1,b2)" or "(c1,b1)" for non-orientable surfaces.
  std::string to_string() const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  bool orientable_ = true;
  int genus_ = 0;
  int crosscaps_ = 0;
  int boundary_ = 0;
};

inline int euler(const Surface& s) { return s.euler(); }

// True iff the two surfaces are diffeomorphic.
bool same_type(const Surface& a, const Surface& b);

// Connected orientable surface with the given Euler characteristic and
// boundary count; throws if the pair is not realizable.
Surface orientable_from_euler(int euler, int boundary);

}  // namespace spinal
