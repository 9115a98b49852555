#pragma once

#include "spinal/covers.hpp"
#include "spinal/sob.hpp"

namespace spinal::testing {

// Answer of the exhaustive cover enumerator.
struct CoverOracle {
  bool exists = false;
  // Branching of the cheapest realization, or the branching forced by
  // spec.total. Meaningless when exists is false.
  int branching = 0;
};

// Enumerates every tuple (c_1..c_b, a_1, b_1, .., a_g, b_g) with c_j in the
// prescribed conjugacy class, without fixing any representative. Uses its own
// permutation code.
CoverOracle enumerate_covers(const CoverSpec& spec);

// Independent check of the surface-group relation, the boundary cycle types,
// that branch generators are transpositions, and transitivity when required.
bool oracle_certificate_ok(const CoverSpec& spec, const CoverCertificate& cert);

// Euler characteristic from first principles: vertices - edges + faces of the
// standard polygon model.
int euler_closed_form(bool orientable, int genus_or_crosscaps, int boundary);

}  // namespace spinal::testing
