#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinal/obstructions.hpp"
#include "spinal/sob.hpp"

namespace spinal {

struct Region {
  Surface surface;         // orientable, one boundary circle per side
  std::vector<int> sides;  // side ids, globally unique

  friend bool operator==(const Region&, const Region&) = default;
};

// A curve with an annular neighborhood. The reversal bit is set when the
// orientations chosen on the two adjacent regions are opposite across it.
struct TwoSidedCurve {
  int side_a = 0;
  int side_b = 0;
  bool orientation_reversing_gluing = true;

  friend bool operator==(const TwoSidedCurve&, const TwoSidedCurve&) = default;
};

// A curve whose neighborhood is a Moebius band; its complement has one side.
struct OneSidedCurve {
  int side = 0;

  friend bool operator==(const OneSidedCurve&, const OneSidedCurve&) = default;
};

using Curve = std::variant<TwoSidedCurve, OneSidedCurve>;

struct MulticurveData {
  bool base_orientable = true;
  std::vector<Region> regions;
  std::vector<Curve> curves;
  std::optional<int> euler_number;  // carried, never consumed

  friend bool operator==(const MulticurveData&, const MulticurveData&) = default;
};

// Problems with the data, empty when valid. Checks side bookkeeping, that the
// regions glue to a connected base, and that base_orientable agrees with the
// gluings.
std::vector<std::string> check_multicurve(const MulticurveData& mc);

// Whether the base glued from the regions is orientable.
bool glued_base_orientable(const MulticurveData& mc);

// Curves with both sides on the same region, as indices into mc.curves.
std::vector<int> self_glued_curves(const MulticurveData& mc);

bool inverts_orientations(const MulticurveData& mc);

// Vertebra i is region i with circle ids equal to its side ids; paper j is
// curve j with annulus pages.
SpinalOpenBook build_sob(const MulticurveData& mc);

// Planar torsion read off the number of regions and the orientability of the
// base: at least three regions, or two regions on a non-orientable base.
bool direct_torsion_criterion(const MulticurveData& mc);

struct CircleBundleReport {
  bool torsion = false;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
};

// Runs the direct criterion and the general engine on build_sob(mc) with the
// disk rule; throws InternalInconsistency if they disagree.
CircleBundleReport circle_bundle_verdicts(const MulticurveData& mc);

}  // namespace spinal
