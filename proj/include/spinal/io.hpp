#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "spinal/circle_bundles.hpp"
#include "spinal/covers.hpp"
#include "spinal/forms.hpp"
#include "spinal/lefschetz.hpp"
#include "spinal/obstructions.hpp"
#include "spinal/sob.hpp"

namespace spinal {

using Json = nlohmann::json;

// Malformed input: bad JSON or a document not matching the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

Json to_json(const Surface& s);
Surface surface_from_json(const Json& j);

Json to_json(const SpinalOpenBook& sob);
SpinalOpenBook book_from_json(const Json& j);

Json to_json(const MulticurveData& mc);
MulticurveData multicurve_from_json(const Json& j);

Json to_json(const LefschetzDescriptor& lf);
LefschetzDescriptor descriptor_from_json(const Json& j);

// {"default": "Exact" | "NotExact" | "Unknown" | "disk-rule", "vertebrae": {"<id>": flag}}
ExactnessFlags flags_from_json(const Json& j, const SpinalOpenBook& sob);
Json to_json(const ExactnessFlags& flags);

Json to_json(const TorsionWitness& w);
Json to_json(const Verdict& v);
Json to_json(const std::vector<Verdict>& verdicts);
Json to_json(const forms::CheckReport& report);
Json to_json(const CoverResult& result);
Json to_json(const ValidationReport& report);

// Dense zero-based ids in sorted order, orbits listed as cycles of sigma that
// start at their smallest label and sorted by it.
SpinalOpenBook canonicalize(const SpinalOpenBook& sob);

// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// A named example with the verdicts its pipeline must reproduce.
struct ZooEntry {
  std::string name;
  std::variant<SpinalOpenBook, MulticurveData, LefschetzDescriptor> data;
  std::vector<std::string> expected_verdicts;
  std::string citation;
};

// Reads dir/index.json; each entry names a file in dir and its kind ("book",
// "multicurve" or "lefschetz").
std::vector<ZooEntry> load_zoo(const std::string& dir);

// Books use the disk rule, multicurves go through circle_bundle_verdicts and
// descriptors are classified through boundary_sob.
std::vector<std::string> zoo_verdicts(const ZooEntry& entry);

}  // namespace spinal
