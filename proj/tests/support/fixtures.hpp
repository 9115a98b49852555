#pragma once

#include <string>

#include "spinal/io.hpp"

namespace spinal::testing {

inline std::string zoo_path(const std::string& name) { return std::string(SPINAL_ZOO_DIR) + "/" + name; }

inline SpinalOpenBook zoo_book(const std::string& name) { return book_from_json(read_json_file(zoo_path(name))); }

inline MulticurveData zoo_multicurve(const std::string& name) {
  return multicurve_from_json(read_json_file(zoo_path(name)));
}

inline LefschetzDescriptor zoo_descriptor(const std::string& name) {
  return descriptor_from_json(read_json_file(zoo_path(name)));
}

}  // namespace spinal::testing
