#pragma once

#include "tfano/io.hpp"

#include <string>

namespace testdata {

inline std::string path(const std::string& entry, const std::string& file) {
  return std::string(TEST_DATA) + "/" + entry + "/" + file;
}
inline tfano::FDivisor fdivisor(const std::string& entry) {
  return tfano::fdivisor_from_json(tfano::read_json_file(path(entry, "fdivisor.json")));
}
inline tfano::DivisorialPolytope divpolytope(const std::string& entry) {
  return tfano::divpolytope_from_json(tfano::read_json_file(path(entry, "divpolytope.json")));
}

}  // namespace testdata
