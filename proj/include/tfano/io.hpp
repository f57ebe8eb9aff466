#pragma once

#include "tfano/divpolytope.hpp"

#include <json.hpp>

#include <string>

namespace tfano {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);
Json to_json(const Polyhedron& p);
Json to_json(const Cone& c);
Json to_json(const Fan& f);
Json to_json(const Subdivision& s);
Json to_json(const FDivisor& s);
Json to_json(const DivisorialPolytope& psi);

// `where` is a JSON-pointer-like path used in diagnostics
Rational rational_from_json(const Json& j, const std::string& where);
RatVec point_from_json(const Json& j, const std::string& where);
IntVec lattice_point_from_json(const Json& j, const std::string& where);
IntMatrix matrix_from_json(const Json& j, const std::string& where);
Polyhedron polyhedron_from_json(const Json& j, std::size_t dim, const std::string& where);
Subdivision subdivision_from_json(const Json& j, std::size_t dim, const std::string& where);
Fan fan_from_json(const Json& j, std::size_t dim, const std::string& where);
FDivisor fdivisor_from_json(const Json& j);
DivisorialPolytope divpolytope_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace tfano
