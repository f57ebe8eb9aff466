#pragma once

#include "tfano/divpolytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfano {

using AutElement = Witness;

// All (F, φ) with F(φ*S) ~ S; translations as found by all_equivalences.
std::vector<AutElement> automorphism_group(const FDivisor& s);
// apply b first, then a
AutElement compose(const AutElement& a, const AutElement& b);
// index of the element with the same (F, φ), if present
std::optional<std::size_t> find_element(const std::vector<AutElement>& g, const IntMatrix& F, const PointMap& phi);
bool is_symmetric(const FDivisor& s);
bool is_symmetric(const std::vector<AutElement>& g, std::size_t rank);

enum class KE { Yes, No, Unknown };
struct KEVerdict {
  KE status = KE::Unknown;
  int criterion = 0;  // 1, 2 or 3 when Yes
  std::string reason;
  RatVec futaki;
  bool symmetric = false;
};
KEVerdict ke_status(const FDivisor& s, const DivisorialPolytope& psi);
std::string to_string(KE k);

}  // namespace tfano
