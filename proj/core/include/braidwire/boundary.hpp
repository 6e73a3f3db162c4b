#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "braidwire/braid.hpp"
#include "braidwire/wiring.hpp"

namespace braidwire {

// Contribution table, applied over the macro expansion:
//   front: I(i,j) -> Delta_{i,j},    T -> nothing,       s -> s
//   back:  I(i,j) -> Delta_{i,j}^-1, T(i) -> sigma_i^-1, s -> s
BraidWord front(const WiringDiagram& d);
BraidWord back(const WiringDiagram& d);
// invert(back) * front, based at the right edge of the diagram.
BraidWord boundary_braid(const WiringDiagram& d);

struct BoundaryData {
  BraidWord front;
  BraidWord back;
  BraidWord boundary;
  Permutation permutation;
  std::vector<int> cycle_type;
  std::int64_t exponent_sum = 0;
  // Uses the component chart at the right edge.
  LinkingMatrix linking;
  std::string nf_hash;
};

BoundaryData boundary_invariants(const WiringDiagram& d);

nlohmann::json linking_to_json(const LinkingMatrix& lm);
nlohmann::json boundary_to_json(const BoundaryData& b);

}  // namespace braidwire
