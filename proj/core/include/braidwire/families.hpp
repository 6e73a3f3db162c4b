#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "braidwire/germ.hpp"
#include "braidwire/homology.hpp"
#include "braidwire/moves.hpp"

namespace braidwire {

struct FamilyDiagram {
  Arrangement arrangement;
  std::string provenance;  // "scott", "qhd" or "user"
  bool experimental = false;
  // For generated QHD diagrams: boundary = c^-1 * (Scott boundary) * c.
  BraidWord boundary_witness;
};

// Throws GateFailure naming the first mismatching weight or pair. For a QHD
// candidate, qhd_check must also hold.
void check_gates(const Arrangement& a, const GermData& g, bool require_qhd);

// Scott deformation of the decorated germ of G_{k,1}, m = k+7:
//   TN[1,2m] I[m+1+e,2m-1+e] (I[m+1,2m])^(m-4) I[1,2m],  e = m mod 2.
// Component c_j owns left-edge strands j and 2m+1-j; the red one is the
// component missed by the sub-multipoint.
FamilyDiagram scott_diagram(int k);
// The Scott wiring with the sub-multipoint placed by the given e and the
// chart kept for e = m mod 2. Exposed so tests can check that the other
// placement fails the gates.
WiringDiagram scott_wiring(int k, int e);

// QHD arrangement of G_{k,1}. For m even this is the end point of
// qhd_script(k) and the boundary witness is trivial. For m odd there is no
// script: the diagram drops the leading braiding, its boundary witness is
// the full twist, and the branch refuses to run unless allow_experimental
// is set. Both branches must pass the gates and the witness check.
FamilyDiagram qhd_diagram(int k, bool allow_experimental = false);

// Moves taking scott_diagram(k) to qhd_diagram(k); m = k+7 must be even.
std::vector<MoveInstance> qhd_script(int k);

struct Signature {
  // One profile per intersection: (component, strands) pairs, sorted.
  std::vector<std::vector<std::pair<std::string, int>>> profiles;  // sorted
  std::vector<std::pair<std::string, int>> weights;
  std::vector<std::pair<std::string, int>> free_points;

  bool operator==(const Signature&) const = default;
};

Signature combinatorial_signature(const Arrangement& a);

nlohmann::json germ_to_json(const GermData& g);
nlohmann::json signature_to_json(const Signature& s);

}  // namespace braidwire
