#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

#include "braidwire/germ.hpp"
#include "braidwire/wiring.hpp"

namespace braidwire {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Every intersection is marked; free_points adds extra marked points per
// component.
struct Arrangement {
  WiringDiagram diagram;
  std::map<std::string, int> free_points;
};

struct IncidenceMatrix {
  std::vector<std::string> rows;  // components, first-appearance order
  // One label per column: "I[3,4]@2" for the intersection at expanded
  // element 2, "free:A" for a free point.
  std::vector<std::string> columns;
  std::size_t intersection_columns = 0;
  std::vector<std::vector<int>> entries;  // rows x columns
};

// Throws ValidationError on an invalid diagram and Error on a negative or
// unknown free-point entry.
IncidenceMatrix incidence(const Arrangement& a);
std::map<std::string, int> weights(const Arrangement& a);
std::size_t point_count(const Arrangement& a);

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V = D
  std::size_t rank = 0;
  std::vector<mpz_class> diagonal() const;  // the nonzero d_i
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
// Fraction-free elimination; square matrices only.
mpz_class determinant(const IntMatrix& m);
// Exact over the integers. Every call re-checks U*M*V = D, |det U| =
// |det V| = 1 and the divisibility chain, throwing VerificationFailure.
SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyReport {
  int b1 = 0;  // by hypothesis (rational singularity), not computed
  std::size_t b2 = 0;
  std::vector<mpz_class> h1_torsion;  // invariant factors > 1
  std::size_t h1_free_rank = 0;       // disks - rank
  std::size_t points = 0;
  std::size_t disks = 0;
  std::size_t rank = 0;
  std::map<std::string, int> weights;
};

HomologyReport homology(const Arrangement& a);

struct QhdVerdict {
  bool qhd = false;
  std::vector<std::string> reasons;  // one per failed condition
  HomologyReport report;
};

// Throws Error when the component names differ from the germ's, and when a
// germ-weight-matching arrangement has an incidence map of deficient rank.
QhdVerdict qhd_check(const Arrangement& a, const GermData& g);

nlohmann::json incidence_to_json(const IncidenceMatrix& m);
nlohmann::json homology_to_json(const HomologyReport& r);
nlohmann::json verdict_to_json(const QhdVerdict& v);

}  // namespace braidwire
