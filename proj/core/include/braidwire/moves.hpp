#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "braidwire/braid.hpp"
#include "braidwire/wiring.hpp"

namespace braidwire {

enum class Guarantee { WORD, EXACT, CONJ };
enum class Direction { Forward, Backward };

const char* to_string(Guarantee g);
Guarantee guarantee_from_string(const std::string& s);

struct VariantInfo {
  int index = 0;
  Guarantee guarantee = Guarantee::WORD;
  std::vector<std::string> params;  // names of params[1..]
  std::string pattern;              // "lhs <-> rhs" in diagram notation
};

struct MoveKind {
  std::string id;    // "M1" .. "M17"
  std::string name;  // "COMMUTE", ...
  std::string description;
  Guarantee guarantee = Guarantee::WORD;  // catalog level
  std::vector<VariantInfo> variants;
};

const std::vector<MoveKind>& catalog();
const MoveKind& find_kind(const std::string& id);

// params[0] selects the variant; the rest are the variant's index params.
struct MoveInstance {
  std::string kind;
  std::size_t pos = 0;
  std::vector<int> params;
  Direction dir = Direction::Forward;

  bool operator==(const MoveInstance&) const = default;
  std::string to_string() const;
};

struct MoveResult {
  WiringDiagram diagram;
  Guarantee guarantee = Guarantee::WORD;
  // Present for CONJ steps: after = c^-1 * before * c on boundary braids.
  std::optional<BraidWord> conjugator;
  bool verified = false;
};

// Elements the instance replaces and what it writes instead, in the
// instance's direction. Throws NotApplicable with the failing predicate.
struct Rewrite {
  std::vector<Element> from;
  std::vector<Element> to;
  Guarantee guarantee = Guarantee::WORD;
  std::optional<BraidWord> conjugator;
};

Rewrite instantiate(const WiringDiagram& d, const MoveInstance& inst);

// Returns the reason the instance does not apply, or nullopt when it does.
std::optional<std::string> why_not_applicable(const WiringDiagram& d, const MoveInstance& inst);

std::vector<MoveInstance> list_applicable(const WiringDiagram& d, std::size_t position);

// Cached normal forms of a diagram's front and back braids, plus its
// boundary invariants. Lets scripts reuse the "after" side of one step as
// the "before" side of the next.
struct DiagramCertificate {
  NormalForm front;
  NormalForm back;
  BraidWord boundary_reduced;
  std::int64_t exponent_sum = 0;
  std::vector<int> cycle_type;
  LinkingMatrix linking;
};

DiagramCertificate certify(const WiringDiagram& d);

MoveResult apply(const WiringDiagram& d, const MoveInstance& inst, bool verify = true);
// As apply(), with the certificate of d given and the certificate of the
// result returned through `after` when verification ran.
MoveResult apply(const WiringDiagram& d, const MoveInstance& inst, bool verify,
                 const DiagramCertificate* before, DiagramCertificate* after);

struct TraceStep {
  MoveInstance move;
  std::string hash;  // diagram hash after the step
  Guarantee guarantee = Guarantee::WORD;
  std::optional<BraidWord> conjugator;
};

struct Trace {
  WiringDiagram initial;
  std::vector<TraceStep> steps;
  // Ordered product of the step conjugators; final boundary = c^-1 initial c.
  BraidWord conjugator;
  WiringDiagram final_diagram;
};

Trace run_script(const WiringDiagram& d, const std::vector<MoveInstance>& script);
bool verify_trace(const Trace& t);

nlohmann::json move_to_json(const MoveInstance& m);
MoveInstance move_from_json(const nlohmann::json& j);
nlohmann::json script_to_json(const std::vector<MoveInstance>& s);
std::vector<MoveInstance> script_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const Trace& t);
Trace trace_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json();

}  // namespace braidwire
