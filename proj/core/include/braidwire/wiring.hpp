#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace braidwire {

enum class ElementType { I, X, T, TN, S };

// One diagram element. Field use by type:
//   I(i,j)    multipoint on positions i..j          a=i b=j
//   X(i,j,k)  grid, top block i..j, bottom j+1..k    a=i b=j c=k
//   T(i)      tangency of positions i, i+1           a=i
//   TN(a,b)   tangency nest on a..b                  a, b
//   S(i,+-1)  braid letter                           a=i sign
struct Element {
  ElementType type = ElementType::S;
  int a = 0;
  int b = 0;
  int c = 0;
  int sign = 1;

  static Element I(int i, int j) { return {ElementType::I, i, j, 0, 1}; }
  static Element X(int i, int j, int k) { return {ElementType::X, i, j, k, 1}; }
  static Element T(int i) { return {ElementType::T, i, 0, 0, 1}; }
  static Element TN(int a, int b) { return {ElementType::TN, a, b, 0, 1}; }
  static Element S(int i, int sign) { return {ElementType::S, i, 0, 0, sign}; }

  // Lowest and highest strand position the element touches.
  int low() const;
  int high() const;
  bool is_intersection() const { return type == ElementType::I; }

  std::string to_string() const;
  bool operator==(const Element&) const = default;
};

struct WiringDiagram {
  int strands = 1;
  // chart[p-1] is the component of the strand at left-edge position p.
  std::vector<std::string> chart;
  std::vector<Element> elements;

  bool operator==(const WiringDiagram&) const = default;
};

struct Violation {
  static constexpr std::size_t kChart = static_cast<std::size_t>(-1);
  std::size_t element = kChart;  // top-level element index, or kChart
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const WiringDiagram& d);
// Throws ValidationError with the report summary when d is invalid.
void require_valid(const WiringDiagram& d);

// X and TN replaced by their canonical I / T / S expansions.
std::vector<Element> expand_element(const Element& e);
WiringDiagram expand_macros(const WiringDiagram& d);

struct PositionState {
  // perm[p-1] = left-edge strand now at position p.
  std::vector<int> perm;
  std::vector<std::string> comp_at;
};

// Applies the position permutation of one element to an arrangement.
void apply_permutation(const Element& e, std::vector<int>& perm);
PositionState position_state(const WiringDiagram& d, std::size_t prefix_length);
// Component chart seen at the right edge of the diagram.
std::vector<std::string> right_chart(const WiringDiagram& d);

// Components in order of first appearance along the left-edge chart.
std::vector<std::string> component_names(const WiringDiagram& d);

// DSL. parse() expands power groups and checks syntax, chart coverage and
// index ranges; semantic checks live in validate().
WiringDiagram parse_diagram(std::string_view text);
std::string print_diagram(const WiringDiagram& d);

nlohmann::json diagram_to_json(const WiringDiagram& d);
WiringDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);

// Digest of the canonical print.
std::string diagram_hash(const WiringDiagram& d);

}  // namespace braidwire
