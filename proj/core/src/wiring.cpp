#include "braidwire/wiring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidwire/digest.hpp"
#include "braidwire/error.hpp"

namespace braidwire {

int Element::low() const { return a; }

int Element::high() const {
  switch (type) {
    case ElementType::I:
    case ElementType::TN:
      return b;
    case ElementType::X:
      return c;
    case ElementType::T:
    case ElementType::S:
      return a + 1;
  }
  return a;
}

std::string Element::to_string() const {
  auto n = [](int v) { return std::to_string(v); };
  switch (type) {
    case ElementType::I:
      return "I[" + n(a) + "," + n(b) + "]";
    case ElementType::X:
      return "X[" + n(a) + "," + n(b) + "|" + n(b + 1) + "," + n(c) + "]";
    case ElementType::T:
      return "T[" + n(a) + "]";
    case ElementType::TN:
      return "TN[" + n(a) + "," + n(b) + "]";
    case ElementType::S:
      return "s" + n(a) + (sign < 0 ? "'" : "");
  }
  return "?";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    const auto& v = violations[k];
    if (k) os << "; ";
    if (v.element != Violation::kChart) os << "element " << v.element << ": ";
    os << v.message;
  }
  return os.str();
}

namespace {

// Range problems for a single element on n strands, empty when fine.
std::string range_problem(const Element& e, int n) {
  auto s = e.to_string();
  switch (e.type) {
    case ElementType::I:
      if (e.a < 1 || e.b > n || e.a >= e.b) return s + " needs 1 <= i < j <= " + std::to_string(n);
      break;
    case ElementType::X:
      if (e.a < 1 || e.c > n || e.a > e.b || e.b >= e.c)
        return s + " needs 1 <= i <= j < k <= " + std::to_string(n);
      break;
    case ElementType::T:
      if (e.a < 1 || e.a + 1 > n) return s + " needs 1 <= i < " + std::to_string(n);
      break;
    case ElementType::TN:
      if (e.a < 1 || e.b > n || e.a >= e.b) return s + " needs 1 <= a < b <= " + std::to_string(n);
      break;
    case ElementType::S:
      if (e.a < 1 || e.a + 1 > n) return s + " needs 1 <= i < " + std::to_string(n);
      if (e.sign != 1 && e.sign != -1) return s + " has a sign other than +-1";
      break;
  }
  return {};
}

}  // namespace

ValidationReport validate(const WiringDiagram& d) {
  ValidationReport r;
  const int n = d.strands;
  auto add = [&](std::size_t idx, std::string code, std::string msg) {
    r.violations.push_back({idx, std::move(code), std::move(msg)});
  };
  if (n < 1) {
    add(Violation::kChart, "strands", "strand count must be positive");
    return r;
  }
  if (static_cast<int>(d.chart.size()) != n) {
    add(Violation::kChart, "chart", "chart covers " + std::to_string(d.chart.size()) +
                                        " strands, expected " + std::to_string(n));
    return r;
  }
  for (int p = 0; p < n; ++p)
    if (d.chart[p].empty())
      add(Violation::kChart, "chart", "strand " + std::to_string(p + 1) + " has no component");

  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[p] = p + 1;
  auto comp = [&](int pos) -> const std::string& { return d.chart[perm[pos - 1] - 1]; };

  for (std::size_t idx = 0; idx < d.elements.size(); ++idx) {
    const Element& e = d.elements[idx];
    if (auto p = range_problem(e, n); !p.empty()) {
      add(idx, "range", p);
      continue;
    }
    if (e.type == ElementType::TN && (e.b - e.a + 1) % 2 != 0) {
      add(idx, "parity", e.to_string() + " spans an odd number of strands");
      continue;
    }
    for (const Element& x : expand_element(e)) {
      if (x.type == ElementType::T && comp(x.a) != comp(x.a + 1))
        add(idx, "tangency",
            e.to_string() + ": tangency T[" + std::to_string(x.a) + "] joins components " +
                comp(x.a) + " and " + comp(x.a + 1));
      apply_permutation(x, perm);
    }
  }
  return r;
}

void require_valid(const WiringDiagram& d) {
  auto r = validate(d);
  if (!r.ok()) throw ValidationError(r.summary());
}

std::vector<Element> expand_element(const Element& e) {
  std::vector<Element> out;
  switch (e.type) {
    case ElementType::X: {
      // X(i,j,k) = X(j,j,k) X(i,j-1,k-1); X(j,j,k) = I(j,j+1) ... I(k-1,k).
      for (int j = e.b, k = e.c; j >= e.a; --j, --k)
        for (int p = j; p < k; ++p) out.push_back(Element::I(p, p + 1));
      break;
    }
    case ElementType::TN: {
      const int half = (e.b - e.a + 1) / 2;
      const int c = e.a + half - 1;
      out.push_back(Element::T(c));
      for (int t = 1; t < half; ++t) {
        for (int s = 1; s <= half - t; ++s) {
          out.push_back(Element::S(c - s, -1));
          out.push_back(Element::S(c + s, -1));
        }
        out.push_back(Element::T(c));
      }
      break;
    }
    default:
      out.push_back(e);
  }
  return out;
}

WiringDiagram expand_macros(const WiringDiagram& d) {
  WiringDiagram out{d.strands, d.chart, {}};
  for (const auto& e : d.elements)
    for (const auto& x : expand_element(e)) out.elements.push_back(x);
  return out;
}

void apply_permutation(const Element& e, std::vector<int>& perm) {
  switch (e.type) {
    case ElementType::I:
      std::reverse(perm.begin() + (e.a - 1), perm.begin() + e.b);
      break;
    case ElementType::X:
      std::rotate(perm.begin() + (e.a - 1), perm.begin() + e.b, perm.begin() + e.c);
      break;
    case ElementType::T:
      break;
    case ElementType::TN:
      for (const auto& x : expand_element(e)) apply_permutation(x, perm);
      break;
    case ElementType::S:
      std::swap(perm[e.a - 1], perm[e.a]);
      break;
  }
}

PositionState position_state(const WiringDiagram& d, std::size_t prefix_length) {
  if (prefix_length > d.elements.size()) throw Error("prefix length beyond diagram");
  require_valid(d);
  PositionState st;
  st.perm.resize(d.strands);
  for (int p = 0; p < d.strands; ++p) st.perm[p] = p + 1;
  for (std::size_t k = 0; k < prefix_length; ++k) apply_permutation(d.elements[k], st.perm);
  st.comp_at.resize(d.strands);
  for (int p = 0; p < d.strands; ++p) st.comp_at[p] = d.chart[st.perm[p] - 1];
  return st;
}

std::vector<std::string> right_chart(const WiringDiagram& d) {
  return position_state(d, d.elements.size()).comp_at;
}

std::vector<std::string> component_names(const WiringDiagram& d) {
  std::vector<std::string> out;
  for (const auto& c : d.chart)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

nlohmann::json element_to_json(const Element& e) {
  switch (e.type) {
    case ElementType::I:
      return {{"type", "I"}, {"i", e.a}, {"j", e.b}};
    case ElementType::X:
      return {{"type", "X"}, {"i", e.a}, {"j", e.b}, {"k", e.c}};
    case ElementType::T:
      return {{"type", "T"}, {"i", e.a}};
    case ElementType::TN:
      return {{"type", "TN"}, {"i", e.a}, {"j", e.b}};
    case ElementType::S:
      return {{"type", "S"}, {"i", e.a}, {"sign", e.sign}};
  }
  return {};
}

Element element_from_json(const nlohmann::json& j) {
  try {
    const std::string t = j.at("type").get<std::string>();
    if (t == "I") return Element::I(j.at("i").get<int>(), j.at("j").get<int>());
    if (t == "X") return Element::X(j.at("i").get<int>(), j.at("j").get<int>(), j.at("k").get<int>());
    if (t == "T") return Element::T(j.at("i").get<int>());
    if (t == "TN") return Element::TN(j.at("i").get<int>(), j.at("j").get<int>());
    if (t == "S") return Element::S(j.at("i").get<int>(), j.at("sign").get<int>());
    throw Error("unknown element type '" + t + "'");
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed element JSON: ") + ex.what());
  }
}

nlohmann::json diagram_to_json(const WiringDiagram& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& name : component_names(d)) {
    std::vector<int> strands;
    for (int p = 0; p < static_cast<int>(d.chart.size()); ++p)
      if (d.chart[p] == name) strands.push_back(p + 1);
    comps.push_back({{"name", name}, {"strands", strands}});
  }
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : d.elements) elems.push_back(element_to_json(e));
  return {{"strands", d.strands}, {"comps", comps}, {"elements", elems}};
}

WiringDiagram diagram_from_json(const nlohmann::json& j) {
  WiringDiagram d;
  try {
    d.strands = j.at("strands").get<int>();
    if (d.strands < 1 || d.strands > 4096) throw Error("strand count out of range");
    d.chart.assign(d.strands, "");
    for (const auto& c : j.at("comps")) {
      const std::string name = c.at("name").get<std::string>();
      for (int p : c.at("strands").get<std::vector<int>>()) {
        if (p < 1 || p > d.strands) throw Error("component strand index out of range");
        if (!d.chart[p - 1].empty()) throw Error("strand " + std::to_string(p) + " listed twice");
        d.chart[p - 1] = name;
      }
    }
    for (int p = 0; p < d.strands; ++p)
      if (d.chart[p].empty()) throw Error("strand " + std::to_string(p + 1) + " has no component");
    for (const auto& e : j.at("elements")) d.elements.push_back(element_from_json(e));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed diagram JSON: ") + ex.what());
  }
  return d;
}

std::string diagram_hash(const WiringDiagram& d) { return sha256_hex(print_diagram(d)); }

}  // namespace braidwire
