#include "braidwire/boundary.hpp"

#include <nlohmann/json.hpp>

namespace braidwire {

namespace {

template <class F>
BraidWord collect(const WiringDiagram& d, F contribution) {
  require_valid(d);
  BraidWord w(d.strands);
  for (const auto& e : d.elements)
    for (const auto& x : expand_element(e)) contribution(x, w);
  return w;
}

}  // namespace

BraidWord front(const WiringDiagram& d) {
  return collect(d, [n = d.strands](const Element& x, BraidWord& w) {
    if (x.type == ElementType::I)
      w.append(half_twist(n, x.a, x.b));
    else if (x.type == ElementType::S)
      w.push(x.a, x.sign);
  });
}

BraidWord back(const WiringDiagram& d) {
  return collect(d, [n = d.strands](const Element& x, BraidWord& w) {
    if (x.type == ElementType::I)
      w.append(invert(half_twist(n, x.a, x.b)));
    else if (x.type == ElementType::T)
      w.push(x.a, -1);
    else if (x.type == ElementType::S)
      w.push(x.a, x.sign);
  });
}

BraidWord boundary_braid(const WiringDiagram& d) { return compose(invert(back(d)), front(d)); }

BoundaryData boundary_invariants(const WiringDiagram& d) {
  BoundaryData b;
  b.front = front(d);
  b.back = back(d);
  b.boundary = compose(invert(b.back), b.front);
  b.permutation = permutation(b.boundary);
  b.cycle_type = braidwire::cycle_type(b.permutation);
  b.exponent_sum = braidwire::exponent_sum(b.boundary);
  b.linking = linking_matrix(b.boundary, right_chart(d));
  b.nf_hash = normal_form(b.boundary).digest();
  return b;
}

nlohmann::json linking_to_json(const LinkingMatrix& lm) {
  return {{"components", lm.components}, {"entries", lm.entries}, {"diagonal", lm.diagonal}};
}

nlohmann::json boundary_to_json(const BoundaryData& b) {
  return {{"strands", b.boundary.strands()},
          {"front", to_text(b.front)},
          {"back", to_text(b.back)},
          {"boundary", to_text(b.boundary)},
          {"permutation", b.permutation},
          {"cycle_type", b.cycle_type},
          {"exponent_sum", b.exponent_sum},
          {"linking", linking_to_json(b.linking)},
          {"nf_hash", b.nf_hash}};
}

}  // namespace braidwire
