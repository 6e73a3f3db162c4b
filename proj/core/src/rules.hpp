#pragma once

// Pattern rules behind the move catalog. Each variant maps its index
// parameters to a pair of element sequences (lhs, rhs); forward rewrites
// lhs -> rhs at the instance position, backward rewrites rhs -> lhs.

#include <functional>
#include <string>
#include <vector>

#include "braidwire/moves.hpp"

namespace braidwire::detail {

struct Sides {
  std::vector<Element> lhs;
  std::vector<Element> rhs;
};

using Params = std::vector<int>;

struct PatternVariant {
  Guarantee guarantee = Guarantee::WORD;
  std::vector<std::string> param_names;
  std::string pattern;
  // Throws NotApplicable when the parameters violate the variant's index
  // constraints on n strands.
  std::function<Sides(int n, const Params& p)> sides;
  // Candidate parameter vectors (without the variant index) for a match
  // starting at pos, in either direction.
  std::function<std::vector<Params>(const std::vector<Element>& el, std::size_t pos, int n)> propose;
};

// Variants of pattern kinds, keyed by kind id. M1, M16 and M17 are context
// rules handled directly by the engine and have no entry here.
const std::vector<PatternVariant>* pattern_variants(const std::string& kind);

}  // namespace braidwire::detail
