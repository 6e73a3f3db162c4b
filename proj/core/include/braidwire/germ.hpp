#pragma once

#include <string>
#include <vector>

namespace braidwire {

// Reference data for the germ of G_{k,n}: k+6 blue cusps B1.. and n red
// cusps R1.., two strands each.
struct GermData {
  int k = -1;
  int n = 1;
  std::vector<std::string> blues;
  std::vector<std::string> reds;

  int blue_weight() const { return 7 + k; }
  int red_weight() const { return 7 + k + n; }
  bool is_red(const std::string& comp) const;
  bool has(const std::string& comp) const;
  std::vector<std::string> components() const;  // blues, then reds
  int weight(const std::string& comp) const;
  // Intersection multiplicity of two distinct components.
  int pairwise(const std::string& a, const std::string& b) const;
  int strands() const { return 2 * (k + 6 + n); }
};

// Throws Error unless k >= -1 and n >= 1.
GermData germ_data(int k, int n);

}  // namespace braidwire
