#pragma once

#include <numeric>
#include <random>

#include "braidwire/wiring.hpp"

namespace braidwire::testing {

// Random element of the given type with in-range indices on n >= 4 strands.
inline Element random_element(std::mt19937_64& rng, int n, ElementType t) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (t) {
    case ElementType::I: {
      int i = uni(1, n - 1);
      return Element::I(i, uni(i + 1, std::min(n, i + 5)));
    }
    case ElementType::X: {
      int i = uni(1, n - 1);
      int j = uni(i, std::min(n - 1, i + 3));
      return Element::X(i, j, uni(j + 1, std::min(n, j + 4)));
    }
    case ElementType::T:
      return Element::T(uni(1, n - 1));
    case ElementType::TN: {
      int half = uni(1, std::min(3, n / 2));
      int a = uni(1, n - 2 * half + 1);
      return Element::TN(a, a + 2 * half - 1);
    }
    case ElementType::S:
      return Element::S(uni(1, n - 1), uni(0, 1) ? 1 : -1);
  }
  return Element::S(1, 1);
}

// Builds a chart under which every tangency joins strands of one component.
inline std::vector<std::string> chart_for(int n, const std::vector<Element>& elems) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& e : elems)
    for (const auto& x : expand_element(e)) {
      if (x.type == ElementType::T) parent[find(perm[x.a - 1] - 1)] = find(perm[x.a] - 1);
      apply_permutation(x, perm);
    }
  std::vector<std::string> chart(n);
  std::vector<int> label(n, 0);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    int r = find(p);
    if (!label[r]) label[r] = ++next;
    chart[p] = "C" + std::to_string(label[r]);
  }
  return chart;
}

inline WiringDiagram random_diagram(std::mt19937_64& rng, int n, int len) {
  static const ElementType kinds[] = {ElementType::I, ElementType::X, ElementType::T,
                                      ElementType::TN, ElementType::S};
  std::uniform_int_distribution<int> k(0, 4);
  WiringDiagram d;
  d.strands = n;
  for (int t = 0; t < len; ++t) d.elements.push_back(random_element(rng, n, kinds[k(rng)]));
  d.chart = chart_for(n, d.elements);
  return d;
}

}  // namespace braidwire::testing
