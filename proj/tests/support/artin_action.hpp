#pragma once

// Independent equality oracle: the Artin representation of B_n in Aut(F_n)
// is faithful, so two words are equal iff they act identically on the free
// generators. Nothing here shares code with the Garside normal form.

#include <map>
#include <vector>

#include "braidwire/braid.hpp"

namespace braidwire::testing {

using FreeWord = std::vector<int>;  // letters +-k for x_k^{+-1}

inline void free_push(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x)
    w.pop_back();
  else
    w.push_back(x);
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline std::vector<FreeWord> artin_action(const BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = {k};
  for (auto l : w.letters()) {
    const int i = l.gen;
    auto sub = [&](int x) {
      const int a = x > 0 ? x : -x;
      FreeWord r;
      if (l.sign > 0) {
        if (a == i) r = {i, i + 1, -i};
        else if (a == i + 1) r = {i};
        else r = {a};
      } else {
        if (a == i) r = {i + 1};
        else if (a == i + 1) r = {-(i + 1), i, i + 1};
        else r = {a};
      }
      return x > 0 ? r : free_inverse(r);
    };
    for (auto& v : img) {
      FreeWord next;
      for (int x : v)
        for (int y : sub(x)) free_push(next, y);
      v = std::move(next);
    }
  }
  return img;
}

inline bool artin_equal(const BraidWord& a, const BraidWord& b) {
  return artin_action(a) == artin_action(b);
}

}  // namespace braidwire::testing
