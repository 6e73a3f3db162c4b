#pragma once

// Dehornoy handle reduction and a left-weightedness test for Garside normal
// forms. Both work on plain letter sequences and share nothing with the
// library's normal form code.

#include <cstdlib>
#include <optional>
#include <vector>

#include "braidwire/braid.hpp"

namespace braidwire::testing {

// Letters as signed generators: +i for sigma_i, -i for its inverse.
using Signed = std::vector<int>;

inline Signed to_signed(const BraidWord& w) {
  Signed out;
  for (auto l : w.letters()) out.push_back(l.sign * l.gen);
  return out;
}

// Reduces handles s_i^e v s_i^-e (v free of s_i and s_{i-1}) until none is
// left, shortest handle first. Each step uses
//   s_i^e s_{i+1}^d s_i^-e = s_{i+1}^-e s_i^d s_{i+1}^e
// and commutation, so the group element never changes. The result is empty
// iff the word is trivial. Returns nullopt if the step budget runs out.
inline std::optional<Signed> handle_reduce(Signed w, std::size_t budget = 1000000) {
  for (std::size_t step = 0; step < budget; ++step) {
    std::size_t best_p = 0, best_q = 0;
    bool found = false;
    for (std::size_t p = 0; p < w.size(); ++p) {
      const int i = std::abs(w[p]);
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        const int g = std::abs(w[q]);
        if (g != i && g != i - 1) continue;
        if (w[q] == -w[p] && (!found || q - p < best_q - best_p)) {
          best_p = p;
          best_q = q;
          found = true;
        }
        break;
      }
    }
    if (!found) return w;
    const int i = std::abs(w[best_p]);
    const int e = w[best_p] > 0 ? 1 : -1;
    Signed mid;
    for (std::size_t k = best_p + 1; k < best_q; ++k) {
      const int x = w[k];
      if (std::abs(x) == i + 1) {
        const int d = x > 0 ? 1 : -1;
        mid.push_back(-e * (i + 1));
        mid.push_back(d * i);
        mid.push_back(e * (i + 1));
      } else {
        mid.push_back(x);
      }
    }
    Signed next(w.begin(), w.begin() + static_cast<long>(best_p));
    next.insert(next.end(), mid.begin(), mid.end());
    next.insert(next.end(), w.begin() + static_cast<long>(best_q + 1), w.end());
    w = std::move(next);
  }
  return std::nullopt;
}

inline bool trivial_by_handles(const Signed& w) {
  auto r = handle_reduce(w);
  return r && r->empty();
}

// Crossing data of a positive word, tracked strand by strand. Empty when
// the word is not a permutation braid (negative letter or a pair crossing
// twice).
struct SimpleData {
  bool simple = false;
  std::size_t crossings = 0;
  std::vector<int> starting;   // s_j is a prefix
  std::vector<int> finishing;  // s_j is a suffix
};

inline SimpleData simple_data(int n, const Signed& w) {
  SimpleData out;
  std::vector<int> at(n);  // strand at each position
  for (int p = 0; p < n; ++p) at[p] = p;
  std::vector<std::vector<int>> crossed(n, std::vector<int>(n, 0));
  for (int x : w) {
    if (x <= 0) return out;
    int& c = crossed[at[x - 1]][at[x]];
    if (c || crossed[at[x]][at[x - 1]]) return out;
    c = 1;
    std::swap(at[x - 1], at[x]);
    ++out.crossings;
  }
  for (int j = 1; j < n; ++j) {
    // Strands starting at j-1, j (0-based) crossed iff s_j is a prefix.
    if (crossed[j - 1][j] || crossed[j][j - 1]) out.starting.push_back(j);
    if (crossed[at[j - 1]][at[j]] || crossed[at[j]][at[j - 1]]) out.finishing.push_back(j);
  }
  out.simple = true;
  return out;
}

}  // namespace braidwire::testing
