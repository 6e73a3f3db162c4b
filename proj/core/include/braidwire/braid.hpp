#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace braidwire {

// sigma_gen^sign, gen is 1-based.
struct Letter {
  int gen = 1;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};

// A word in the Artin generators of B_n. Words are kept as written; nothing
// is reduced eagerly.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(Letter l);
  void push(int gen, int sign) { push(Letter{gen, sign}); }
  void append(const BraidWord& w);

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

// Staircase word sigma_i..sigma_{j-1} sigma_i..sigma_{j-2} ... sigma_i.
BraidWord half_twist(int n, int i, int j);

// perm[p-1] = the left-edge strand found at position p after the word.
using Permutation = std::vector<int>;

Permutation permutation(const BraidWord& w);
std::vector<int> cycle_type(const Permutation& p);
std::int64_t exponent_sum(const BraidWord& w);

// Left-greedy normal form Delta^p A_1 ... A_k. Each factor is stored as a
// permutation in the same convention as Permutation (1-based arrangement).
struct NormalForm {
  int strands = 1;
  std::int64_t delta_power = 0;
  std::vector<std::vector<int>> factors;

  bool operator==(const NormalForm&) const = default;
  std::string to_string() const;
  std::string digest() const;
};

NormalForm normal_form(const BraidWord& w);
BraidWord to_word(const NormalForm& nf);
bool equal(const BraidWord& a, const BraidWord& b);

// Checks the left-greedy conditions on an already built normal form.
bool is_left_greedy(const NormalForm& nf);

// True iff equal(w2, c^-1 w1 c). Witness verification only.
bool conjugate_check(const BraidWord& w1, const BraidWord& w2, const BraidWord& c);

struct LinkingMatrix {
  std::vector<std::string> components;
  // entries[a][b] = lk for a != b, entries[a][a] = self writhe.
  std::vector<std::vector<std::int64_t>> entries;
  std::vector<std::int64_t> diagonal;

  std::int64_t lk(const std::string& a, const std::string& b) const;
  bool operator==(const LinkingMatrix&) const = default;
};

// comp[p-1] names the component of left-edge strand p.
LinkingMatrix linking_matrix(const BraidWord& w, const std::vector<std::string>& comp);

// "s3 s1' s2"
std::string to_text(const BraidWord& w);
BraidWord parse_word(int strands, std::string_view text);

nlohmann::json letters_to_json(const BraidWord& w);
BraidWord word_from_json(int strands, const nlohmann::json& j);

}  // namespace braidwire
