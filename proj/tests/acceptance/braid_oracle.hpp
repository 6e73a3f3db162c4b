#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace braidwire::acceptance {

struct OracleReport {
  int strands = 0;
  int max_length = 0;
  std::size_t words = 0;
  std::size_t rewrite_classes = 0;  // classes of the bounded rewriting closure
  std::size_t nf_classes = 0;       // distinct normal forms
  std::size_t split_classes = 0;    // rewrite classes holding two normal forms
  // One word per rewrite class: its normal form is left-weighted (checked
  // independently) and handle reduction shows that it represents the word.
  std::size_t classes_checked = 0;
  std::size_t class_failures = 0;
  // Two words on which the oracle and the normal form disagree, if any.
  std::string witness;
  // Rewriting never joins two normal forms, and every normal form is a
  // genuine left-weighted form of its word. Together with uniqueness of
  // left-weighted forms this makes `equal` exact on the ball.
  bool agrees() const { return split_classes == 0 && class_failures == 0 && classes_checked == rewrite_classes; }
};

// Every freely reduced word of length <= max_length on the given number of
// strands. Words are joined when a local relation on a window of at most
// `window` letters rewrites one into the other without leaving the length
// bound. The relation table comes from the Artin action on the free group,
// not from the normal form.
OracleReport brute_force_oracle(int strands, int max_length, int window);

}  // namespace braidwire::acceptance
