// Left-greedy Garside normal form over permutation braids.
//
// A simple factor is held as a 0-based arrangement a, a[j] = strand found at
// final position j. Products compose as a_uv[j] = a_u[a_v[j]].

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "braidwire/braid.hpp"
#include "braidwire/digest.hpp"
#include "braidwire/error.hpp"

namespace braidwire {

namespace {

using Simple = std::vector<std::uint16_t>;

Simple identity_simple(int n) {
  Simple s(n);
  for (int j = 0; j < n; ++j) s[j] = static_cast<std::uint16_t>(j);
  return s;
}

bool is_identity(const Simple& s) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] != j) return false;
  return true;
}

bool is_delta(const Simple& s) {
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < n; ++j)
    if (s[j] != n - 1 - j) return false;
  return true;
}

Simple tau(const Simple& s) {
  const std::size_t n = s.size();
  Simple t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = static_cast<std::uint16_t>(n - 1 - s[n - 1 - j]);
  return t;
}

Simple inverse(const Simple& s) {
  Simple t(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) t[s[j]] = static_cast<std::uint16_t>(j);
  return t;
}

// Makes (a, b) left-weighted in place; returns whether anything moved.
bool left_weight(Simple& a, Simple& b) {
  const std::size_t n = a.size();
  Simple pos_b = inverse(b);
  bool changed = false;
  for (;;) {
    std::size_t i = 0;
    for (; i + 1 < n; ++i) {
      bool starts = pos_b[i] > pos_b[i + 1];
      bool finishes = a[i] > a[i + 1];
      if (starts && !finishes) break;
    }
    if (i + 1 >= n) return changed;
    changed = true;
    std::swap(a[i], a[i + 1]);
    // b <- sigma_i^-1 b: swap the values i and i+1 in b.
    std::swap(b[pos_b[i]], b[pos_b[i + 1]]);
    std::swap(pos_b[i], pos_b[i + 1]);
  }
}

class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  void append_positive(const Simple& s) {
    if (is_identity(s)) return;
    factors_.push_back(flipped_ ? tau(s) : s);
    for (std::size_t k = factors_.size() - 1; k > 0; --k)
      if (!left_weight(factors_[k - 1], factors_[k])) break;
    cleanup();
  }

  // Appends s^-1 for a positive simple s.
  void append_negative(const Simple& s) {
    if (is_identity(s)) return;
    // s^-1 = Delta^-1 X with X[m] = n-1-pos_s[m]; pushing Delta^-1 to the
    // front applies tau to every stored factor, which we track lazily.
    Simple pos = inverse(s);
    Simple x(n_);
    for (int m = 0; m < n_; ++m) x[m] = static_cast<std::uint16_t>(n_ - 1 - pos[m]);
    --power_;
    flipped_ = !flipped_;
    append_positive(x);
  }

  NormalForm finish() {
    NormalForm nf;
    nf.strands = n_;
    nf.delta_power = power_;
    for (auto& f : factors_) {
      const Simple& g = flipped_ ? tau(f) : f;
      std::vector<int> out(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) out[j] = g[j] + 1;
      nf.factors.push_back(std::move(out));
    }
    return nf;
  }

 private:
  void cleanup() {
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    if (lead > 0) {
      // tau commutes past Delta, so the lazy flip does not matter here.
      power_ += static_cast<std::int64_t>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!factors_.empty() && is_identity(factors_.back())) factors_.pop_back();
  }

  int n_;
  std::int64_t power_ = 0;
  bool flipped_ = false;
  std::vector<Simple> factors_;
};

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  Builder b(n);
  if (n == 1) return b.finish();

  // Split into maximal runs of one sign whose product stays simple.
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    const int sign = ls[i].sign;
    Simple run = identity_simple(n);
    Simple pos = identity_simple(n);
    for (; i < ls.size() && ls[i].sign == sign; ++i) {
      const int g = ls[i].gen - 1;
      if (sign > 0) {
        // run * sigma_g is simple iff the strands ending at g, g+1 have not crossed.
        if (run[g] > run[g + 1]) break;
        std::swap(pos[run[g]], pos[run[g + 1]]);
        std::swap(run[g], run[g + 1]);
      } else {
        // Negative run sigma_a^-1 sigma_b^-1 ... = (... sigma_b sigma_a)^-1,
        // so the positive part grows on the left.
        if (pos[g] > pos[g + 1]) break;
        std::swap(run[pos[g]], run[pos[g + 1]]);
        std::swap(pos[g], pos[g + 1]);
      }
    }
    if (sign > 0)
      b.append_positive(run);
    else
      b.append_negative(run);
  }
  return b.finish();
}

namespace {

void simple_to_letters(const std::vector<int>& f, BraidWord& out) {
  // Bubble sort realizes the permutation braid with positive letters.
  std::vector<int> a(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) a[j] = static_cast<int>(j) + 1;
  // Target arrangement f; adjacent transpositions of a toward f.
  std::vector<int> rank(f.size() + 1);
  for (std::size_t j = 0; j < f.size(); ++j) rank[f[j]] = static_cast<int>(j);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
      if (rank[a[j]] > rank[a[j + 1]]) {
        std::swap(a[j], a[j + 1]);
        out.push(static_cast<int>(j) + 1, 1);
        moved = true;
      }
  }
}

}  // namespace

BraidWord to_word(const NormalForm& nf) {
  const int n = nf.strands;
  BraidWord out(n);
  BraidWord delta = half_twist(n, 1, n);
  BraidWord step = nf.delta_power >= 0 ? delta : invert(delta);
  for (std::int64_t k = 0; k < (nf.delta_power >= 0 ? nf.delta_power : -nf.delta_power); ++k)
    out.append(step);
  for (const auto& f : nf.factors) simple_to_letters(f, out);
  return out;
}

bool is_left_greedy(const NormalForm& nf) {
  const int n = nf.strands;
  std::vector<Simple> fs;
  for (const auto& f : nf.factors) {
    if (static_cast<int>(f.size()) != n) return false;
    Simple s(n);
    for (int j = 0; j < n; ++j) s[j] = static_cast<std::uint16_t>(f[j] - 1);
    if (is_identity(s) || is_delta(s)) return false;
    fs.push_back(std::move(s));
  }
  for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
    Simple pos_b = inverse(fs[k + 1]);
    for (int i = 0; i + 1 < n; ++i)
      if (pos_b[i] > pos_b[i + 1] && !(fs[k][i] > fs[k][i + 1])) return false;
  }
  return true;
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  os << "n=" << strands << " D^" << delta_power;
  for (const auto& f : factors) {
    os << " [";
    for (std::size_t j = 0; j < f.size(); ++j) os << (j ? "," : "") << f[j];
    os << "]";
  }
  return os.str();
}

std::string NormalForm::digest() const { return sha256_hex(to_string()); }

}  // namespace braidwire
