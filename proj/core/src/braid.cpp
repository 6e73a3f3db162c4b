#include "braidwire/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

#include "braidwire/error.hpp"

namespace braidwire {

namespace {

void check_letter(int strands, Letter l) {
  if (l.gen < 1 || l.gen > strands - 1)
    throw Error("generator s" + std::to_string(l.gen) + " out of range on " +
                std::to_string(strands) + " strands");
  if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw Error("strand count must be positive");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
  for (auto l : letters) check_letter(strands_, l);
  letters_ = std::move(letters);
}

void BraidWord::push(Letter l) {
  check_letter(strands_, l);
  letters_.push_back(l);
}

void BraidWord::append(const BraidWord& w) {
  if (w.strands_ != strands_)
    throw Error("strand count mismatch: " + std::to_string(strands_) + " vs " +
                std::to_string(w.strands_));
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
  for (auto& l : ls) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(ls));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord half_twist(int n, int i, int j) {
  if (i < 1 || j > n || i > j)
    throw Error("half twist range [" + std::to_string(i) + "," + std::to_string(j) +
                "] invalid on " + std::to_string(n) + " strands");
  BraidWord w(n);
  for (int top = j - 1; top >= i; --top)
    for (int g = i; g <= top; ++g) w.push(g, 1);
  return w;
}

Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (int k = 0; k < w.strands(); ++k) p[k] = k + 1;
  for (auto l : w.letters()) std::swap(p[l.gen - 1], p[l.gen]);
  return p;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(p[c] - 1)) {
      seen[c] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t s = 0;
  for (auto l : w.letters()) s += l.sign;
  return s;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error("strand count mismatch in equal");
  return normal_form(a) == normal_form(b);
}

bool conjugate_check(const BraidWord& w1, const BraidWord& w2, const BraidWord& c) {
  if (w1.strands() != w2.strands() || w1.strands() != c.strands())
    throw Error("strand count mismatch in conjugate_check");
  return equal(w2, compose(compose(invert(c), w1), c));
}

std::int64_t LinkingMatrix::lk(const std::string& a, const std::string& b) const {
  auto ia = std::find(components.begin(), components.end(), a);
  auto ib = std::find(components.begin(), components.end(), b);
  if (ia == components.end() || ib == components.end())
    throw Error("unknown component in linking matrix");
  return entries[ia - components.begin()][ib - components.begin()];
}

LinkingMatrix linking_matrix(const BraidWord& w, const std::vector<std::string>& comp) {
  const int n = w.strands();
  if (static_cast<int>(comp.size()) != n)
    throw Error("component map must cover all " + std::to_string(n) + " strands");
  Permutation perm = permutation(w);
  for (int p = 0; p < n; ++p)
    if (comp[perm[p] - 1] != comp[p])
      throw Error("braid permutation does not preserve component " + comp[p]);

  LinkingMatrix lm;
  std::map<std::string, std::size_t> index;
  for (const auto& c : comp)
    if (index.emplace(c, 0).second) lm.components.push_back(c);
  std::sort(lm.components.begin(), lm.components.end());
  for (std::size_t k = 0; k < lm.components.size(); ++k) index[lm.components[k]] = k;

  const std::size_t m = lm.components.size();
  std::vector<std::vector<std::int64_t>> twice(m, std::vector<std::int64_t>(m, 0));
  std::vector<std::size_t> at(n);
  for (int p = 0; p < n; ++p) at[p] = index[comp[p]];
  for (auto l : w.letters()) {
    std::size_t a = at[l.gen - 1], b = at[l.gen];
    if (a == b) {
      twice[a][a] += 2 * l.sign;
    } else {
      twice[a][b] += l.sign;
      twice[b][a] += l.sign;
    }
    std::swap(at[l.gen - 1], at[l.gen]);
  }
  lm.entries.assign(m, std::vector<std::int64_t>(m, 0));
  lm.diagonal.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (twice[a][b] % 2 != 0)
        throw Error("odd crossing count between " + lm.components[a] + " and " +
                    lm.components[b]);
      lm.entries[a][b] = twice[a][b] / 2;
    }
  for (std::size_t a = 0; a < m; ++a) lm.diagonal[a] = lm.entries[a][a];
  return lm;
}

std::string to_text(const BraidWord& w) {
  std::string out;
  for (auto l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += "s" + std::to_string(l.gen);
    if (l.sign < 0) out.push_back('\'');
  }
  return out;
}

BraidWord parse_word(int strands, std::string_view text) {
  BraidWord w(strands);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  for (skip(); i < text.size(); skip()) {
    if (text[i] != 's' && text[i] != 'S')
      throw ParseError("expected generator 's'", 1, i + 1);
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected generator index", 1, i + 1);
    int gen = std::stoi(std::string(text.substr(start, i - start)));
    int sign = 1;
    if (i < text.size() && text[i] == '\'') {
      sign = -1;
      ++i;
    }
    if (gen < 1 || gen >= strands) throw ParseError("generator index out of range", 1, start + 1);
    w.push(gen, sign);
  }
  return w;
}

nlohmann::json letters_to_json(const BraidWord& w) {
  auto arr = nlohmann::json::array();
  for (auto l : w.letters()) arr.push_back({l.gen, l.sign});
  return arr;
}

BraidWord word_from_json(int strands, const nlohmann::json& j) {
  if (!j.is_array()) throw Error("braid word JSON must be an array");
  BraidWord w(strands);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error("braid letter must be [gen, sign]");
    w.push(e[0].get<int>(), e[1].get<int>());
  }
  return w;
}

}  // namespace braidwire
