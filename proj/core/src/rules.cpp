#include "rules.hpp"

#include <map>

#include "braidwire/error.hpp"

namespace braidwire::detail {

namespace {

using E = Element;
using Seq = std::vector<Element>;

void need(bool cond, const std::string& what) {
  if (!cond) throw NotApplicable("index constraint violated: " + what);
}

void need_count(const Params& p, std::size_t k) {
  if (p.size() != k)
    throw NotApplicable("expected " + std::to_string(k) + " index params, got " +
                        std::to_string(p.size()));
}

Seq cat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const auto& s : parts) out.insert(out.end(), s.begin(), s.end());
  return out;
}

Seq letters(const BraidWord& w) {
  Seq out;
  for (auto l : w.letters()) out.push_back(E::S(l.gen, l.sign));
  return out;
}

Seq delta(int n, int i, int j) { return letters(half_twist(n, i, j)); }
Seq delta_inv(int n, int i, int j) { return letters(invert(half_twist(n, i, j))); }

Seq one(const E& e) { return Seq{e}; }

const E* at(const Seq& el, std::size_t pos, std::size_t k = 0) {
  return pos + k < el.size() ? &el[pos + k] : nullptr;
}

bool is(const E* e, ElementType t) { return e && e->type == t; }

// First TN within a window after pos (the TN rules carry braid prefixes).
const E* first_tn(const Seq& el, std::size_t pos, std::size_t window) {
  for (std::size_t k = 0; k < window && pos + k < el.size(); ++k)
    if (el[pos + k].type == ElementType::TN) return &el[pos + k];
  return nullptr;
}

// Shapes of a tangency nest TN(a,b) with 2h strands and centre c.
struct Nest {
  int a, b, h, c;
};

Nest nest(int n, int a, int b, int min_half) {
  need(1 <= a && a < b && b <= n, "1 <= a < b <= n");
  need((b - a + 1) % 2 == 0, "nest spans an even number of strands");
  int h = (b - a + 1) / 2;
  need(h >= min_half, "nest has at least " + std::to_string(2 * min_half) + " strands");
  return {a, b, h, a + h - 1};
}

// ---- M2 X_SPLIT -----------------------------------------------------------

Sides m2_top(int n, const Params& p) {
  need_count(p, 4);
  int i = p[0], j = p[1], l = p[2], s = p[3];
  need(1 <= i && i < s && s <= j && j < l && l <= n, "1 <= i < s <= j < l <= n");
  return {one(E::X(i, j, l)), {E::X(s, j, l), E::X(i, s - 1, s + l - j - 1)}};
}

Sides m2_bottom(int n, const Params& p) {
  need_count(p, 4);
  int i = p[0], j = p[1], l = p[2], s = p[3];
  need(1 <= i && i <= j && j < s && s < l && l <= n, "1 <= i <= j < s < l <= n");
  return {one(E::X(i, j, l)), {E::X(i, j, s), E::X(s - (j - i), s, l)}};
}

Sides m2_unit(int n, const Params& p) {
  need_count(p, 1);
  int i = p[0];
  need(1 <= i && i + 1 <= n, "1 <= i < n");
  return {one(E::X(i, i, i + 1)), one(E::I(i, i + 1))};
}

std::vector<Params> m2_top_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  const E* f = at(el, pos, 1);
  if (is(e, ElementType::X)) {
    for (int s = e->a + 1; s <= e->b; ++s) out.push_back({e->a, e->b, e->c, s});
    if (is(f, ElementType::X)) out.push_back({f->a, e->b, e->c, e->a});
  }
  return out;
}

std::vector<Params> m2_bottom_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  const E* f = at(el, pos, 1);
  if (is(e, ElementType::X)) {
    for (int s = e->b + 1; s < e->c; ++s) out.push_back({e->a, e->b, e->c, s});
    if (is(f, ElementType::X)) out.push_back({e->a, e->b, f->c, e->c});
  }
  return out;
}

std::vector<Params> m2_unit_prop(const Seq& el, std::size_t pos, int) {
  const E* e = at(el, pos);
  if (is(e, ElementType::X) || is(e, ElementType::I)) return {{e->a}};
  return {};
}

// ---- M3 TN_PEEL -----------------------------------------------------------

Sides m3_last(int n, const Params& p) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 2);
  Seq top, bot;
  for (int g = t.a; g < t.c; ++g) top.push_back(E::S(g, -1));
  for (int g = t.b - 1; g > t.c; --g) bot.push_back(E::S(g, -1));
  return {one(E::TN(t.a, t.b)), cat({one(E::TN(t.a + 1, t.b - 1)), top, bot, one(E::T(t.c))})};
}

Sides m3_first(int n, const Params& p) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 2);
  Seq block;
  for (int s = 1; s < t.h; ++s) {
    block.push_back(E::S(t.c - s, -1));
    block.push_back(E::S(t.c + s, -1));
  }
  return {one(E::TN(t.a, t.b)), cat({one(E::T(t.c)), block, one(E::TN(t.a + 1, t.b - 1))})};
}

std::vector<Params> m3_prop(const Seq& el, std::size_t pos, int n) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  if (is(e, ElementType::TN)) {
    out.push_back({e->a, e->b});
    out.push_back({e->a - 1, e->b + 1});
  }
  if (is(e, ElementType::T)) {
    if (const E* t = first_tn(el, pos, static_cast<std::size_t>(2 * n + 2)))
      out.push_back({t->a - 1, t->b + 1});
  }
  return out;
}

// ---- M4 SPLIT_MULTI -------------------------------------------------------

Sides m4(int n, const Params& p, int v) {
  need_count(p, 3);
  int i = p[0], j = p[1], k = p[2];
  need(1 <= i && i < j && j + 1 < k && k <= n, "1 <= i < j, j+1 < k <= n");
  E x = E::X(i, j, k);
  int w = i + k - j;  // first position of the old top block after the grid
  switch (v) {
    case 0:
      return {one(E::I(i, k)), {E::I(i, j), E::I(j + 1, k), x}};
    case 1:
      return {one(E::I(i, k)), {x, E::I(i, w - 1), E::I(w, k)}};
    case 2:
      return {one(E::I(i, k)), {E::I(i, j), x, E::I(i, w - 1)}};
    default:
      return {one(E::I(i, k)), {E::I(j + 1, k), x, E::I(w, k)}};
  }
}

std::vector<Params> m4_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  if (is(e, ElementType::I))
    for (int j = e->a + 1; j + 1 < e->b; ++j) out.push_back({e->a, j, e->b});
  for (std::size_t k = 0; k < 3; ++k)
    if (const E* x = at(el, pos, k); is(x, ElementType::X)) out.push_back({x->a, x->b, x->c});
  return out;
}

// ---- M5 SPLIT_ONE ---------------------------------------------------------

Sides m5(int n, const Params& p, int v) {
  need_count(p, 2);
  int i = p[0], j = p[1];
  need(1 <= i && i + 2 <= j && j <= n, "1 <= i, i+2 <= j <= n");
  switch (v) {
    case 0:
      return {one(E::I(i, j)), {E::I(i + 1, j), E::X(i, i, j)}};
    case 1:
      return {one(E::I(i, j)), {E::X(i, i, j), E::I(i, j - 1)}};
    case 2:
      return {one(E::I(i, j)), {E::I(i, j - 1), E::X(i, j - 1, j)}};
    default:
      return {one(E::I(i, j)), {E::X(i, j - 1, j), E::I(i + 1, j)}};
  }
}

std::vector<Params> m5_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  if (is(e, ElementType::I)) out.push_back({e->a, e->b});
  for (std::size_t k = 0; k < 2; ++k)
    if (const E* x = at(el, pos, k); is(x, ElementType::X)) out.push_back({x->a, x->c});
  return out;
}

// ---- M6 SPLIT_ONE_MID -----------------------------------------------------

Sides m6(int n, const Params& p) {
  need_count(p, 3);
  int i = p[0], j = p[1], k = p[2];
  need(1 <= i && i < j && j < k && k <= n && k - i >= 2, "1 <= i < j < k <= n");
  return {one(E::I(i, k)), {E::X(j, j, k), E::I(i, k - 1), E::X(i + k - j, k - 1, k)}};
}

std::vector<Params> m6_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  const E* f = at(el, pos, 1);
  if (is(e, ElementType::I))
    for (int j = e->a + 1; j < e->b; ++j) out.push_back({e->a, j, e->b});
  if (is(e, ElementType::X) && is(f, ElementType::I)) out.push_back({f->a, e->a, e->c});
  return out;
}

// ---- M7 SLIDE_I_PAST_X ----------------------------------------------------

Sides m7(int n, const Params& p, int v) {
  need_count(p, 3);
  int i = p[0], j = p[1], k = p[2];
  need(1 <= i && i <= j && j < k && k <= n, "1 <= i <= j < k <= n");
  E x = E::X(i, j, k);
  if (v == 0) {
    need(i < j, "top block has at least two strands");
    return {{E::I(i, j), x}, {x, E::I(i + k - j, k)}};
  }
  need(j + 1 < k, "bottom block has at least two strands");
  return {{E::I(j + 1, k), x}, {x, E::I(i, i + k - j - 1)}};
}

std::vector<Params> m7_prop(const Seq& el, std::size_t pos, int) {
  std::vector<Params> out;
  for (std::size_t k = 0; k < 2; ++k)
    if (const E* x = at(el, pos, k); is(x, ElementType::X)) out.push_back({x->a, x->b, x->c});
  return out;
}

// ---- M8 SWITCH_NESTED_I ---------------------------------------------------

Sides m8(int n, const Params& p, int v) {
  need_count(p, 3);
  int i = p[0], j = p[1], k = p[2];
  need(1 <= i && i < j && j < k && k <= n, "1 <= i < j < k <= n");
  if (v == 0) return {{E::I(i, j), E::I(i, k)}, {E::I(i, k), E::I(k + i - j, k)}};
  return {{E::I(j, k), E::I(i, k)}, {E::I(i, k), E::I(i, i + k - j)}};
}

std::vector<Params> m8_prop(const Seq& el, std::size_t pos, int, int v) {
  const E* e = at(el, pos);
  const E* f = at(el, pos, 1);
  if (!is(e, ElementType::I) || !is(f, ElementType::I)) return {};
  if (v == 0) return {{e->a, e->b, f->b}, {e->a, e->b + e->a - f->a, e->b}};
  return {{f->a, e->a, e->b}, {e->a, e->a + e->b - f->b, e->b}};
}

// ---- M9 SWAP_T_I ----------------------------------------------------------

Sides m9_single(int n, const Params& p) {
  need_count(p, 1);
  int i = p[0];
  need(1 <= i && i + 1 <= n, "1 <= i < n");
  return {{E::T(i), E::I(i, i + 1)}, {E::I(i, i + 1), E::T(i)}};
}

Sides m9_nest(int n, const Params& p) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 1);
  return {{E::TN(t.a, t.b), E::I(t.a, t.b)}, {E::I(t.a, t.b), E::TN(t.a, t.b)}};
}

std::vector<Params> m9_single_prop(const Seq& el, std::size_t pos, int) {
  if (const E* e = at(el, pos); e) return {{e->a}};
  return {};
}

std::vector<Params> m9_nest_prop(const Seq& el, std::size_t pos, int) {
  if (const E* e = at(el, pos); is(e, ElementType::TN) || is(e, ElementType::I))
    return {{e->a, e->b}};
  return {};
}

// ---- M10 T_PASS -----------------------------------------------------------

Sides m10(int n, const Params& p, int v) {
  need_count(p, 1);
  int i = p[0];
  need(1 <= i && i + 2 <= n, "1 <= i, i+2 <= n");
  E Ii = E::I(i, i + 1), Ij = E::I(i + 1, i + 2);
  switch (v) {
    case 0:
      return {{E::T(i), Ij}, {E::S(i + 1, 1), E::S(i, -1), E::T(i + 1), Ii}};
    case 1:
      return {{E::T(i + 1), Ii}, {E::S(i, 1), E::S(i + 1, -1), E::T(i), Ij}};
    case 2:
      return {{Ij, E::T(i)}, {Ii, E::T(i + 1), E::S(i, -1), E::S(i + 1, 1)}};
    default:
      return {{Ii, E::T(i + 1)}, {Ij, E::T(i), E::S(i + 1, -1), E::S(i, 1)}};
  }
}

std::vector<Params> near_first(const Seq& el, std::size_t pos, int) {
  if (const E* e = at(el, pos); e) return {{e->a - 1}, {e->a}};
  return {};
}

// ---- M11 TN_PASS_MULTI / M14 TN_SIDE_SWAP ---------------------------------

Sides m11(int n, const Params& p, int v) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 2);
  int mid = t.a + t.h;  // first strand of the bottom half
  Seq tn = one(E::TN(t.a, t.b));
  Seq top = one(E::I(t.a, mid - 1)), bot = one(E::I(mid, t.b));
  Seq dt = delta(n, t.a, mid - 1), dti = delta_inv(n, t.a, mid - 1);
  Seq db = delta(n, mid, t.b), dbi = delta_inv(n, mid, t.b);
  switch (v) {
    case 0:
      return {cat({tn, top}), cat({dt, dbi, tn, bot})};
    case 1:
      return {cat({tn, bot}), cat({db, dti, tn, top})};
    case 2:
      return {cat({top, tn}), cat({bot, tn, dt, dbi})};
    default:
      return {cat({bot, tn}), cat({top, tn, dti, db})};
  }
}

Sides m14(int n, const Params& p, int v) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 2);
  int mid = t.a + t.h;
  Seq tn = one(E::TN(t.a, t.b));
  if (v == 0)
    return {cat({tn, one(E::I(t.a, mid - 1))}),
            cat({one(E::I(t.a, mid - 1)), delta(n, t.a, mid - 1), tn, delta_inv(n, t.a, mid - 1)})};
  return {cat({tn, one(E::I(mid, t.b))}),
          cat({one(E::I(mid, t.b)), delta(n, mid, t.b), tn, delta_inv(n, mid, t.b)})};
}

// TN parameters read from a nest or a half-block multipoint near pos.
std::vector<Params> nest_prop(const Seq& el, std::size_t pos, int n) {
  std::vector<Params> out;
  const E* e = at(el, pos);
  if (!e) return out;
  if (is(e, ElementType::I)) {
    int size = e->b - e->a + 1;
    out.push_back({e->a, e->a + 2 * size - 1});
    out.push_back({e->a - size, e->b});
  }
  const std::size_t window = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 2;
  if (const E* t = first_tn(el, pos, window)) {
    out.push_back({t->a, t->b});
    out.push_back({t->a - 1, t->b - 1});
    out.push_back({t->a - 1, t->b + 1});
  }
  return out;
}

// ---- M12 TN_PASS_STRAND ---------------------------------------------------
// Window a..a+2h; v0 moves the strand below TN(a,a+2h-1) up through the
// nest, v1 is the mirror image read with the inverse braid.

Sides m12(int n, const Params& p, int v) {
  need_count(p, 2);
  Nest t = nest(n, p[0], p[1], 1);
  need(t.b + 1 <= n, "a strand below the nest");
  const int o = t.a - 1, h = t.h;
  Seq ibot, itop, beta, beta_inv;
  for (int q = o + 2 * h; q >= o + h + 1; --q) ibot.push_back(E::I(q, q + 1));
  for (int q = o + 1; q <= o + h; ++q) itop.push_back(E::I(q, q + 1));
  BraidWord b(n);
  for (int q = o + 2 * h; q >= o + h + 1; --q) b.push(q, 1);
  for (int q = o + h; q >= o + 1; --q) b.push(q, -1);
  beta = letters(b);
  beta_inv = letters(invert(b));
  Seq upper = one(E::TN(t.a, t.b)), lower = one(E::TN(t.a + 1, t.b + 1));
  if (v == 0) return {cat({upper, ibot}), cat({beta, lower, itop})};
  return {cat({lower, itop}), cat({beta_inv, upper, ibot})};
}

// ---- M13 T_HURWITZ --------------------------------------------------------

Sides m13(int n, const Params& p, int v) {
  need_count(p, 1);
  int i = p[0];
  need(1 <= i && i + 2 <= n, "1 <= i, i+2 <= n");
  if (v == 0)
    return {{E::T(i), E::I(i + 1, i + 2)},
            {E::I(i + 1, i + 2), E::S(i + 1, 1), E::T(i), E::S(i + 1, -1)}};
  return {{E::I(i, i + 1), E::T(i + 1)},
          {E::S(i, -1), E::T(i + 1), E::S(i, 1), E::I(i, i + 1)}};
}

// ---- M15 SLIDE_SIGMA ------------------------------------------------------

Sides m15(int n, const Params& p) {
  need_count(p, 4);
  int i = p[0], j = p[1], k = p[2], s = p[3];
  need(1 <= i && i <= j && j < k && k <= n, "1 <= i <= j < k <= n");
  need(s == 1 || s == -1, "sign is +1 or -1");
  return {{E::S(j, s), E::I(i, k)}, {E::I(i, k), E::S(i + k - j - 1, s)}};
}

std::vector<Params> m15_prop(const Seq& el, std::size_t pos, int) {
  const E* e = at(el, pos);
  const E* f = at(el, pos, 1);
  if (is(e, ElementType::S) && is(f, ElementType::I)) return {{f->a, e->a, f->b, e->sign}};
  if (is(e, ElementType::I) && is(f, ElementType::S))
    return {{e->a, e->a + e->b - f->a - 1, e->b, f->sign}};
  return {};
}

// ---- table ----------------------------------------------------------------

using SidesFn = std::function<Sides(int, const Params&)>;

SidesFn bind_v(Sides (*f)(int, const Params&, int), int v) {
  return [f, v](int n, const Params& p) { return f(n, p, v); };
}

std::map<std::string, std::vector<PatternVariant>> build() {
  const auto W = Guarantee::WORD;
  const auto X = Guarantee::EXACT;
  std::map<std::string, std::vector<PatternVariant>> t;
  t["M2"] = {
      {X, {"i", "j", "l", "s"}, "X[i,j|j+1,l] <-> X[s,j|j+1,l] X[i,s-1|s,s+l-j-1]", m2_top, m2_top_prop},
      {W, {"i", "j", "l", "s"}, "X[i,j|j+1,l] <-> X[i,j|j+1,s] X[s-j+i,s|s+1,l]", m2_bottom, m2_bottom_prop},
      {X, {"i"}, "X[i,i|i+1,i+1] <-> I[i,i+1]", m2_unit, m2_unit_prop},
  };
  t["M3"] = {
      {W, {"a", "b"}, "TN[a,b] <-> TN[a+1,b-1] s_a'..s_{c-1}' s_{b-1}'..s_{c+1}' T[c]", m3_last, m3_prop},
      {X, {"a", "b"}, "TN[a,b] <-> T[c] s_{c-1}'s_{c+1}'..s_a's_{b-1}' TN[a+1,b-1]", m3_first, m3_prop},
  };
  const char* m4p[] = {"I[i,k] <-> I[i,j] I[j+1,k] X[i,j|j+1,k]",
                       "I[i,k] <-> X[i,j|j+1,k] I[i,i+k-j-1] I[i+k-j,k]",
                       "I[i,k] <-> I[i,j] X[i,j|j+1,k] I[i,i+k-j-1]",
                       "I[i,k] <-> I[j+1,k] X[i,j|j+1,k] I[i+k-j,k]"};
  for (int v = 0; v < 4; ++v) t["M4"].push_back({W, {"i", "j", "k"}, m4p[v], bind_v(m4, v), m4_prop});
  const char* m5p[] = {"I[i,j] <-> I[i+1,j] X[i,i|i+1,j]", "I[i,j] <-> X[i,i|i+1,j] I[i,j-1]",
                       "I[i,j] <-> I[i,j-1] X[i,j-1|j,j]", "I[i,j] <-> X[i,j-1|j,j] I[i+1,j]"};
  for (int v = 0; v < 4; ++v) t["M5"].push_back({W, {"i", "j"}, m5p[v], bind_v(m5, v), m5_prop});
  t["M6"] = {{W, {"i", "j", "k"}, "I[i,k] <-> X[j,j|j+1,k] I[i,k-1] X[i+k-j,k-1|k,k]", m6, m6_prop}};
  t["M7"] = {
      {W, {"i", "j", "k"}, "I[i,j] X[i,j|j+1,k] <-> X[i,j|j+1,k] I[i+k-j,k]", bind_v(m7, 0), m7_prop},
      {W, {"i", "j", "k"}, "I[j+1,k] X[i,j|j+1,k] <-> X[i,j|j+1,k] I[i,i+k-j-1]", bind_v(m7, 1), m7_prop},
  };
  t["M8"] = {
      {W, {"i", "j", "k"}, "I[i,j] I[i,k] <-> I[i,k] I[k+i-j,k]", bind_v(m8, 0),
       [](const Seq& el, std::size_t pos, int n) { return m8_prop(el, pos, n, 0); }},
      {W, {"i", "j", "k"}, "I[j,k] I[i,k] <-> I[i,k] I[i,i+k-j]", bind_v(m8, 1),
       [](const Seq& el, std::size_t pos, int n) { return m8_prop(el, pos, n, 1); }},
  };
  t["M9"] = {
      {W, {"i"}, "T[i] I[i,i+1] <-> I[i,i+1] T[i]", m9_single, m9_single_prop},
      {W, {"a", "b"}, "TN[a,b] I[a,b] <-> I[a,b] TN[a,b]", m9_nest, m9_nest_prop},
  };
  const char* m10p[] = {"T[i] I[i+1,i+2] <-> s_{i+1} s_i' T[i+1] I[i,i+1]",
                        "T[i+1] I[i,i+1] <-> s_i s_{i+1}' T[i] I[i+1,i+2]",
                        "I[i+1,i+2] T[i] <-> I[i,i+1] T[i+1] s_i' s_{i+1}",
                        "I[i,i+1] T[i+1] <-> I[i+1,i+2] T[i] s_{i+1}' s_i"};
  for (int v = 0; v < 4; ++v) t["M10"].push_back({W, {"i"}, m10p[v], bind_v(m10, v), near_first});
  const char* m11p[] = {"TN I[top] <-> D_top D_bot' TN I[bot]", "TN I[bot] <-> D_bot D_top' TN I[top]",
                        "I[top] TN <-> I[bot] TN D_top D_bot'", "I[bot] TN <-> I[top] TN D_top' D_bot"};
  for (int v = 0; v < 4; ++v) t["M11"].push_back({W, {"a", "b"}, m11p[v], bind_v(m11, v), nest_prop});
  t["M12"] = {
      {W, {"a", "b"}, "TN[a,b] I_{b}..I_{c+1} <-> s_b..s_{c+1} s_c'..s_a' TN[a+1,b+1] I_a..I_c",
       bind_v(m12, 0), nest_prop},
      {W, {"a", "b"}, "TN[a+1,b+1] I_a..I_c <-> s_a..s_c s_{c+1}'..s_b' TN[a,b] I_b..I_{c+1}",
       bind_v(m12, 1), nest_prop},
  };
  t["M13"] = {
      {W, {"i"}, "T[i] I[i+1,i+2] <-> I[i+1,i+2] s_{i+1} T[i] s_{i+1}'", bind_v(m13, 0), near_first},
      {W, {"i"}, "I[i,i+1] T[i+1] <-> s_i' T[i+1] s_i I[i,i+1]", bind_v(m13, 1), near_first},
  };
  t["M14"] = {
      {W, {"a", "b"}, "TN I[top] <-> I[top] D_top TN D_top'", bind_v(m14, 0), nest_prop},
      {W, {"a", "b"}, "TN I[bot] <-> I[bot] D_bot TN D_bot'", bind_v(m14, 1), nest_prop},
  };
  t["M15"] = {{W, {"i", "j", "k", "sign"}, "s_j^e I[i,k] <-> I[i,k] s_{i+k-j-1}^e", m15, m15_prop}};
  return t;
}

}  // namespace

const std::vector<PatternVariant>* pattern_variants(const std::string& kind) {
  static const auto table = build();
  auto it = table.find(kind);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace braidwire::detail
