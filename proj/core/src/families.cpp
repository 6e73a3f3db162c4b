#include "braidwire/families.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/error.hpp"

namespace braidwire {

// ---- germ data -------------------------------------------------------------

bool GermData::is_red(const std::string& comp) const {
  return std::find(reds.begin(), reds.end(), comp) != reds.end();
}

bool GermData::has(const std::string& comp) const {
  return is_red(comp) || std::find(blues.begin(), blues.end(), comp) != blues.end();
}

std::vector<std::string> GermData::components() const {
  std::vector<std::string> out = blues;
  out.insert(out.end(), reds.begin(), reds.end());
  return out;
}

int GermData::weight(const std::string& comp) const {
  if (!has(comp)) throw Error("germ has no component " + comp);
  return is_red(comp) ? red_weight() : blue_weight();
}

int GermData::pairwise(const std::string& a, const std::string& b) const {
  if (!has(a) || !has(b)) throw Error("germ has no component " + (has(a) ? b : a));
  if (a == b) throw Error("pairwise multiplicity needs two distinct components");
  const int reds_in = static_cast<int>(is_red(a)) + static_cast<int>(is_red(b));
  if (reds_in == 0) return 8 + k;
  if (reds_in == 2) return 8 + k + n;
  return 7 + k;
}

GermData germ_data(int k, int n) {
  if (k < -1) throw Error("germ_data needs k >= -1");
  if (n < 1) throw Error("germ_data needs n >= 1");
  if (k + 6 + n > 2048) throw Error("germ too large");
  GermData g;
  g.k = k;
  g.n = n;
  for (int i = 1; i <= k + 6; ++i) g.blues.push_back("B" + std::to_string(i));
  for (int i = 1; i <= n; ++i) g.reds.push_back("R" + std::to_string(i));
  return g;
}

// ---- gates -----------------------------------------------------------------

void check_gates(const Arrangement& a, const GermData& g, bool require_qhd) {
  auto report = validate(a.diagram);
  if (!report.ok()) throw GateFailure("invalid diagram: " + report.summary());
  auto names = component_names(a.diagram);
  for (const auto& c : names)
    if (!g.has(c)) throw GateFailure("component " + c + " is not in the germ");
  if (names.size() != g.components().size())
    throw GateFailure("diagram has " + std::to_string(names.size()) + " components, germ has " +
                      std::to_string(g.components().size()));
  for (const auto& [c, w] : weights(a))
    if (w != g.weight(c))
      throw GateFailure("weight gate: w(" + c + ") = " + std::to_string(w) + ", germ wants " +
                        std::to_string(g.weight(c)));
  auto lm = linking_matrix(boundary_braid(a.diagram), right_chart(a.diagram));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const auto got = lm.lk(names[i], names[j]);
      const int want = g.pairwise(names[i], names[j]);
      if (got != want)
        throw GateFailure("linking gate: lk(" + names[i] + "," + names[j] + ") = " +
                          std::to_string(got) + ", germ wants " + std::to_string(want));
    }
  if (require_qhd) {
    auto v = qhd_check(a, g);
    if (!v.qhd) throw GateFailure("QHD gate: " + v.reasons.front());
  }
}

// ---- Scott diagrams ----------------------------------------------------------

namespace {

int m_of(int k) {
  if (k < -1) throw Error("family needs k >= -1");
  if (k > 1000) throw Error("family parameter k too large");
  return k + 7;
}

// Left-edge chart: c_j owns strands j and 2m+1-j. The red pair is c_m when
// the sub-multipoint drops the bottom strand (e = 0) and c_1 otherwise; the
// blues are numbered by j.
std::vector<std::string> family_chart(int m, int red_j) {
  std::vector<std::string> chart(2 * m);
  int blue = 0;
  for (int j = 1; j <= m; ++j) {
    std::string name = j == red_j ? "R1" : "B" + std::to_string(++blue);
    chart[j - 1] = name;
    chart[2 * m - j] = name;
  }
  return chart;
}

int red_index(int m, int e) {
  // After TN[1,2m] the strand at position 2m (e = 0) or m+1 (e = 1) is the
  // one the sub-multipoint leaves out; take its component.
  std::vector<int> perm(2 * m);
  std::iota(perm.begin(), perm.end(), 1);
  apply_permutation(Element::TN(1, 2 * m), perm);
  const int strand = perm[(e == 0 ? 2 * m : m + 1) - 1];
  return std::min(strand, 2 * m + 1 - strand);
}

Arrangement with_free_points(WiringDiagram d, const std::map<std::string, int>& fp) {
  return Arrangement{std::move(d), fp};
}

std::map<std::string, int> scott_free_points(int m) {
  std::map<std::string, int> fp;
  for (int i = 1; i < m; ++i) fp["B" + std::to_string(i)] = 1;
  fp["R1"] = 3;
  return fp;
}

}  // namespace

WiringDiagram scott_wiring(int k, int e) {
  const int m = m_of(k);
  const int n = 2 * m;
  WiringDiagram d;
  d.strands = n;
  d.chart = family_chart(m, red_index(m, m % 2));
  d.elements.push_back(Element::TN(1, n));
  d.elements.push_back(Element::I(m + 1 + e, n - 1 + e));
  for (int r = 0; r < m - 4; ++r) d.elements.push_back(Element::I(m + 1, n));
  d.elements.push_back(Element::I(1, n));
  return d;
}

FamilyDiagram scott_diagram(int k) {
  const int m = m_of(k);
  FamilyDiagram fd{with_free_points(scott_wiring(k, m % 2), scott_free_points(m)), "scott", false};
  check_gates(fd.arrangement, germ_data(k, 1), false);
  return fd;
}

// ---- QHD diagrams ------------------------------------------------------------

namespace {

void push_word(std::vector<Element>& out, const BraidWord& w) {
  for (auto l : w.letters()) out.push_back(Element::S(l.gen, l.sign));
}

// s_1'..s_{m-1}' and s_{2m-1}'..s_{m+1}', the letters peeled off TN[1,2m]
// together with its innermost tangency.
BraidWord sigma_top_inv(int m) {
  BraidWord w(2 * m);
  for (int g = 1; g <= m - 1; ++g) w.push(g, -1);
  return w;
}

BraidWord sigma_bot_inv(int m) {
  BraidWord w(2 * m);
  for (int g = 2 * m - 1; g >= m + 1; --g) w.push(g, -1);
  return w;
}

// The section-5 end point. For m even it keeps the braiding the nest pass
// adds on the left; for m odd the same body without that braiding is used,
// and its boundary is the Scott boundary conjugated by the full twist.
WiringDiagram qhd_wiring(int m) {
  const int n = 2 * m;
  WiringDiagram d;
  d.strands = n;
  d.chart = family_chart(m, red_index(m, m % 2));
  auto& el = d.elements;
  if (m % 2 == 0) push_word(el, compose(half_twist(n, 1, m), invert(half_twist(n, m + 1, n))));
  el.push_back(Element::TN(2, n - 1));
  push_word(el, compose(sigma_top_inv(m), sigma_bot_inv(m)));
  el.push_back(Element::I(m, m + 1));
  el.push_back(Element::S(m - 1, 1));
  el.push_back(Element::S(m, -1));
  el.push_back(Element::T(m - 1));
  el.push_back(Element::I(m, n));
  for (int i = m - 2; i >= 1; --i) el.push_back(Element::I(i, i + m));
  return d;
}

}  // namespace

FamilyDiagram qhd_diagram(int k, bool allow_experimental) {
  const int m = m_of(k);
  const int n = 2 * m;
  const bool odd = m % 2 == 1;
  if (odd && !allow_experimental)
    throw Error("qhd_diagram for odd m = k+7 is experimental; pass the override to try it");
  FamilyDiagram fd{with_free_points(qhd_wiring(m), {}), "qhd", odd};
  fd.boundary_witness = odd ? half_twist(n, 1, n) : BraidWord(n);
  check_gates(fd.arrangement, germ_data(k, 1), true);
  if (!conjugate_check(boundary_braid(scott_wiring(k, m % 2)), boundary_braid(fd.arrangement.diagram),
                       fd.boundary_witness))
    throw GateFailure("boundary gate: the QHD boundary is not the Scott boundary under the witness");
  return fd;
}

// ---- the move script ---------------------------------------------------------

namespace {

// Emits moves while replaying them, so each index can be checked against
// the diagram it acts on.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(WiringDiagram d) : cur_(std::move(d)) {}

  void fwd(const std::string& kind, std::size_t pos, std::vector<int> params) {
    step({kind, pos, std::move(params), Direction::Forward});
  }
  void bwd(const std::string& kind, std::size_t pos, std::vector<int> params) {
    step({kind, pos, std::move(params), Direction::Backward});
  }
  std::size_t last_of(const Element& e) const {
    for (std::size_t i = cur_.elements.size(); i-- > 0;)
      if (cur_.elements[i] == e) return i;
    throw Error("script builder: " + e.to_string() + " not found");
  }
  std::size_t first_of(const Element& e) const {
    for (std::size_t i = 0; i < cur_.elements.size(); ++i)
      if (cur_.elements[i] == e) return i;
    throw Error("script builder: " + e.to_string() + " not found");
  }
  std::vector<MoveInstance> take() { return std::move(moves_); }

 private:
  void step(MoveInstance m) {
    try {
      cur_ = apply(cur_, m, false).diagram;
    } catch (const NotApplicable& e) {
      throw Error("script builder: step " + std::to_string(moves_.size() + 1) + " " +
                  m.to_string() + ": " + e.what());
    }
    moves_.push_back(std::move(m));
  }

  WiringDiagram cur_;
  std::vector<MoveInstance> moves_;
};

}  // namespace

std::vector<MoveInstance> qhd_script(int k) {
  const int m = m_of(k);
  if (m % 2 != 0) throw Error("qhd_script supports even m = k+7 only");
  const int n = 2 * m;
  ScriptBuilder b(scott_wiring(k, 0));

  // (a) split the full multipoint, then merge I[1,m-1] with the strand below.
  std::size_t p = b.last_of(Element::I(1, n));
  b.fwd("M4", p, {2, 1, m - 1, n});
  b.fwd("M2", p + 1, {1, 1, m - 1, n, m});
  b.bwd("M5", p, {2, 1, m});
  // I[1,m] commutes left past the copies of I[m+1,2m].
  for (int r = 0; r < m - 4; ++r) b.fwd("M1", p - 1 - r, {0});

  // Slide the bottom multipoints up one by one, merging each with a strand
  // of double points.
  for (int r = 1; r <= m - 4; ++r) {
    std::size_t q = b.last_of(Element::I(m + 1, n));
    b.fwd("M2", q + 1, {0, r + 1, m, n, r + 2});
    b.fwd("M7", q, {1, r + 2, m, n});
    b.bwd("M5", q + 1, {0, r + 1, r + m + 1});
  }

  // (c) slide I[1,m] down past the tangency nest.
  b.fwd("M1", 1, {0});
  b.fwd("M11", 0, {0, 1, n});
  const std::size_t L = static_cast<std::size_t>(m * (m - 1));

  // (d) move strand m+1 between the two bottom multipoints.
  b.fwd("M5", L + 1, {0, m + 1, n});
  b.bwd("M5", L + 2, {1, m + 1, n});

  // (e) slide-merge I[m+1,2m] with the double points on strand m-2.
  b.fwd("M2", L + 3, {0, m - 2, m, n, m - 1});
  b.fwd("M7", L + 2, {1, m - 1, m, n});
  b.bwd("M5", L + 3, {0, m - 2, n - 2});

  // (f) the same for I[m+2,2m], leaving the node I[m,m+1] behind.
  b.fwd("M2", L + 2, {0, m - 1, m, n, m});
  b.fwd("M2", L + 2, {1, m, m, n, m + 1});
  b.fwd("M2", L + 2, {2, m});
  b.fwd("M1", L + 1, {0});
  b.fwd("M7", L + 2, {1, m + 1, m + 1, n});
  b.fwd("M2", L + 4, {1, m - 1, m - 1, n - 1, m});
  b.fwd("M2", L + 4, {2, m - 1});
  b.fwd("M1", L + 3, {0});
  b.bwd("M5", L + 4, {0, m, n - 1});

  // (g) peel the innermost tangency and swap it with the node.
  b.fwd("M3", L, {0, 1, n});
  const std::size_t t = b.first_of(Element::T(m));
  b.fwd("M9", t, {0, m});

  // (h) pass I[m-1,m] through T[m], then merge what is left into I[m,2m].
  b.fwd("M1", t + 2, {0});
  b.fwd("M10", t + 1, {1, m - 1});
  b.bwd("M2", t + 4, {2, m});
  b.bwd("M2", t + 4, {1, m, m, n, m + 1});
  b.bwd("M5", t + 4, {1, m, n});
  return b.take();
}

// ---- signatures --------------------------------------------------------------

Signature combinatorial_signature(const Arrangement& a) {
  auto inc = incidence(a);
  Signature s;
  for (std::size_t j = 0; j < inc.intersection_columns; ++j) {
    std::vector<std::pair<std::string, int>> prof;
    for (std::size_t r = 0; r < inc.rows.size(); ++r)
      if (inc.entries[r][j]) prof.emplace_back(inc.rows[r], inc.entries[r][j]);
    s.profiles.push_back(std::move(prof));
  }
  std::sort(s.profiles.begin(), s.profiles.end());
  for (std::size_t r = 0; r < inc.rows.size(); ++r)
    s.weights.emplace_back(inc.rows[r],
                           std::accumulate(inc.entries[r].begin(), inc.entries[r].end(), 0));
  std::sort(s.weights.begin(), s.weights.end());
  for (const auto& [c, f] : a.free_points)
    if (f > 0) s.free_points.emplace_back(c, f);
  return s;
}

nlohmann::json germ_to_json(const GermData& g) {
  nlohmann::json pairs = nlohmann::json::object();
  auto comps = g.components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      pairs[comps[i] + "," + comps[j]] = g.pairwise(comps[i], comps[j]);
  nlohmann::json w = nlohmann::json::object();
  for (const auto& c : comps) w[c] = g.weight(c);
  return {{"k", g.k},         {"n", g.n},     {"blues", g.blues}, {"reds", g.reds},
          {"strands", g.strands()}, {"weights", w}, {"pairwise", pairs}};
}

nlohmann::json signature_to_json(const Signature& s) {
  nlohmann::json profiles = nlohmann::json::array();
  for (const auto& p : s.profiles) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [c, k] : p) o[c] = k;
    profiles.push_back(o);
  }
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [c, k] : s.weights) w[c] = k;
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [c, k] : s.free_points) f[c] = k;
  return {{"profiles", profiles}, {"weights", w}, {"free_points", f}};
}

}  // namespace braidwire
