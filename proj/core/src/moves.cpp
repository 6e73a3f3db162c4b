#include "braidwire/moves.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/error.hpp"
#include "rules.hpp"

namespace braidwire {

const char* to_string(Guarantee g) {
  switch (g) {
    case Guarantee::WORD:
      return "WORD";
    case Guarantee::EXACT:
      return "EXACT";
    case Guarantee::CONJ:
      return "CONJ";
  }
  return "?";
}

Guarantee guarantee_from_string(const std::string& s) {
  if (s == "WORD") return Guarantee::WORD;
  if (s == "EXACT") return Guarantee::EXACT;
  if (s == "CONJ") return Guarantee::CONJ;
  throw Error("unknown guarantee '" + s + "'");
}

namespace {

struct KindText {
  const char* id;
  const char* name;
  const char* description;
  Guarantee guarantee;
};

const KindText kKinds[] = {
    {"M1", "COMMUTE", "commute adjacent elements on disjoint sets of strands", Guarantee::WORD},
    {"M2", "X_SPLIT", "split or merge a grid of double points", Guarantee::EXACT},
    {"M3", "TN_PEEL", "peel one tangency off a tangency nest", Guarantee::EXACT},
    {"M4", "SPLIT_MULTI", "split a multipoint into two multipoints and a grid", Guarantee::WORD},
    {"M5", "SPLIT_ONE", "move the top or bottom strand off a multipoint", Guarantee::WORD},
    {"M6", "SPLIT_ONE_MID", "move a middle strand off a multipoint", Guarantee::WORD},
    {"M7", "SLIDE_I_PAST_X", "slide a multipoint through a block of parallel strands", Guarantee::WORD},
    {"M8", "SWITCH_NESTED_I", "switch two nested multipoints", Guarantee::WORD},
    {"M9", "SWAP_T_I", "swap a tangency (or nest) with an intersection on the same strands", Guarantee::WORD},
    {"M10", "T_PASS", "move a double point up or down through a tangency", Guarantee::WORD},
    {"M11", "TN_PASS_MULTI", "move a multipoint up or down through a tangency nest", Guarantee::WORD},
    {"M12", "TN_PASS_STRAND", "move a strand through a tangency nest", Guarantee::WORD},
    {"M13", "T_HURWITZ", "switch the order of a double point and a tangency", Guarantee::WORD},
    {"M14", "TN_SIDE_SWAP", "move a multipoint to the other side of a tangency nest", Guarantee::WORD},
    {"M15", "SLIDE_SIGMA", "move a braid letter through a multipoint", Guarantee::WORD},
    {"M16", "EDGE_TRIM_LEFT", "remove or insert a braid letter at the left edge", Guarantee::EXACT},
    {"M17", "EDGE_TRIM_RIGHT", "remove or insert a braid letter at the right edge", Guarantee::CONJ},
};

std::vector<MoveKind> build_catalog() {
  std::vector<MoveKind> out;
  for (const auto& k : kKinds) {
    MoveKind mk{k.id, k.name, k.description, k.guarantee, {}};
    const std::string id = k.id;
    if (const auto* pv = detail::pattern_variants(id)) {
      for (std::size_t v = 0; v < pv->size(); ++v)
        mk.variants.push_back({static_cast<int>(v), (*pv)[v].guarantee, (*pv)[v].param_names,
                               (*pv)[v].pattern});
    } else if (id == "M1") {
      mk.variants.push_back({0, Guarantee::WORD, {}, "e f <-> f e (disjoint supports)"});
    } else if (id == "M16") {
      mk.variants.push_back({0, Guarantee::EXACT, {"gen", "sign"}, "s_gen^sign ... <-> ..."});
    } else {
      mk.variants.push_back({0, Guarantee::CONJ, {"gen", "sign"}, "... s_gen^sign <-> ..."});
    }
    out.push_back(std::move(mk));
  }
  return out;
}

std::string seq_text(const std::vector<Element>& s) {
  std::string out;
  for (const auto& e : s) out += (out.empty() ? "" : " ") + e.to_string();
  return out.empty() ? "(nothing)" : out;
}

bool disjoint(const Element& a, const Element& b) { return a.high() < b.low() || b.high() < a.low(); }

void check_letter(int n, int gen, int sign) {
  if (gen < 1 || gen >= n) throw NotApplicable("generator out of range");
  if (sign != 1 && sign != -1) throw NotApplicable("sign must be +1 or -1");
}

WiringDiagram rewrite(const WiringDiagram& d, const MoveInstance& inst, const Rewrite& rw) {
  WiringDiagram out{d.strands, d.chart, {}};
  out.elements.reserve(d.elements.size() - rw.from.size() + rw.to.size());
  out.elements.insert(out.elements.end(), d.elements.begin(),
                      d.elements.begin() + static_cast<std::ptrdiff_t>(inst.pos));
  out.elements.insert(out.elements.end(), rw.to.begin(), rw.to.end());
  out.elements.insert(out.elements.end(),
                      d.elements.begin() + static_cast<std::ptrdiff_t>(inst.pos + rw.from.size()),
                      d.elements.end());
  // A letter entering or leaving the left edge permutes the chart.
  if (inst.kind == "M16") std::swap(out.chart[inst.params[1] - 1], out.chart[inst.params[1]]);
  return out;
}

}  // namespace

const std::vector<MoveKind>& catalog() {
  static const std::vector<MoveKind> c = build_catalog();
  return c;
}

const MoveKind& find_kind(const std::string& id) {
  for (const auto& k : catalog())
    if (k.id == id) return k;
  throw NotApplicable("unknown move kind '" + id + "'");
}

std::string MoveInstance::to_string() const {
  std::ostringstream os;
  os << kind << "[";
  for (std::size_t k = 0; k < params.size(); ++k) os << (k ? "," : "") << params[k];
  os << "]@" << pos << (dir == Direction::Forward ? " fwd" : " bwd");
  return os.str();
}

Rewrite instantiate(const WiringDiagram& d, const MoveInstance& inst) {
  const MoveKind& kind = find_kind(inst.kind);
  if (inst.params.empty()) throw NotApplicable("params must start with the variant index");
  const int v = inst.params[0];
  if (v < 0 || v >= static_cast<int>(kind.variants.size()))
    throw NotApplicable(inst.kind + " has no variant " + std::to_string(v));
  const int n = d.strands;
  const auto& el = d.elements;
  if (inst.pos > el.size()) throw NotApplicable("position beyond the end of the diagram");
  const bool fwd = inst.dir == Direction::Forward;

  Rewrite rw;
  rw.guarantee = kind.variants[v].guarantee;
  std::vector<int> p(inst.params.begin() + 1, inst.params.end());

  if (inst.kind == "M1") {
    if (!p.empty()) throw NotApplicable("M1 takes no index params");
    if (inst.pos + 1 >= el.size()) throw NotApplicable("M1 needs two elements at the position");
    const Element& a = el[inst.pos];
    const Element& b = el[inst.pos + 1];
    if (!disjoint(a, b))
      throw NotApplicable(a.to_string() + " and " + b.to_string() + " share strands");
    rw.from = {a, b};
    rw.to = {b, a};
    return rw;
  }
  if (inst.kind == "M16" || inst.kind == "M17") {
    if (p.size() != 2) throw NotApplicable(inst.kind + " takes params [0,gen,sign]");
    check_letter(n, p[0], p[1]);
    const Element s = Element::S(p[0], p[1]);
    const bool left = inst.kind == "M16";
    std::size_t want = left ? 0 : (fwd ? (el.empty() ? 0 : el.size() - 1) : el.size());
    if (left ? inst.pos != 0 : (inst.pos != want || (fwd && el.empty())))
      throw NotApplicable(std::string("edge trim must act at the ") + (left ? "left" : "right") + " edge");
    if (fwd) {
      if (el.empty() || el[inst.pos] != s)
        throw NotApplicable("expected " + s.to_string() + " at the edge");
      rw.from = {s};
    } else {
      rw.to = {s};
    }
    if (!left) {
      BraidWord c(n);
      c.push(p[0], fwd ? -p[1] : p[1]);
      rw.conjugator = c;
    }
    return rw;
  }

  const auto& variant = (*detail::pattern_variants(inst.kind))[static_cast<std::size_t>(v)];
  detail::Sides sides = variant.sides(n, p);
  rw.from = fwd ? sides.lhs : sides.rhs;
  rw.to = fwd ? sides.rhs : sides.lhs;
  if (inst.pos + rw.from.size() > el.size())
    throw NotApplicable("pattern " + seq_text(rw.from) + " runs past the end of the diagram");
  for (std::size_t k = 0; k < rw.from.size(); ++k)
    if (el[inst.pos + k] != rw.from[k])
      throw NotApplicable("expected " + rw.from[k].to_string() + " at element " +
                          std::to_string(inst.pos + k) + ", found " + el[inst.pos + k].to_string());
  return rw;
}

std::optional<std::string> why_not_applicable(const WiringDiagram& d, const MoveInstance& inst) {
  try {
    Rewrite rw = instantiate(d, inst);
    auto r = validate(rewrite(d, inst, rw));
    if (!r.ok()) return "result is not a valid diagram: " + r.summary();
    return std::nullopt;
  } catch (const NotApplicable& e) {
    return std::string(e.what());
  }
}

std::vector<MoveInstance> list_applicable(const WiringDiagram& d, std::size_t position) {
  std::vector<MoveInstance> out;
  if (position > d.elements.size()) return out;
  auto consider = [&](MoveInstance m) {
    if (std::find(out.begin(), out.end(), m) != out.end()) return;
    if (!why_not_applicable(d, m)) out.push_back(std::move(m));
  };
  const int n = d.strands;
  const auto& el = d.elements;

  consider({"M1", position, {0}, Direction::Forward});
  for (const auto& kind : catalog()) {
    const auto* pv = detail::pattern_variants(kind.id);
    if (!pv) continue;
    for (std::size_t v = 0; v < pv->size(); ++v)
      for (auto& cand : (*pv)[v].propose(el, position, n)) {
        std::vector<int> params{static_cast<int>(v)};
        params.insert(params.end(), cand.begin(), cand.end());
        try {
          consider({kind.id, position, params, Direction::Forward});
          consider({kind.id, position, params, Direction::Backward});
        } catch (const NotApplicable&) {
        }
      }
  }
  if (position == 0 && !el.empty() && el[0].type == ElementType::S)
    consider({"M16", 0, {0, el[0].a, el[0].sign}, Direction::Forward});
  if (!el.empty() && position == el.size() - 1 && el.back().type == ElementType::S)
    consider({"M17", position, {0, el.back().a, el.back().sign}, Direction::Forward});
  for (int g = 1; g < n; ++g)
    for (int s : {1, -1}) {
      if (position == 0) consider({"M16", 0, {0, g, s}, Direction::Backward});
      if (position == el.size()) consider({"M17", position, {0, g, s}, Direction::Backward});
    }
  return out;
}

DiagramCertificate certify(const WiringDiagram& d) {
  DiagramCertificate c;
  BraidWord f = front(d);
  BraidWord b = back(d);
  c.front = normal_form(f);
  c.back = normal_form(b);
  BraidWord boundary = compose(invert(b), f);
  c.boundary_reduced = free_reduce(boundary);
  c.exponent_sum = exponent_sum(boundary);
  c.cycle_type = cycle_type(permutation(boundary));
  c.linking = linking_matrix(boundary, right_chart(d));
  return c;
}

MoveResult apply(const WiringDiagram& d, const MoveInstance& inst, bool verify) {
  return apply(d, inst, verify, nullptr, nullptr);
}

MoveResult apply(const WiringDiagram& d, const MoveInstance& inst, bool verify,
                 const DiagramCertificate* before, DiagramCertificate* after) {
  require_valid(d);
  Rewrite rw = instantiate(d, inst);
  MoveResult res;
  res.diagram = rewrite(d, inst, rw);
  auto report = validate(res.diagram);
  if (!report.ok()) throw NotApplicable("result is not a valid diagram: " + report.summary());
  res.guarantee = rw.guarantee;
  res.conjugator = rw.conjugator;
  if (!verify) return res;

  DiagramCertificate own;
  if (!before) {
    own = certify(d);
    before = &own;
  }
  DiagramCertificate post = certify(res.diagram);
  const std::string where = inst.to_string() + ": ";
  switch (rw.guarantee) {
    case Guarantee::WORD:
      if (!(before->front == post.front))
        throw VerificationFailure(where + "front braid changed under a WORD move");
      if (!(before->back == post.back))
        throw VerificationFailure(where + "back braid changed under a WORD move");
      break;
    case Guarantee::EXACT:
      if (!(before->boundary_reduced == post.boundary_reduced))
        throw VerificationFailure(where + "boundary word changed under an EXACT move");
      break;
    case Guarantee::CONJ:
      if (!rw.conjugator ||
          !conjugate_check(before->boundary_reduced, post.boundary_reduced, *rw.conjugator))
        throw VerificationFailure(where + "conjugator witness does not check");
      break;
  }
  if (before->exponent_sum != post.exponent_sum)
    throw VerificationFailure(where + "exponent sum changed");
  if (before->cycle_type != post.cycle_type)
    throw VerificationFailure(where + "permutation cycle type changed");
  if (!(before->linking == post.linking))
    throw VerificationFailure(where + "linking matrix changed");
  res.verified = true;
  if (after) *after = std::move(post);
  return res;
}

Trace run_script(const WiringDiagram& d, const std::vector<MoveInstance>& script) {
  require_valid(d);
  Trace t;
  t.initial = d;
  t.conjugator = BraidWord(d.strands);
  WiringDiagram cur = d;
  DiagramCertificate cert = certify(d);
  for (std::size_t k = 0; k < script.size(); ++k) {
    DiagramCertificate next;
    MoveResult r;
    try {
      r = apply(cur, script[k], true, &cert, &next);
    } catch (const NotApplicable& e) {
      throw ScriptError(k + 1, script[k].to_string() + " not applicable: " + e.what());
    } catch (const VerificationFailure& e) {
      throw ScriptError(k + 1, std::string("verification failed: ") + e.what());
    }
    if (r.conjugator) t.conjugator.append(*r.conjugator);
    t.steps.push_back({script[k], diagram_hash(r.diagram), r.guarantee, r.conjugator});
    cur = std::move(r.diagram);
    cert = std::move(next);
  }
  t.final_diagram = cur;
  if (!conjugate_check(boundary_braid(t.initial), boundary_braid(cur), t.conjugator))
    throw VerificationFailure("final boundary is not the initial one conjugated by the accumulated witness");
  return t;
}

bool verify_trace(const Trace& t) {
  try {
    if (!validate(t.initial).ok()) return false;
    WiringDiagram cur = t.initial;
    BraidWord acc(t.initial.strands);
    DiagramCertificate cert = certify(cur);
    for (const auto& step : t.steps) {
      DiagramCertificate next;
      MoveResult r = apply(cur, step.move, true, &cert, &next);
      if (!r.verified || diagram_hash(r.diagram) != step.hash) return false;
      if (r.guarantee != step.guarantee) return false;
      if (r.conjugator.has_value() != step.conjugator.has_value()) return false;
      if (r.conjugator) {
        if (!(*r.conjugator == *step.conjugator)) return false;
        acc.append(*r.conjugator);
      }
      cur = std::move(r.diagram);
      cert = std::move(next);
    }
    if (!(acc == t.conjugator)) return false;
    if (diagram_hash(cur) != diagram_hash(t.final_diagram)) return false;
    return conjugate_check(boundary_braid(t.initial), boundary_braid(cur), acc);
  } catch (const std::exception&) {
    return false;
  }
}

// JSON keeps the variant separate from the index params and defaults it to 0:
//   {"kind":"M10","pos":4,"variant":0,"params":[1],"dir":"fwd"}
nlohmann::json move_to_json(const MoveInstance& m) {
  std::vector<int> idx;
  if (!m.params.empty()) idx.assign(m.params.begin() + 1, m.params.end());
  return {{"kind", m.kind},
          {"pos", m.pos},
          {"variant", m.params.empty() ? 0 : m.params[0]},
          {"params", idx},
          {"dir", m.dir == Direction::Forward ? "fwd" : "bwd"}};
}

MoveInstance move_from_json(const nlohmann::json& j) {
  try {
    MoveInstance m;
    m.kind = j.at("kind").get<std::string>();
    m.pos = j.at("pos").get<std::size_t>();
    m.params = {j.value("variant", 0)};
    for (int x : j.value("params", std::vector<int>{})) m.params.push_back(x);
    const std::string dir = j.value("dir", "fwd");
    if (dir == "fwd")
      m.dir = Direction::Forward;
    else if (dir == "bwd")
      m.dir = Direction::Backward;
    else
      throw Error("dir must be \"fwd\" or \"bwd\"");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed move JSON: ") + e.what());
  }
}

nlohmann::json script_to_json(const std::vector<MoveInstance>& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : s) arr.push_back(move_to_json(m));
  return arr;
}

std::vector<MoveInstance> script_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("script JSON must be an array of moves");
  std::vector<MoveInstance> out;
  for (const auto& m : j) out.push_back(move_from_json(m));
  return out;
}

nlohmann::json trace_to_json(const Trace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json js = {{"move", move_to_json(s.move)},
                         {"hash", s.hash},
                         {"guarantee", to_string(s.guarantee)}};
    js["conjugator"] = s.conjugator ? letters_to_json(*s.conjugator) : nlohmann::json(nullptr);
    steps.push_back(std::move(js));
  }
  return {{"initial", diagram_to_json(t.initial)},
          {"initial_hash", diagram_hash(t.initial)},
          {"steps", steps},
          {"conjugator", letters_to_json(t.conjugator)},
          {"final", diagram_to_json(t.final_diagram)},
          {"final_hash", diagram_hash(t.final_diagram)}};
}

Trace trace_from_json(const nlohmann::json& j) {
  try {
    Trace t;
    t.initial = diagram_from_json(j.at("initial"));
    const int n = t.initial.strands;
    for (const auto& s : j.at("steps")) {
      TraceStep st;
      st.move = move_from_json(s.at("move"));
      st.hash = s.at("hash").get<std::string>();
      st.guarantee = guarantee_from_string(s.at("guarantee").get<std::string>());
      if (s.contains("conjugator") && !s.at("conjugator").is_null())
        st.conjugator = word_from_json(n, s.at("conjugator"));
      t.steps.push_back(std::move(st));
    }
    t.conjugator = word_from_json(n, j.at("conjugator"));
    t.final_diagram = diagram_from_json(j.at("final"));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed trace JSON: ") + e.what());
  }
}

nlohmann::json catalog_to_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& k : catalog()) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : k.variants)
      vs.push_back({{"index", v.index},
                    {"guarantee", to_string(v.guarantee)},
                    {"params", v.params},
                    {"pattern", v.pattern}});
    arr.push_back({{"id", k.id},
                   {"name", k.name},
                   {"description", k.description},
                   {"guarantee", to_string(k.guarantee)},
                   {"variants", vs}});
  }
  return arr;
}

}  // namespace braidwire
