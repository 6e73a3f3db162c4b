#include "service.hpp"

#include <chrono>
#include <ctime>
#include <random>

#include <httplib.h>

#include "braidwire/error.hpp"
#include "braidwire/families.hpp"
#include "render.hpp"

namespace braidwire::tools {

namespace {

using nlohmann::json;

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Reply error_reply(int status, const std::string& kind, const std::string& message, const std::string& nf_hash = {}) {
  Reply r{status, {{"error", kind}, {"reason", message}}, std::nullopt};
  if (!nf_hash.empty()) r.body["nf_hash"] = nf_hash;
  return r;
}

using Weights = std::map<std::string, int>;

struct State {
  WiringDiagram diagram;
  DiagramCertificate cert;
  BoundaryData invariants;
  std::string hash;
  // Moves change the intersections but not the weights, so free points
  // make up whatever the intersections no longer carry. A component whose
  // intersections exceed its weight is listed in overweight.
  Weights free_points;
  std::vector<std::string> overweight;
};

void balance(State& s, const Weights& target) {
  const Weights at = weights(Arrangement{s.diagram, {}});
  s.free_points.clear();
  s.overweight.clear();
  for (const auto& [c, w] : target) {
    const int rest = w - at.at(c);
    if (rest > 0) s.free_points[c] = rest;
    if (rest < 0) s.overweight.push_back(c);
  }
}

State make_state(WiringDiagram d, const Weights& target) {
  State s;
  s.cert = certify(d);
  s.invariants = boundary_invariants(d);
  s.hash = diagram_hash(d);
  s.diagram = std::move(d);
  balance(s, target);
  return s;
}

}  // namespace

struct SessionStore::Session {
  std::string id;
  std::string provenance = "user";
  Weights weights;
  std::vector<State> states;  // states[0] is the initial diagram
  std::vector<TraceStep> steps;
  std::string created, modified;
  mutable std::shared_mutex mu;

  const State& current() const { return states.back(); }

  Trace trace() const {
    Trace t;
    t.initial = states.front().diagram;
    t.steps = steps;
    t.conjugator = BraidWord(t.initial.strands);
    for (const auto& s : steps)
      if (s.conjugator) t.conjugator.append(*s.conjugator);
    t.final_diagram = current().diagram;
    return t;
  }

  json state_json() const {
    const State& s = current();
    Arrangement a{s.diagram, s.free_points};
    json j{{"id", id},
           {"nf_hash", s.invariants.nf_hash},
           {"hash", s.hash},
           {"provenance", provenance},
           {"diagram", print_diagram(s.diagram)},
           {"diagram_json", diagram_to_json(s.diagram)},
           {"free_points", s.free_points},
           {"weights", weights},
           {"overweight", s.overweight},
           {"invariants", boundary_to_json(s.invariants)},
           {"homology", homology_to_json(homology(a))},
           {"steps", steps.size()},
           {"created", created},
           {"modified", modified}};
    return j;
  }
};

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04llx%012llx", static_cast<unsigned long long>(++counter_ & 0xffff),
                static_cast<unsigned long long>(rng() & 0xffffffffffffULL));
  return buf;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Reply SessionStore::create(const std::string& body) {
  auto s = std::make_shared<Session>();
  WiringDiagram d;
  Weights free;
  try {
    json req = json::parse(body, nullptr, false);
    if (req.is_discarded() || req.is_string()) {
      d = parse_diagram(req.is_string() ? req.get<std::string>() : body);
    } else if (!req.is_object()) {
      return error_reply(400, "request", "expected DSL text or a JSON object");
    } else if (req.contains("family")) {
      const std::string fam = req.at("family").get<std::string>();
      const int k = req.at("k").get<int>();
      FamilyDiagram fd;
      if (fam == "scott")
        fd = scott_diagram(k);
      else if (fam == "qhd")
        fd = qhd_diagram(k, req.value("allow_experimental", false));
      else
        return error_reply(400, "request", "unknown family " + fam);
      d = fd.arrangement.diagram;
      free = fd.arrangement.free_points;
      s->provenance = fd.provenance;
    } else if (req.contains("diagram")) {
      const json& dj = req.at("diagram");
      d = dj.is_string() ? parse_diagram(dj.get<std::string>()) : diagram_from_json(dj);
      if (req.contains("free_points")) free = req.at("free_points").get<Weights>();
    } else {
      return error_reply(400, "request", "missing \"diagram\" or \"family\"");
    }
    require_valid(d);
    // Also rejects bad free point names or counts.
    s->weights = weights(Arrangement{d, free});
    s->states.push_back(make_state(std::move(d), s->weights));
  } catch (const json::exception& e) {
    return error_reply(400, "request", e.what());
  } catch (const GateFailure& e) {
    return error_reply(422, e.kind(), e.what());
  } catch (const Error& e) {
    return error_reply(422, e.kind(), e.what());
  }
  s->created = s->modified = now_utc();
  {
    std::lock_guard lock(mu_);
    s->id = fresh_id();
    sessions_[s->id] = s;
  }
  std::shared_lock lock(s->mu);
  Reply r{201, s->state_json(), std::nullopt};
  return r;
}

Reply SessionStore::get(const std::string& id) const {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::shared_lock lock(s->mu);
  return {200, s->state_json(), std::nullopt};
}

Reply SessionStore::moves(const std::string& id, const std::optional<std::string>& pos) const {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::shared_lock lock(s->mu);
  const State& cur = s->current();
  std::vector<std::size_t> positions;
  if (pos) {
    std::size_t p = 0;
    try {
      std::size_t used = 0;
      const long v = std::stol(*pos, &used);
      if (used != pos->size() || v < 0) throw std::invalid_argument("pos");
      p = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      return error_reply(400, "request", "pos must be a non-negative integer", cur.invariants.nf_hash);
    }
    if (p > cur.diagram.elements.size())
      return error_reply(409, "not_applicable",
                         "position " + *pos + " is past the end of the diagram (" +
                             std::to_string(cur.diagram.elements.size()) + " elements)",
                         cur.invariants.nf_hash);
    positions.push_back(p);
  } else {
    for (std::size_t p = 0; p <= cur.diagram.elements.size(); ++p) positions.push_back(p);
  }
  json list = json::array();
  for (auto p : positions)
    for (const auto& m : list_applicable(cur.diagram, p)) list.push_back(move_to_json(m));
  return {200, {{"nf_hash", cur.invariants.nf_hash}, {"hash", cur.hash}, {"moves", list}}, std::nullopt};
}

Reply SessionStore::apply(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::unique_lock lock(s->mu);
  const State& cur = s->current();
  MoveInstance inst;
  json req;
  try {
    req = json::parse(body);
    inst = move_from_json(req.contains("move") ? req.at("move") : req);
  } catch (const std::exception& e) {
    return error_reply(400, "request", e.what(), cur.invariants.nf_hash);
  }
  // A client may pin the state it was looking at.
  if (req.contains("expected_hash") && req.at("expected_hash").get<std::string>() != cur.hash)
    return error_reply(409, "stale", "session has moved on; refresh before applying", cur.invariants.nf_hash);

  MoveResult r;
  DiagramCertificate next;
  try {
    r = braidwire::apply(cur.diagram, inst, true, &cur.cert, &next);
  } catch (const NotApplicable& e) {
    return error_reply(409, e.kind(), inst.to_string() + ": " + e.what(), cur.invariants.nf_hash);
  } catch (const Error& e) {
    return error_reply(500, e.kind(), e.what(), cur.invariants.nf_hash);
  }
  if (!r.verified) return error_reply(500, "verification", "move was not verified", cur.invariants.nf_hash);

  State st;
  st.cert = std::move(next);
  st.invariants = boundary_invariants(r.diagram);
  st.hash = diagram_hash(r.diagram);
  st.diagram = std::move(r.diagram);
  balance(st, s->weights);
  const std::string before = cur.invariants.nf_hash;
  s->steps.push_back({inst, st.hash, r.guarantee, r.conjugator});
  s->states.push_back(std::move(st));
  s->modified = now_utc();

  json j = s->state_json();
  j["verification"] = {{"verified", true},
                       {"guarantee", to_string(r.guarantee)},
                       {"conjugator", r.conjugator ? letters_to_json(*r.conjugator) : json(nullptr)},
                       {"previous_nf_hash", before},
                       {"boundary_unchanged", before == s->current().invariants.nf_hash}};
  return {200, j, std::nullopt};
}

Reply SessionStore::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::unique_lock lock(s->mu);
  if (s->steps.empty()) return error_reply(409, "empty_history", "nothing to undo", s->current().invariants.nf_hash);
  s->steps.pop_back();
  s->states.pop_back();
  s->modified = now_utc();
  return {200, s->state_json(), std::nullopt};
}

Reply SessionStore::svg(const std::string& id) const {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::shared_lock lock(s->mu);
  Reply r{200, {{"nf_hash", s->current().invariants.nf_hash}}, render_svg(s->current().diagram)};
  return r;
}

Reply SessionStore::trace(const std::string& id) const {
  auto s = find(id);
  if (!s) return error_reply(404, "not_found", "unknown session " + id);
  std::shared_lock lock(s->mu);
  json j = trace_to_json(s->trace());
  j["nf_hash"] = s->current().invariants.nf_hash;
  return {200, j, std::nullopt};
}

json SessionStore::snapshot() const {
  json out = json::array();
  std::lock_guard lock(mu_);
  for (const auto& [id, s] : sessions_) {
    std::shared_lock slock(s->mu);
    out.push_back({{"id", id},
                   {"provenance", s->provenance},
                   {"free_points", s->states.front().free_points},
                   {"created", s->created},
                   {"modified", s->modified},
                   {"trace", trace_to_json(s->trace())}});
  }
  return out;
}

void SessionStore::restore(const json& j) {
  for (const auto& e : j) {
    auto s = std::make_shared<Session>();
    s->id = e.at("id").get<std::string>();
    s->provenance = e.value("provenance", "user");
    const Weights free = e.value("free_points", Weights{});
    s->created = e.value("created", now_utc());
    s->modified = e.value("modified", s->created);
    Trace t = trace_from_json(e.at("trace"));
    // Replaying re-verifies every step; a tampered snapshot is rejected.
    if (!verify_trace(t)) throw Error("snapshot session " + s->id + " does not re-verify");
    s->weights = weights(Arrangement{t.initial, free});
    s->states.push_back(make_state(t.initial, s->weights));
    for (const auto& step : t.steps) {
      MoveResult r = braidwire::apply(s->current().diagram, step.move, true);
      s->states.push_back(make_state(std::move(r.diagram), s->weights));
    }
    s->steps = t.steps;
    std::lock_guard lock(mu_);
    sessions_[s->id] = s;
  }
}

void mount(httplib::Server& server, SessionStore& store) {
  auto send = [](httplib::Response& res, const Reply& r) {
    res.status = r.status;
    if (r.body.contains("nf_hash")) res.set_header("X-Boundary-NF-Hash", r.body.at("nf_hash").get<std::string>());
    if (r.svg)
      res.set_content(*r.svg, "image/svg+xml");
    else
      res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/sessions", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.create(req.body));
  });
  server.Get(R"(/sessions/([^/]+))", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.get(req.matches[1]));
  });
  server.Get(R"(/sessions/([^/]+)/moves)", [&store, send](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::string> pos;
    if (req.has_param("pos")) pos = req.get_param_value("pos");
    send(res, store.moves(req.matches[1], pos));
  });
  server.Post(R"(/sessions/([^/]+)/apply)", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.apply(req.matches[1], req.body));
  });
  server.Post(R"(/sessions/([^/]+)/undo)", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.undo(req.matches[1]));
  });
  server.Get(R"(/sessions/([^/]+)/svg)", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.svg(req.matches[1]));
  });
  server.Get(R"(/sessions/([^/]+)/trace)", [&store, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store.trace(req.matches[1]));
  });
  server.Get("/catalog", [send](const httplib::Request&, httplib::Response& res) {
    send(res, {200, catalog_to_json(), std::nullopt});
  });
}

}  // namespace braidwire::tools
