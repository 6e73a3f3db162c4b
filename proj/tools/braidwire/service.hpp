#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/homology.hpp"
#include "braidwire/moves.hpp"

namespace httplib {
class Server;
}

namespace braidwire::tools {

struct Reply {
  int status = 200;
  nlohmann::json body;
  // Set for the SVG endpoint; the body is then ignored.
  std::optional<std::string> svg;
};

// In-memory sessions behind the HTTP endpoints. Each handler returns the
// status and JSON body, so the routing layer stays thin and tests can call
// the handlers directly.
class SessionStore {
 public:
  Reply create(const std::string& body);
  Reply get(const std::string& id) const;
  Reply moves(const std::string& id, const std::optional<std::string>& pos) const;
  Reply apply(const std::string& id, const std::string& body);
  Reply undo(const std::string& id);
  Reply svg(const std::string& id) const;
  Reply trace(const std::string& id) const;
  // Writes every session to a JSON snapshot, or loads one back.
  nlohmann::json snapshot() const;
  void restore(const nlohmann::json& j);

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

void mount(httplib::Server& server, SessionStore& store);

}  // namespace braidwire::tools
