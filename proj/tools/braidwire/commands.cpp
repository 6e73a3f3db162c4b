#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/error.hpp"
#include "braidwire/families.hpp"
#include "braidwire/homology.hpp"
#include "braidwire/moves.hpp"
#include "render.hpp"
#include "service.hpp"

namespace braidwire::tools {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  bool pretty = false;

  void emit(const json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

std::string slurp(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("empty input from " + path);
  return text;
}

bool looks_like_json(const std::string& text) { return text[text.find_first_not_of(" \t\r\n")] == '{'; }

WiringDiagram diagram_from_text(const std::string& text) {
  if (looks_like_json(text)) return diagram_from_json(json::parse(text));
  return parse_diagram(text);
}

// Free point counts, either from --free or from a "# free: A=1 B=3" line in
// the diagram file (as written by `gen`).
std::map<std::string, int> free_points(const std::string& text, const std::vector<std::string>& flags) {
  std::vector<std::string> items = flags;
  if (items.empty()) {
    static const std::regex line(R"(^\s*#\s*free:(.*)$)");
    std::istringstream is(text);
    std::string l;
    std::smatch m;
    while (std::getline(is, l))
      if (std::regex_match(l, m, line)) {
        std::istringstream ws(m[1].str());
        for (std::string w; ws >> w;) items.push_back(w);
      }
  }
  std::map<std::string, int> out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--free expects NAME=COUNT, got " + it);
    try {
      std::size_t used = 0;
      const int v = std::stoi(it.substr(eq + 1), &used);
      if (used != it.size() - eq - 1) throw std::invalid_argument(it);
      out[it.substr(0, eq)] += v;
    } catch (const std::logic_error&) {
      throw UsageError("--free expects NAME=COUNT, got " + it);
    }
  }
  return out;
}

std::string free_comment(const std::map<std::string, int>& fp) {
  if (fp.empty()) return {};
  std::string s = "# free:";
  for (const auto& [c, n] : fp) s += " " + c + "=" + std::to_string(n);
  return s + "\n";
}

json nf_json(const NormalForm& nf) {
  return {{"strands", nf.strands},
          {"delta_power", nf.delta_power},
          {"factors", nf.factors},
          {"normal_form", nf.to_string()},
          {"word", to_text(to_word(nf))},
          {"hash", nf.digest()}};
}

json error_json(const std::exception& e) {
  json j{{"error", "error"}, {"message", e.what()}};
  if (auto* be = dynamic_cast<const Error*>(&e)) j["error"] = be->kind();
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
  }
  if (auto* se = dynamic_cast<const ScriptError*>(&e)) j["step"] = se->step();
  if (dynamic_cast<const json::exception*>(&e)) j["error"] = "format";
  return j;
}

Direction parse_dir(const std::string& s) {
  if (s == "fwd" || s == "forward") return Direction::Forward;
  if (s == "bwd" || s == "backward") return Direction::Backward;
  throw UsageError("--dir must be fwd or bwd");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wiring diagrams, boundary braids and verified move scripts"};
  app.require_subcommand(1);
  Io io{in, out};
  app.add_flag("--pretty", io.pretty, "Indented output for humans");

  std::string file, file2, word, out_path, move_json, kind, dir = "fwd", host = "127.0.0.1", snapshot;
  std::vector<std::string> free_flags;
  std::vector<int> params;
  int strands = 0, k = 0, n = 1, variant = 0, port = 8080;
  long pos = -1;
  bool b_front = false, b_back = false, b_closed = false, allow_exp = false, show_incidence = false;
  std::function<int()> action;

  auto with_file = [&](CLI::App* c, const char* what = "Diagram file (DSL or JSON), - for stdin") {
    c->add_option("file", file, what)->required();
  };

  auto* parse = app.add_subcommand("parse", "Parse a diagram and print its JSON form");
  with_file(parse);
  parse->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      io.emit({{"diagram", diagram_to_json(d)}, {"text", print_diagram(d)}, {"hash", diagram_hash(d)}});
      return 0;
    };
  });

  auto* validate_cmd = app.add_subcommand("validate", "Check tangency and component legality");
  with_file(validate_cmd);
  validate_cmd->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      auto r = validate(d);
      json vs = json::array();
      for (const auto& v : r.violations) {
        json e{{"code", v.code}, {"message", v.message}};
        e["element"] = v.element == Violation::kChart ? json(nullptr) : json(v.element);
        vs.push_back(e);
      }
      io.emit({{"valid", r.ok()}, {"violations", vs}});
      return r.ok() ? 0 : 1;
    };
  });

  auto* boundary = app.add_subcommand("boundary", "Front, back or closed boundary braid");
  with_file(boundary);
  auto* which = boundary->add_option_group("which");
  which->add_flag("--front", b_front, "Front braid");
  which->add_flag("--back", b_back, "Back braid");
  which->add_flag("--closed", b_closed, "Boundary braid (default)");
  which->require_option(0, 1);
  boundary->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      require_valid(d);
      auto b = boundary_invariants(d);
      const char* name = b_front ? "front" : b_back ? "back" : "closed";
      const BraidWord& w = b_front ? b.front : b_back ? b.back : b.boundary;
      if (io.pretty) out << to_text(w) << '\n';
      io.emit({{"which", name},
               {"strands", w.strands()},
               {"word", to_text(w)},
               {"nf_hash", b.nf_hash},
               {"invariants", boundary_to_json(b)}});
      return 0;
    };
  });

  auto* nf = app.add_subcommand("nf", "Garside normal form of a braid word, or of a diagram's boundary");
  nf->add_option("word", word, "Braid word such as \"s1 s2' s1\"");
  nf->add_option("-n,--strands", strands, "Number of strands for WORD");
  nf->add_option("--diagram", file, "Use the boundary braid of this diagram");
  nf->callback([&] {
    action = [&] {
      BraidWord w;
      if (!file.empty()) {
        auto d = diagram_from_text(slurp(file, in));
        require_valid(d);
        w = boundary_braid(d);
      } else {
        if (strands < 1) throw UsageError("nf needs --strands N (or --diagram FILE)");
        w = parse_word(strands, word);
      }
      io.emit(nf_json(normal_form(w)));
      return 0;
    };
  });

  auto* inv = app.add_subcommand("invariants", "Conjugation invariants of the boundary braid");
  with_file(inv);
  inv->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      require_valid(d);
      auto b = boundary_invariants(d);
      json j = boundary_to_json(b);
      j["components"] = component_names(d);
      j["nf_hash"] = b.nf_hash;
      io.emit(j);
      return 0;
    };
  });

  auto* hom = app.add_subcommand("homology", "Homology of the arrangement's Milnor fiber model");
  with_file(hom);
  hom->add_option("--free", free_flags, "Free points NAME=COUNT (repeatable)");
  hom->add_flag("--incidence", show_incidence, "Include the incidence matrix");
  hom->callback([&] {
    action = [&] {
      const auto text = slurp(file, in);
      Arrangement a{diagram_from_text(text), free_points(text, free_flags)};
      json j = homology_to_json(homology(a));
      if (show_incidence) j["incidence"] = incidence_to_json(incidence(a));
      io.emit(j);
      return 0;
    };
  });

  auto* qhd = app.add_subcommand("qhd-check", "Check the rational homology disk conditions against a germ");
  with_file(qhd);
  qhd->add_option("--free", free_flags, "Free points NAME=COUNT (repeatable)");
  qhd->add_option("-k,--k", k, "Germ parameter k >= -1")->required();
  qhd->add_option("--n", n, "Germ parameter n >= 1");
  qhd->callback([&] {
    action = [&] {
      const auto text = slurp(file, in);
      Arrangement a{diagram_from_text(text), free_points(text, free_flags)};
      io.emit(verdict_to_json(qhd_check(a, germ_data(k, n))));
      return 0;
    };
  });

  auto* move = app.add_subcommand("move", "Apply or list moves");
  move->require_subcommand(1);
  auto* mapply = move->add_subcommand("apply", "Apply one move and verify its guarantee");
  with_file(mapply);
  mapply->add_option("--move", move_json, "Move instance as JSON");
  mapply->add_option("--kind", kind, "Move kind, e.g. M4");
  mapply->add_option("--pos", pos, "Element position");
  mapply->add_option("--variant", variant, "Variant index");
  mapply->add_option("--params", params, "Index parameters")->delimiter(',');
  mapply->add_option("--dir", dir, "fwd or bwd");
  mapply->add_option("-o,--out", out_path, "Also write the new diagram as DSL");
  mapply->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      MoveInstance inst;
      if (!move_json.empty()) {
        inst = move_from_json(json::parse(move_json));
      } else {
        if (kind.empty() || pos < 0) throw UsageError("move apply needs --move JSON or --kind and --pos");
        inst.kind = kind;
        inst.pos = static_cast<std::size_t>(pos);
        inst.params = {variant};
        inst.params.insert(inst.params.end(), params.begin(), params.end());
        inst.dir = parse_dir(dir);
        find_kind(kind);
      }
      const auto before = boundary_invariants(d).nf_hash;
      auto r = apply(d, inst, true);
      const auto after = boundary_invariants(r.diagram).nf_hash;
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << print_diagram(r.diagram) << '\n';
      }
      io.emit({{"move", move_to_json(inst)},
               {"diagram", print_diagram(r.diagram)},
               {"hash", diagram_hash(r.diagram)},
               {"guarantee", to_string(r.guarantee)},
               {"conjugator", r.conjugator ? letters_to_json(*r.conjugator) : json(nullptr)},
               {"verified", r.verified},
               {"nf_hash_before", before},
               {"nf_hash", after}});
      return 0;
    };
  });
  auto* mlist = move->add_subcommand("list", "List applicable move instances");
  with_file(mlist);
  mlist->add_option("--pos", pos, "Only this position");
  mlist->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      require_valid(d);
      json list = json::array();
      const std::size_t lo = pos < 0 ? 0 : static_cast<std::size_t>(pos);
      const std::size_t hi = pos < 0 ? d.elements.size() : lo;
      for (std::size_t p = lo; p <= hi; ++p)
        for (const auto& m : list_applicable(d, p)) list.push_back(move_to_json(m));
      io.emit({{"moves", list}, {"nf_hash", boundary_invariants(d).nf_hash}});
      return 0;
    };
  });

  auto* script = app.add_subcommand("script", "Run or re-verify move scripts");
  script->require_subcommand(1);
  auto* srun = script->add_subcommand("run", "Replay a script and print the verified trace");
  with_file(srun);
  srun->add_option("script", file2, "Script JSON")->required();
  srun->callback([&] {
    action = [&] {
      auto d = diagram_from_text(slurp(file, in));
      auto s = script_from_json(json::parse(slurp(file2, in)));
      auto t = run_script(d, s);
      json j = trace_to_json(t);
      j["verdict"] = verify_trace(t);
      io.emit(j);
      return j["verdict"].get<bool>() ? 0 : 1;
    };
  });
  auto* sverify = script->add_subcommand("verify", "Re-verify an exported trace offline");
  with_file(sverify, "Trace JSON, - for stdin");
  sverify->callback([&] {
    action = [&] {
      const bool ok = verify_trace(trace_from_json(json::parse(slurp(file, in))));
      io.emit({{"verdict", ok}});
      return ok ? 0 : 1;
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate family diagrams and the move script");
  gen->require_subcommand(1);
  auto* gscott = gen->add_subcommand("scott", "Scott deformation diagram (DSL)");
  gscott->add_option("-k,--k", k, "Germ parameter k >= -1")->required();
  gscott->callback([&] {
    action = [&] {
      auto fd = scott_diagram(k);
      out << free_comment(fd.arrangement.free_points) << print_diagram(fd.arrangement.diagram) << '\n';
      return 0;
    };
  });
  auto* gqhd = gen->add_subcommand("qhd", "QHD arrangement diagram (DSL)");
  gqhd->add_option("-k,--k", k, "Germ parameter k >= -1")->required();
  gqhd->add_flag("--allow-experimental,--experimental", allow_exp, "Allow the odd-m construction");
  gqhd->callback([&] {
    action = [&] {
      auto fd = qhd_diagram(k, allow_exp);
      if (fd.experimental) out << "# experimental: boundary conjugate to Scott by " << to_text(fd.boundary_witness) << '\n';
      out << free_comment(fd.arrangement.free_points) << print_diagram(fd.arrangement.diagram) << '\n';
      return 0;
    };
  });
  auto* gscript = gen->add_subcommand("script", "Move script from Scott to QHD (JSON)");
  gscript->add_option("-k,--k", k, "Germ parameter k >= -1, k+7 even")->required();
  gscript->callback([&] {
    action = [&] {
      io.emit(script_to_json(qhd_script(k)));
      return 0;
    };
  });

  auto* render = app.add_subcommand("render", "Draw a diagram as SVG");
  with_file(render);
  render->add_option("-o,--out", out_path, "Write to a file instead of stdout");
  render->callback([&] {
    action = [&] {
      const auto svg = render_svg(diagram_from_text(slurp(file, in)));
      if (out_path.empty()) {
        out << svg;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << svg;
      }
      return 0;
    };
  });

  auto* serve = app.add_subcommand("serve", "Run the JSON-over-HTTP session service");
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--snapshot", snapshot, "JSON snapshot file, loaded at start and written on POST /snapshot");
  serve->callback([&] {
    action = [&] {
      SessionStore store;
      if (!snapshot.empty()) {
        std::ifstream f(snapshot);
        if (f) store.restore(json::parse(f));
      }
      httplib::Server server;
      mount(server, store);
      if (!snapshot.empty())
        server.Post("/snapshot", [&](const httplib::Request&, httplib::Response& res) {
          std::ofstream f(snapshot);
          f << store.snapshot().dump();
          res.set_content(json{{"written", snapshot}}.dump(), "application/json");
        });
      err << "listening on " << host << ':' << port << std::endl;
      if (!server.listen(host, port)) throw UsageError("cannot listen on " + host + ":" + std::to_string(port));
      return 0;
    };
  });

  // Lets global flags such as --pretty follow the subcommand.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    io.emit(error_json(e));
    return 1;
  }
}

}  // namespace braidwire::tools
