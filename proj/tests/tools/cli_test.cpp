#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidwire/boundary.hpp"
#include "braidwire/families.hpp"
#include "commands.hpp"

using namespace braidwire;
using nlohmann::json;

namespace {

const char* kExample31 = "strands 4; comps A:1,4 B:2,3; TN[1,4]; (I[3,4])^3; I[1,4]";

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = tools::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "braidwire_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, BoundaryClosedExample31) {
  auto r = cli({"boundary", "--closed", "-"}, kExample31);
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto w = parse_word(4, r.j()["word"].get<std::string>());
  auto expected = compose(compose(half_twist(4, 1, 4), parse_word(4, "s3 s3 s3 s2 s3 s1 s2")),
                          compose(parse_word(4, "s1' s3' s3 s3 s3"), half_twist(4, 1, 4)));
  EXPECT_TRUE(equal(w, expected));
  EXPECT_EQ(r.j()["nf_hash"], boundary_invariants(parse_diagram(kExample31)).nf_hash);
  EXPECT_EQ(r.j()["invariants"]["exponent_sum"], 20);
}

TEST(Cli, FrontAndBackAreExclusive) {
  EXPECT_EQ(cli({"boundary", "--front", "--back", "-"}, kExample31).code, 2);
  auto f = cli({"boundary", "--front", "-"}, kExample31);
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(f.j()["word"], "s1' s3' s3 s3 s3 s1 s2 s3 s1 s2 s1");
}

TEST(Cli, EmptyInputIsUsageError) {
  auto r = cli({"parse", "-"}, "");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"nosuch"}).code, 2);
  EXPECT_EQ(cli({"parse", "/nonexistent/file.wd"}).code, 2);
}

TEST(Cli, ParseErrorIsDomainError) {
  auto r = cli({"parse", "-"}, "strands 3; comps A:1,2,3; Q[1]");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.j()["error"], "parse");
  EXPECT_TRUE(r.j().contains("line"));
}

TEST(Cli, ParseRoundTripsThroughJson) {
  auto r = cli({"parse", "-"}, kExample31);
  ASSERT_EQ(r.code, 0);
  auto again = cli({"parse", "-"}, r.j()["diagram"].dump());
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(again.j()["hash"], r.j()["hash"]);
}

TEST(Cli, ValidateReportsViolations) {
  EXPECT_EQ(cli({"validate", "-"}, kExample31).code, 0);
  auto r = cli({"validate", "-"}, "strands 2; comps A:1 B:2; T[1]");
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.j()["valid"]);
  ASSERT_FALSE(r.j()["violations"].empty());
  EXPECT_EQ(r.j()["violations"][0]["element"], 0);
}

TEST(Cli, NormalForm) {
  auto r = cli({"nf", "-n", "3", "s1 s2 s1 s2' s1'"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["word"], "s2");
  EXPECT_EQ(cli({"nf", "s1"}).code, 2);
  auto d = cli({"nf", "--diagram", "-"}, kExample31);
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.j()["hash"], boundary_invariants(parse_diagram(kExample31)).nf_hash);
}

TEST(Cli, InvariantsAndPretty) {
  auto r = cli({"invariants", "-", "--pretty"}, kExample31);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n  "), std::string::npos);
  EXPECT_EQ(r.j()["components"], json::parse(R"(["A","B"])"));
}

TEST(Cli, HomologyWithFreePoints) {
  auto r = cli({"homology", "-", "--free", "A=2", "--free", "B=2"}, kExample31);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j()["b2"], 6);
  EXPECT_EQ(r.j()["b1"], 0);
  EXPECT_EQ(cli({"homology", "-", "--free", "A"}, kExample31).code, 2);
  EXPECT_EQ(cli({"homology", "-", "--free", "Z=1"}, kExample31).code, 1);
}

TEST(Cli, GeneratedFilesCarryFreePoints) {
  auto g = cli({"gen", "scott", "--k", "-1"});
  ASSERT_EQ(g.code, 0);
  auto q = cli({"qhd-check", "-", "--k", "-1"}, g.out);
  ASSERT_EQ(q.code, 0) << q.out;
  EXPECT_FALSE(q.j()["verdict"]);
  EXPECT_EQ(q.j()["points"], 12);
  EXPECT_EQ(q.j()["weights"]["R1"], 7);
  EXPECT_EQ(q.j()["weights"]["B1"], 6);

  auto h = cli({"gen", "qhd", "--k", "-1"});
  ASSERT_EQ(h.code, 0);
  auto v = cli({"qhd-check", "-", "-k", "-1"}, h.out);
  ASSERT_EQ(v.code, 0);
  EXPECT_TRUE(v.j()["verdict"]);
  EXPECT_EQ(v.j()["b2"], 0);
}

TEST(Cli, OddQhdNeedsOverride) {
  auto r = cli({"gen", "qhd", "--k", "0"});
  EXPECT_EQ(r.code, 1);
  auto ok = cli({"gen", "qhd", "--k", "0", "--allow-experimental"});
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("# experimental", 0), 0u);
  EXPECT_EQ(cli({"gen", "script", "--k", "0"}).code, 1);
}

TEST(Cli, ScriptRunReplaysTheFamilyScript) {
  const auto scott = temp_file("scott.wd", cli({"gen", "scott", "--k", "-1"}).out);
  const auto script = temp_file("script.json", cli({"gen", "script", "--k", "-1"}).out);
  auto r = cli({"script", "run", scott, script});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.j()["verdict"]);
  auto fam = qhd_diagram(-1);
  EXPECT_EQ(r.j()["final_hash"], diagram_hash(fam.arrangement.diagram));
  const auto trace = temp_file("trace.json", r.out);
  EXPECT_EQ(cli({"script", "verify", trace}).code, 0);

  auto tampered = r.j();
  tampered["steps"][3]["hash"] = "00";
  EXPECT_EQ(cli({"script", "verify", "-"}, tampered.dump()).code, 1);
}

TEST(Cli, ScriptErrorNamesTheStep) {
  const auto scott = temp_file("scott2.wd", cli({"gen", "scott", "--k", "-1"}).out);
  auto s = json::parse(cli({"gen", "script", "--k", "-1"}).out);
  s[1]["pos"] = 0;
  const auto script = temp_file("bad.json", s.dump());
  auto r = cli({"script", "run", scott, script});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.j()["error"], "script");
  EXPECT_EQ(r.j()["step"], 2);
}

TEST(Cli, MoveApplyFlagsMatchJson) {
  const auto scott = temp_file("scott3.wd", cli({"gen", "scott", "--k", "-1"}).out);
  auto list = cli({"move", "list", scott, "--pos", "4"});
  ASSERT_EQ(list.code, 0);
  json m4;
  const json listed = list.j();
  for (const auto& m : listed["moves"])
    if (m["kind"] == "M4") m4 = m;
  ASSERT_FALSE(m4.is_null());
  auto a = cli({"move", "apply", scott, "--move", m4.dump()});
  ASSERT_EQ(a.code, 0) << a.out;
  std::vector<std::string> args{"move", "apply", scott, "--kind", "M4", "--pos", "4", "--variant",
                                std::to_string(m4["variant"].get<int>()), "--params"};
  std::string ps;
  for (const auto& p : m4["params"]) ps += (ps.empty() ? "" : ",") + std::to_string(p.get<int>());
  args.push_back(ps);
  auto b = cli(args);
  ASSERT_EQ(b.code, 0) << b.out << b.err;
  EXPECT_EQ(a.j()["hash"], b.j()["hash"]);
  EXPECT_EQ(a.j()["guarantee"], "WORD");
  EXPECT_EQ(a.j()["nf_hash"], a.j()["nf_hash_before"]);

  auto bad = cli({"move", "apply", scott, "--kind", "M4", "--pos", "0", "--params", "2,1,5,12", "--variant", "2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.j()["error"], "not_applicable");
  EXPECT_EQ(cli({"move", "apply", scott, "--kind", "M4"}).code, 2);
}

TEST(Cli, RenderToFile) {
  const auto path = ::testing::TempDir() + "braidwire_cli_ex31.svg";
  ASSERT_EQ(cli({"render", "-", "-o", path}, kExample31).code, 0);
  std::ifstream f(path);
  std::string svg((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(svg, cli({"render", "-"}, kExample31).out);
}
