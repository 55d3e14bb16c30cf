#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mctx/io.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

const std::string kTcp = std::string(MCTX_SOURCE_DIR) + "/protocols/tcp.json";
const std::string kTcpId = std::string(MCTX_SOURCE_DIR) + "/protocols/tcp_identity.json";

struct Run {
  int code;
  std::string out;
};

Run mctx_run(const std::string& args) {
  std::string cmd = std::string(MCTX_BIN) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string scratch(const std::string& name, const json& j) {
  fs::path dir = fs::temp_directory_path() / "mctx-tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << j.dump(2);
  return p.string();
}

}  // namespace

TEST_CASE("morphism JSON roundtrips") {
  Theory t = finstoch();
  Morphism m = t.matrix(B, T, StochMatrix{2, 3, {Rational(1, 3), Rational(2, 3), 0, 0, 0, 1}});
  json j = morphism_to_json(m);
  CHECK(j["matrix"][0][0] == "1/3");
  CHECK(t.equal(morphism_from_json(t, j), m));
  Theory f = finfn();
  CHECK(f.equal(morphism_from_json(f, morphism_to_json(NOT(f))), NOT(f)));
  Theory free = Theory::free(true);
  Morphism term = free.compose(free.generator("f", B, T), free.symmetry(T, I));
  CHECK(morphism_from_json(free, morphism_to_json(term)).term()->str() == term.term()->str());
  CHECK_THROWS_AS(morphism_from_json(f, json{{"dom", {"B"}}, {"cod", {"B"}}}), ParseError);
  CHECK_THROWS_AS(morphism_from_json(f, json{{"dom", {"B"}}, {"cod", {"B"}}, {"table", {0, 5}}}), TypeError);
  CHECK_THROWS_AS(morphism_from_json(f, json{{"dom", {"Q"}}, {"cod", {"B"}}, {"table", {0}}}), TypeError);
}

TEST_CASE("protocol loading") {
  Protocol p = load_protocol_file(kTcp);
  CHECK(p.parties.size() == 2);
  CHECK(p.resolve("Msg") == ObjectList{"Syn", "Ack"});
  CHECK(p.morphisms.count("syn_star") == 1);
  CHECK(initial_index(p, "client=10,server=20") == 1 * 3 + 1);
  CHECK(initial_index(p, "") == 0);
  CHECK_THROWS_AS(initial_index(p, "client=12"), ParseError);
  CHECK_THROWS_AS(initial_index(p, "nobody=0"), ParseError);
  json bad = read_json_file(kTcp);
  bad["schema"] = "other";
  CHECK_THROWS_AS(load_protocol(bad), ParseError);
  bad = read_json_file(kTcp);
  bad["parties"][0]["steps"][0] = "missing";
  CHECK_THROWS_AS(load_protocol(bad), TypeError);
}

TEST_CASE("presentation JSON") {
  json j = {{"objects", {"A"}},
            {"elements", {{{"name", "a"}, {"kind", "par-unit"}, {"outer", "A"}},
                          {{"name", "b"}, {"kind", "unit"}, {"outer", "A"}}}},
            {"equations", {{{"tag", "phi0"}, {"elements", {"a", "b"}}}}}};
  PromonoidalPresentation p = presentation_from_json(j);
  CHECK(presentation_to_json(p)["equations"][0]["tag"] == "phi0");
  json c = category_to_json(monoidal_contour(p));
  CHECK(c["relations"][0]["rhs"] == "b_0");
  CHECK(c["generators"].size() == 3);
  j["elements"][0]["kind"] = "weird";
  CHECK_THROWS_AS(presentation_from_json(j), ParseError);
}

TEST_CASE("cli check") {
  Run ok = mctx_run("check " + kTcp);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("(!Msg ⊗ ?Msg) ◁ (?Msg ⊗ !Msg) ◁ (!Msg ⊗ ?Msg)") != std::string::npos);
  CHECK(ok.out.find("equivalent") != std::string::npos);

  json j = read_json_file(kTcp);
  j["parties"][1]["session"] = "!Msg < !Msg < ?Msg";
  Run bad = mctx_run("check " + scratch("corrupt.json", j));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("stage 1") != std::string::npos);

  j = read_json_file(kTcp);
  j["parties"] = json::array();
  Run none = mctx_run("check " + scratch("empty.json", j));
  CHECK(none.code == 1);
  CHECK(none.out.find("no parties") != std::string::npos);

  std::ofstream(fs::temp_directory_path() / "mctx-tests" / "broken.json") << "{ nope";
  CHECK(mctx_run("check " + (fs::temp_directory_path() / "mctx-tests" / "broken.json").string()).code == 3);
  CHECK(mctx_run("check /nonexistent.json").code == 3);
  CHECK(mctx_run("frobnicate").code == 3);
}

TEST_CASE("cli eval") {
  Run zero = mctx_run("eval " + kTcp + " --noise 0");
  CHECK(zero.code == 0);
  CHECK(zero.out.find("Client=11 Server=21  1/1") != std::string::npos);
  Run tenth = mctx_run("eval " + kTcp + " --noise 1/10 --json");
  json j = json::parse(tenth.out);
  CHECK(j["success"]["probability"] == "729/1000");
  CHECK(j["total"] == "1/1");
  Run one = mctx_run("eval " + kTcp + " --noise 1");
  CHECK(one.out.find("Client=0 Server=0  1/1") != std::string::npos);
  CHECK(one.out.find("success (Client=11 Server=21): 0/1") != std::string::npos);
  Run init = mctx_run("eval " + kTcp + " --initial client=11,server=21 --noise 0");
  CHECK(init.out.find("Client=11 Server=21  1/1") != std::string::npos);
  CHECK(mctx_run("eval " + kTcp + " --noise abc").code == 3);
  // identity channels carry no noise
  CHECK(mctx_run("eval " + kTcpId + " --noise 1/2").out.find("Client=11 Server=21  1/1") != std::string::npos);
}

TEST_CASE("cli compose roundtrips") {
  fs::path out = fs::temp_directory_path() / "mctx-tests" / "tcp-closed.json";
  fs::create_directories(out.parent_path());
  Run r = mctx_run("compose " + kTcp + " --noise 1/10 --out " + out.string());
  CHECK(r.code == 0);
  Protocol p = load_protocol_file(kTcp);
  Morphism again = morphism_from_json(p.theory, read_json_file(out.string()));
  Morphism direct = compose_protocol(p, Rational(1, 10)).closed;
  CHECK(p.theory.equal(again, direct));
  CHECK(again.matrix().rows == 9);
  CHECK(again.matrix().cols == 9);
  Run det = mctx_run("compose " + kTcpId);
  CHECK(json::parse(det.out).contains("table"));
}

TEST_CASE("a single trivial party composes to its own step") {
  json j = read_json_file(kTcpId);
  j["parties"] = json::array({{{"name", "solo"},
                               {"state_in", {"Client"}},
                               {"session", "!I"},
                               {"steps", {"prj_client", "id:Client"}}}});
  j["morphisms"]["prj_client"] = {{"dom", {"Client"}}, {"cod", {"Client"}}, {"table", {2, 2, 0}}};
  j["channels"] = {"id"};
  j.erase("refactorings");
  Protocol p = load_protocol(j);
  Morphism m = compose_protocol(p).closed;
  CHECK(tab(m) == std::vector<std::uint32_t>{2, 2, 0});
}

TEST_CASE("cli laws") {
  Run vac = mctx_run("laws --cases 0");
  CHECK(vac.code == 0);
  CHECK(vac.out.find("warning") != std::string::npos);
  Run some = mctx_run("laws --cases 5 --family counit --json");
  CHECK(some.code == 0);
  CHECK(json::parse(some.out)["ok"] == true);
  CHECK(mctx_run("laws --family nothing").code == 3);
  CHECK(mctx_run("laws --theory free").code == 3);
}
