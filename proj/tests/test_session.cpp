#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/io.hpp"

using namespace testing;

namespace {

Protocol tcp() { return load_protocol_file(std::string(MCTX_SOURCE_DIR) + "/protocols/tcp.json"); }

const Party& party(const Protocol& p, const std::string& name) {
  for (const auto& q : p.parties)
    if (q.name == name) return q;
  throw std::runtime_error("no party " + name);
}

}  // namespace

TEST_CASE("session type syntax") {
  auto resolve = [](const std::string& n) { return n == "Msg" ? tensor(B, B) : ObjectList{n}; };
  SessionType s = SessionType::parse("!Msg < ?Msg < !Msg", resolve);
  REQUIRE(s.stages.size() == 3);
  CHECK(s.stage_hole(0) == Hole{tensor(B, B), I});
  CHECK(s.stage_hole(1) == Hole{I, tensor(B, B)});
  CHECK(s.str() == "!Msg ◁ ?Msg ◁ !Msg");
  SessionType two = SessionType::parse("!B * ?T < ?B", resolve);
  CHECK(two.stage_hole(0) == Hole{B, T});
  CHECK(two.str() == "(!B ⊗ ?T) ◁ ?B");
  CHECK_THROWS_AS(SessionType::parse("!Msg < ", resolve), ParseError);
  CHECK_THROWS_AS(SessionType::parse("Msg", resolve), ParseError);
}

TEST_CASE("the handshake parties type-check and interleave") {
  Protocol p = tcp();
  LensSplit c = type_check(p.theory, party(p, "client"));
  LensSplit s = type_check(p.theory, party(p, "server"));
  CHECK(c.arity() == 3);
  CHECK(c.residuals[0] == ObjectList{"Client"});
  SessionType both = interleave_types(party(p, "client").session, party(p, "server").session);
  CHECK(both.str() == "(!Msg ⊗ ?Msg) ◁ (?Msg ⊗ !Msg) ◁ (!Msg ⊗ ?Msg)");
  CHECK(pairing_warnings(both).empty());
  LensSplit combined = interleave(p.theory, c, s);
  ObjectList msg = p.resolve("Msg");
  for (const auto& h : combined.holes) CHECK(h == Hole{msg, msg});
  CHECK(combined.outer() == Hole{ObjectList{"Client", "Server"}, ObjectList{"Client", "Server"}});
}

TEST_CASE("stage diagnostics name the failing stage") {
  Protocol p = tcp();
  Party server = party(p, "server");
  server.session = SessionType::parse("!Msg < !Msg < ?Msg", [&](const std::string& n) { return p.resolve(n); });
  try {
    type_check(p.theory, server);
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("stage 1") != std::string::npos);
  }
  Party short_steps = party(p, "client");
  short_steps.steps.pop_back();
  CHECK_THROWS_AS(type_check(p.theory, short_steps), TypeError);
}

TEST_CASE("outcome distribution of the handshake") {
  Protocol p = tcp();
  auto run = [&](const Rational& noise) {
    Composite c = compose_protocol(p, noise);
    return outcome_distribution(p.theory, c.closed, std::size_t{0});
  };
  const Signature& sig = p.theory.signature();
  ObjectList state{"Client", "Server"};
  auto ok = run(0);
  REQUIRE(ok.size() == 1);
  CHECK(sig.label(state, ok[0].state) == "Client=11 Server=21");
  CHECK(ok[0].probability == 1);
  // three channel uses, each passing with probability 9/10
  auto noisy = run(Rational(1, 10));
  Rational total = 0, success = 0;
  for (const auto& o : noisy) {
    total += o.probability;
    if (sig.label(state, o.state) == "Client=11 Server=21") success = o.probability;
  }
  CHECK(total == 1);
  CHECK(success == Rational(9, 10) * Rational(9, 10) * Rational(9, 10));
  auto dead = run(1);
  REQUIRE(dead.size() == 1);
  CHECK(sig.label(state, dead[0].state) == "Client=0 Server=0");
}

TEST_CASE("noisy composites are stochastic") {
  Protocol p = tcp();
  Morphism m = compose_protocol(p, Rational(3, 7)).closed;
  const auto& mx = m.matrix();
  for (std::size_t r = 0; r < mx.rows; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < mx.cols; ++c) sum += mx.at(r, c);
    CHECK(sum == 1);
  }
}

TEST_CASE("identity channels reduce to the deterministic composite") {
  Protocol det = load_protocol_file(std::string(MCTX_SOURCE_DIR) + "/protocols/tcp_identity.json");
  Protocol sto = tcp();
  Morphism a = compose_protocol(det).closed;
  Morphism b = compose_protocol(sto, Rational(0)).closed;
  CHECK(sto.theory.equal(sto.theory.adopt(a), b));
  // hand-flattened wiring of the same steps
  const Theory& t = det.theory;
  const Party& c = party(det, "client");
  const Party& s = party(det, "server");
  ObjectList cl{"Client"}, sv{"Server"}, msg = det.resolve("Msg");
  Morphism wiring = t.seq(t.tensor(c.steps[0], s.steps[0]),                       // C -> C⊗Msg, S -> S
                          t.permute({cl, msg, sv}, {0, 2, 1}),                      // C⊗S⊗Msg
                          t.tensor(c.steps[1], s.steps[1]),                         // id, synack
                          t.permute({cl, sv, msg}, {0, 2, 1}),                      // C⊗Msg⊗S
                          t.tensor(c.steps[2], s.steps[2]),                         // ack, id
                          t.permute({cl, msg, sv}, {0, 2, 1}),                      // C⊗S⊗Msg
                          t.tensor(c.steps[3], s.steps[3]));                        // id, recv
  CHECK(t.equal(a, wiring));
}

TEST_CASE("dinaturality refactoring of the client") {
  Protocol p = tcp();
  REQUIRE(p.refactorings.size() == 1);
  const auto& r = p.refactorings[0];
  CHECK(dinaturality_refactor_check(p.theory, r.a, r.b).equal);
  CHECK(dinaturality_refactor_check(p.theory, r.a, r.a).equal);
  CHECK(dinaturality_refactor_check(p.theory, r.b, r.a).equal);
  Party broken = r.b;
  const Theory& t = p.theory;
  // replace the final client step by a constant
  broken.steps[3] = t.adopt(Theory::fin_fn(t.signature()).function(ObjectList{"Client"}, ObjectList{"Client"},
                                                                     [](std::size_t) { return 2; }));
  FillVerdict v = dinaturality_refactor_check(t, r.a, broken);
  CHECK_FALSE(v.equal);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("noise channel") {
  Theory t = finstoch();
  Morphism n = noise_channel(t, tensor(B, B), Rational(1, 4));
  CHECK(n.matrix().at(0, 0) == 1);
  CHECK(n.matrix().at(3, 0) == Rational(1, 4));
  CHECK(n.matrix().at(3, 3) == Rational(3, 4));
  CHECK_THROWS_AS(noise_channel(finfn(), B, Rational(1, 2)), TheoryError);
  CHECK_THROWS_AS(noise_channel(t, B, Rational(3, 2)), TypeError);
}
