#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include <map>
#include <set>

#include "mctx/lens.hpp"

using namespace testing;

TEST_CASE("lens fill and get/put") {
  Theory t = finfn();
  // view the bit, write back view XOR old
  Lens1 l = Lens1::make(t.copy(B), XOR(t), B, {B, B});
  CHECK(tab(fill(t, l, NOT(t))) == std::vector<std::uint32_t>{1, 1});
  CartesianLens gp = to_getput(t, l);
  CHECK(t.equal(gp.get, t.identity(B)));
  CHECK(t.equal(gp.put, XOR(t)));
  Lens1 back = from_getput(t, gp);
  CHECK(lens_equal(t, back, l));
  CHECK(fill_equal(t, back, l).equal);
  CHECK_THROWS_AS(to_getput(finstoch(), Lens1::make(finstoch().copy(B), finstoch().adopt(XOR(t)), B, {B, B})),
                  TheoryError);
}

TEST_CASE("fill-equivalence at carrier 2 has 64 classes") {
  Theory t = finfn();
  std::vector<Lens1> reps;
  for (const auto& f : t.enumerate_hom(B, tensor(B, B)))
    for (const auto& g : t.enumerate_hom(tensor(B, B), B)) reps.push_back(Lens1::make(f, g, B, {B, B}));
  auto classes = [&](const FillOptions& opt) {
    std::vector<std::size_t> leaders;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::size_t k = 0;
      while (k < leaders.size() && !fill_equal(t, reps[leaders[k]], reps[i], opt).equal) ++k;
      if (k == leaders.size()) leaders.push_back(i);
    }
    return leaders.size();
  };
  // get: B -> B (4 choices) and put: B⊗B -> B (16 choices)
  CHECK(classes({}) == 4 * 16);
  // Plain fills alone cannot see everything the residual carries.
  FillOptions plain;
  plain.use_transcript = false;
  CHECK(classes(plain) == 36);
  // cross-oracle: distinct get/put pairs
  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> gp;
  for (const auto& l : reps) {
    auto c = to_getput(t, l);
    gp.insert({c.get.table(), c.put.table()});
  }
  CHECK(gp.size() == 64);
}

TEST_CASE("send and get") {
  Theory t = finfn();
  Lens1 s = send(t, NOT(t));
  CHECK(s.outer() == Hole{B, I});
  CHECK(s.hole == Hole{B, I});
  Lens1 g = get(t, NOT(t));
  CHECK(g.outer() == Hole{I, B});
  CHECK(lens_equal(t, send(t, t.compose(NOT(t), NOT(t))), lens_identity(t, B, I)));
  CHECK(lens_equal(t, get(t, t.compose(t.copy(B), AND(t))), lens_compose(t, get(t, AND(t)), get(t, t.copy(B)))));
  CHECK_FALSE(lens_equal(t, send(t, NOT(t)), send(t, t.identity(B))));
}

TEST_CASE("lens splits, associators and laxator") {
  Theory t = finfn();
  LensSplit s = LensSplit::make({t.copy(B), t.identity(tensor(B, B)), XOR(t)}, {B, B}, {{B, B}, {B, B}});
  CHECK(s.arity() == 2);
  LensSplit closed = lens_split_close(t, s, 0, NOT(t));
  CHECK(closed.arity() == 1);
  // x -> (x, !x) -> x xor h(!x)
  CHECK(tab(fill(t, closed.word(), {t.identity(B)})) == std::vector<std::uint32_t>{1, 1});
  Lens1 a = Lens1::make(t.identity(B), t.identity(B), I, {B, B});
  Lens1 b = Lens1::make(t.identity(T), t.identity(T), I, {T, T});
  LensParSplit p = lens_tensor_split(t, a, b);
  CHECK(p.left == Hole{B, B});
  LensParSplit q = lens_symmetry(t, lens_symmetry(t, p));
  CHECK(lens_equal(t, q.as_lens(), p.as_lens()));
  LensSplit sa = split_of_lens(a), sb = split_of_lens(b);
  LensSplit lax = lens_laxator(t, p, sa, sb);
  CHECK(lax.holes[0] == Hole{tensor(B, T), tensor(B, T)});
  CHECK_THROWS_AS(lens_laxator(t, p, s, sb), TypeError);
}

TEST_CASE("symmetric normalization") {
  Theory t = finfn();
  SymNormalElement e{t.copy(B), XOR(t), {B, B}, NOT(t)};
  Lens1 l = std::get<Lens1>(sym_normalize(t, e));
  for (const auto& h : t.enumerate_hom(B, B)) CHECK(t.equal(fill(t, l, h), e.fill(t, h)));
  Lens1 twice = std::get<Lens1>(sym_normalize(t, as_sym_normal_element(t, l)));
  CHECK(t.equal(twice.f, l.f));
  CHECK(t.equal(twice.g, l.g));
  CHECK(std::holds_alternative<Morphism>(sym_normalize(t, ParUnit::make(t.discard(B), t.table(I, B, {0})))));
}

TEST_CASE("mixed polarity: !A ◁ ?B and !A ⊗ ?B give the same lenses") {
  Theory t = finfn();
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    Morphism f = t.random(rng, T, tensor(B, B)), mid = t.random(rng, B, T), g = t.random(rng, tensor(T, B), T);
    // sequential: send on the first hole, receive on the second
    LensSplit seq = LensSplit::make({f, mid, g}, {B, T}, {{B, I}, {I, B}});
    // parallel: one fused hole (A, B)
    Lens1 par = Lens1::make(t.compose(f, t.tensor(mid, t.identity(B))), g, T, {B, B});
    for (const auto& a : t.enumerate_hom(B, I))
      for (const auto& b : t.enumerate_hom(I, B))
        CHECK(t.equal(fill(t, seq.word(), {a, b}), fill(t, par, t.compose(a, b))));
    CHECK(t.equal(transcript(t, seq.word()), transcript(t, par.word())));
  }
}
