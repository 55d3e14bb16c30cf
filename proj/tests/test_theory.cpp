#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/rational.hpp"

using namespace testing;

TEST_CASE("object lists are strict") {
  CHECK(tensor(B, I, T) == ObjectList{"B", "T"});
  CHECK(I.str() == "I");
  CHECK(tensor(B, T).str() == "B⊗T");
  CHECK(tensor(B, T, B).slice(1, 2) == tensor(T, B));
  CHECK(tensor(B, T).has_suffix(T));
  CHECK_FALSE(tensor(B, T).has_prefix(T));
}

TEST_CASE("rationals print as p/q") {
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(to_string(parse_rational("0.1")) == "1/10");
  CHECK(parse_rational("729/1000") == Rational(729, 1000));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS_AS(parse_rational("x/2"), ParseError);
}

TEST_CASE("mixed radix, leftmost atom most significant") {
  Signature s = small_signature();
  CHECK(s.carrier(tensor(B, T)) == 6);
  CHECK(s.decode(tensor(B, T), 5) == std::vector<std::size_t>{1, 2});
  CHECK(s.encode(tensor(T, B), {2, 1}) == 5);
  CHECK(s.carrier(I) == 1);
  CHECK(s.label(tensor(B, T), 4) == "B=1 T=1");
}

TEST_CASE("finfn composition and tensor") {
  Theory t = finfn();
  CHECK(tab(t.compose(t.copy(B), AND(t))) == std::vector<std::uint32_t>{0, 1});
  CHECK(tab(t.copy(B)) == std::vector<std::uint32_t>{0, 3});
  CHECK(tab(t.tensor(NOT(t), NOT(t))) == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(tab(t.discard(T)) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(t.equal(t.seq(NOT(t), NOT(t)), t.identity(B)));
  CHECK_THROWS_AS(t.compose(NOT(t), t.identity(T)), TypeError);
}

TEST_CASE("symmetry on carriers 2 and 3 sends 3i+j to 2j+i") {
  Theory t = finfn();
  Morphism s = t.symmetry(B, T);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) CHECK(s.table()[3 * i + j] == 2 * j + i);
  CHECK(t.equal(t.compose(s, t.symmetry(T, B)), t.identity(tensor(B, T))));
}

TEST_CASE("permute matches composite symmetries") {
  Theory t = finfn();
  Morphism p = t.permute({B, T, B}, {2, 0, 1});
  Morphism by_hand = t.symmetry(tensor(B, T), B);
  CHECK(t.equal(p, by_hand));
  CHECK(t.equal(t.permute({B, I, T}, {1, 0, 2}), t.identity(tensor(B, T))));
}

TEST_CASE("hom enumeration order") {
  Theory t = finfn();
  auto hom = t.enumerate_hom(B, B);
  REQUIRE(hom.size() == 4);
  CHECK(tab(hom[0]) == std::vector<std::uint32_t>{0, 0});
  CHECK(tab(hom[1]) == std::vector<std::uint32_t>{0, 1});
  CHECK(tab(hom[2]) == std::vector<std::uint32_t>{1, 0});
  CHECK(tab(hom[3]) == std::vector<std::uint32_t>{1, 1});
  CHECK(t.hom_size(T, B) == 8);
  CHECK(t.enumerate_hom(I, T).size() == 3);
}

TEST_CASE("finstoch exact arithmetic") {
  Theory t = finstoch();
  Rational h(1, 2);
  Morphism m = t.matrix(B, B, StochMatrix{2, 2, {h, h, 0, 1}});
  Morphism sq = t.compose(m, m);
  CHECK(sq.matrix().at(0, 0) == Rational(1, 4));
  CHECK(sq.matrix().at(0, 1) == Rational(3, 4));
  CHECK(sq.matrix().at(1, 1) == 1);
  CHECK_THROWS_AS(t.matrix(B, B, StochMatrix{2, 2, {h, h, h, 0}}), TypeError);
  // deterministic tables embed as point masses
  Morphism n = t.adopt(NOT(finfn()));
  CHECK(n.matrix().at(0, 1) == 1);
  CHECK(t.equal(t.tensor(m, n), t.tensor(m, n)));
  auto fam = t.probing_family(B, B);
  CHECK(fam.size() == 4 + 1 + 3 * 4);
}

TEST_CASE("free terms") {
  Theory t = Theory::free(true);
  Morphism f = t.generator("f", B, T), g = t.generator("g", T, B);
  Morphism fg = t.compose(f, g);
  CHECK(fg.term()->str() == "(f ; g)");
  CHECK(t.compose(t.identity(B), f).term()->str() == "f");
  CHECK_THROWS_AS(t.equal(f, f), TheoryError);
  Theory fin = finfn();
  std::map<std::string, Morphism> interp{{"f", fin.table(B, T, {2, 0})}, {"g", fin.table(T, B, {0, 0, 1})}};
  CHECK(tab(eval_term(fg.term(), interp, fin)) == std::vector<std::uint32_t>{1, 0});
  CHECK_THROWS_AS(f.table(), TheoryError);
}

TEST_CASE("random morphisms are deterministic per seed") {
  Theory t = finfn();
  Rng a(42), b(42);
  CHECK(t.equal(t.random(a, T, tensor(B, B)), t.random(b, T, tensor(B, B))));
}
