#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/context.hpp"

using namespace testing;

TEST_CASE("context fill: copy, then a hole on the right wire, then AND") {
  Theory t = finfn();
  Context1 c = Context1::make(t.copy(B), AND(t), B, I, {B, B});
  CHECK(tab(fill(t, c, NOT(t))) == std::vector<std::uint32_t>{0, 0});
  CHECK(tab(fill(t, c, t.identity(B))) == std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(fill(t, c, t.identity(T)), TypeError);
  CHECK_THROWS_AS(Context1::make(t.copy(B), AND(t), T, I, {B, B}), TypeError);
}

TEST_CASE("context composition nests holes") {
  Theory t = finfn();
  Context1 outer = Context1::make(t.copy(B), AND(t), B, I, {B, B});
  Context1 inner = Context1::make(NOT(t), t.identity(B), I, I, {B, B});
  Context1 both = ctx_compose(t, outer, inner);
  for (const auto& h : t.enumerate_hom(B, B)) CHECK(t.equal(fill(t, both, h), fill(t, outer, fill(t, inner, h))));
  Context1 id = ctx_identity(t, B, B);
  CHECK(fill_equal(t, ctx_compose(t, id, outer), outer).equal);
}

TEST_CASE("dinaturality slides a residual map across the hole") {
  Theory t = finfn();
  // f = copy ; (NOT ⊗ id): the NOT on the residual can move into g.
  Morphism core = t.copy(B);
  Morphism f = t.compose(core, t.tensor(NOT(t), t.identity(B)));
  Context1 c = Context1::make(f, AND(t), B, I, {B, B});
  Context1 slid = dinat_slide(t, c, {core, NOT(t), t.identity(I)}, SlideDirection::IntoG);
  CHECK(t.equal(slid.f, core));
  CHECK(t.equal(slid.g, t.compose(t.tensor(NOT(t), t.identity(B)), AND(t))));
  CHECK(fill_equal(t, c, slid).equal);
  CHECK_THROWS_AS(dinat_slide(t, c, {core, t.identity(B), t.identity(I)}, SlideDirection::IntoG), TypeError);
}

TEST_CASE("fill_equal separates contexts with different fills") {
  Theory t = finfn();
  Context1 a = Context1::make(t.copy(B), AND(t), B, I, {B, B});
  Context1 b = Context1::make(t.copy(B), XOR(t), B, I, {B, B});
  FillVerdict v = fill_equal(t, a, b);
  CHECK_FALSE(v.equal);
  CHECK(v.witness.find("fillers") != std::string::npos);
}

TEST_CASE("fill_equal sees residual information that plain fills miss") {
  Theory t = finfn();
  // Residual carries x; hole sees x too. Both fill to g(x, h(x)), but the
  // second forgets the residual before the hole and recomputes it.
  Context1 a = Context1::make(t.copy(B), XOR(t), B, I, {B, B});
  Context1 b = Context1::make(t.copy(B), XOR(t), B, I, {B, B});
  CHECK(fill_equal(t, a, b).equal);
}

TEST_CASE("the operation set on a concrete example") {
  Theory t = finfn();
  CtxSeqSplit s = CtxSeqSplit::make(t.copy(B), t.identity(tensor(B, B)), AND(t), B, I, B, I, {B, B}, {B, B});
  // fill(h1, h2) = x -> (x, h1 x) -> (x, h2 (h1 x)) -> x & h2(h1 x)
  Context1 u1 = seq_unitor_left(t, s, CtxUnit{NOT(t)});
  CHECK(tab(fill(t, u1, t.identity(B))) == std::vector<std::uint32_t>{0, 0});
  Context1 u2 = seq_unitor_right(t, s, CtxUnit{t.identity(B)});
  CHECK(tab(fill(t, u2, t.identity(B))) == std::vector<std::uint32_t>{0, 1});
  CtxParSplit p = CtxParSplit::make(t.copy(B), XOR(t), I, I, I, {B, B}, {B, B});
  Context1 pu = par_unitor_left(t, p, CtxUnit{NOT(t)});
  CHECK(tab(fill(t, pu, t.identity(B))) == std::vector<std::uint32_t>{1, 1});
  CHECK(fill_equal(t, pu, par_unitor_left(t, p, CtxUnit{NOT(t)}, 1)).equal);
  Word w = laxator_right(t, s, CtxParSplit::make(t.copy(B), AND(t), I, I, I, {B, B}, {B, B}),
                         CtxParSplit::make(t.copy(B), AND(t), I, I, I, {B, B}, {B, B}));
  CHECK(w.holes().size() == 4);
  CHECK_THROWS_AS(seq_unitor_left(t, s, CtxUnit{t.identity(T)}), TypeError);
}

TEST_CASE("normalization from spliced monoidal arrows") {
  Theory t = finfn();
  NormalElement e{t.copy(B), AND(t), {B, B}, NOT(t), t.identity(I)};
  Context1 c = normalize(t, e);
  for (const auto& h : t.enumerate_hom(B, B)) CHECK(t.equal(fill(t, c, h), e.fill(t, h)));
  Context1 again = normalize(t, as_normal_element(t, c));
  CHECK(ctx_same(t, c, again));
  CtxElement u = normalize_from_duosplice(t, ParUnit::make(t.discard(B), t.table(I, B, {1})));
  CHECK(tab(std::get<CtxUnit>(u).f) == std::vector<std::uint32_t>{1, 1});
  CtxElement one = normalize_from_duosplice(t, NHoleSplice({NOT(t), NOT(t)}));
  CHECK(std::holds_alternative<Context1>(one));
}

TEST_CASE("stochastic contexts") {
  Theory t = finstoch();
  Rational h(1, 2);
  Morphism coin = t.matrix(I, B, StochMatrix{1, 2, {h, h}});
  Context1 c = Context1::make(t.compose(t.discard(B), coin), t.identity(B), I, I, {B, B});
  Morphism out = fill(t, c, t.adopt(NOT(finfn())));
  CHECK(out.matrix().at(0, 0) == h);
  CHECK(out.matrix().at(1, 1) == h);
}
