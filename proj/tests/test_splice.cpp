#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/duosplice.hpp"
#include "mctx/splice.hpp"

using namespace testing;

TEST_CASE("filling a two-hole splice composes the pieces") {
  Theory t = finfn();
  NHoleSplice s({t.copy(B), AND(t), NOT(t)});  // hole 0: (B⊗B, B⊗B), hole 1: (B, B)
  CHECK(s.arity() == 2);
  CHECK(s.hole(0) == Hole{tensor(B, B), tensor(B, B)});
  Morphism swapnot = t.tensor(t.identity(B), NOT(t));
  Morphism filled = splice_fill_all(t, s, {swapnot, t.identity(B)});
  // x -> (x, !x) -> x & !x = 0 -> 1
  CHECK(tab(filled) == std::vector<std::uint32_t>{1, 1});
  CHECK_THROWS_AS(splice_fill_all(t, s, {t.identity(B), t.identity(B)}), TypeError);
}

TEST_CASE("nested splice filling") {
  Theory t = finfn();
  NHoleSplice outer({NOT(t), t.identity(B), NOT(t)});
  NHoleSplice inner({t.identity(B), NOT(t)});
  NHoleSplice r = splice_fill(t, outer, 1, inner);
  REQUIRE(r.arity() == 2);
  CHECK(tab(r[1]) == tab(t.identity(B)));
  CHECK(tab(r[2]) == tab(t.identity(B)));  // not ; not
}

TEST_CASE("associator and unitors agree with flattening") {
  Theory t = finfn();
  Rng rng(3);
  auto r = [&](const ObjectList& a, const ObjectList& b) { return t.random(rng, a, b); };
  NHoleSplice a({r(T, B), r(B, T), r(B, T)});
  NHoleSplice b({r(T, B), r(T, I), r(B, B)});  // sits in a's second hole (T, B)
  SplicePair rn{a, b, 1};
  SplicePair ln = splice_alpha(t, rn);
  CHECK(ln.position == 0);
  CHECK(splice_equal(t, flatten(t, rn), flatten(t, ln)));
  SplicePair back = splice_alpha_inv(t, ln);
  CHECK(splice_equal(t, flatten(t, back), flatten(t, rn)));
  Morphism u = r(T, B);
  NHoleSplice l = splice_lambda(t, NHoleSplice({r(T, T), r(B, B), r(B, T)}), u);
  CHECK(l.arity() == 1);
  CHECK_THROWS_AS(splice_alpha(t, {a, b, 0}), TypeError);
}

TEST_CASE("tree rewrites preserve the flattened splice") {
  Theory t = finfn();
  Rng rng(5);
  auto r = [&](const ObjectList& a, const ObjectList& b) { return t.random(rng, a, b); };
  auto inner = splice_node(NHoleSplice({r(B, B), r(T, B), r(B, B)}), {OpenSlot{}, r(B, B)});
  auto root = splice_node(NHoleSplice({r(T, B), r(T, B), r(B, T)}), {OpenSlot{}, inner});
  auto left = rewrite_at(t, root, {}, SpliceRewrite::AssocLeft);
  CHECK(splice_equal(t, flatten(t, left), flatten(t, root)));
  auto rho = rewrite_at(t, root, {1}, SpliceRewrite::Rho);
  CHECK(flatten(t, rho).arity() == 2);
  CHECK(splice_equal(t, flatten(t, rho), flatten(t, root)));
  CHECK_THROWS_AS(rewrite_at(t, root, {0}, SpliceRewrite::Rho), TypeError);
}

TEST_CASE("laxators on spliced monoidal arrows") {
  Theory t = finfn();
  Rng rng(11);
  auto r = [&](const ObjectList& a, const ObjectList& b) { return t.random(rng, a, b); };
  ParSplit p = ParSplit::make(r(T, tensor(B, B)), r(tensor(B, T), B), {B, B}, {B, T});
  NHoleSplice h({r(B, B), r(T, B), r(B, B)}), k({r(B, I), r(B, T), r(B, T)});
  Psi2Result res = psi2(t, p, h, k);
  // f0 ; (h0 ⊗ k0), h1 ⊗ k1, (h2 ⊗ k2) ; f1
  CHECK(t.equal(res.seq[0], t.compose(p.f, t.tensor(h[0], k[0]))));
  CHECK(t.equal(res.seq[1], t.tensor(h[1], k[1])));
  CHECK(t.equal(res.seq[2], t.compose(t.tensor(h[2], k[2]), p.g)));
  CHECK(res.first.left == h.hole(0));
  CHECK(res.second.right == k.hole(1));

  ParUnit u = ParUnit::make(r(T, I), r(I, B));
  CHECK(t.equal(phi0(t, u), t.compose(u.f, u.g)));
  Psi0Result z = psi0(t, u);
  CHECK(z.seq.arity() == 2);
  CHECK(z.seq.hole(0) == Hole{I, I});

  Morphism a = r(B, B), b = r(B, T);
  CHECK(t.equal(phi2(t, p, a, b), t.seq(p.f, t.tensor(a, b), p.g)));
}

TEST_CASE("representability is the identity on data") {
  Theory t = finfn();
  ParSplit p = ParSplit::make(t.copy(B), AND(t), {B, B}, {B, B});
  NHoleSplice s = par_representable(p);
  ParSplit back = par_from_representable(s, p.left, p.right);
  CHECK(t.equal(back.f, p.f));
  CHECK(t.equal(back.g, p.g));
  CHECK(s.hole(0) == Hole{tensor(B, B), tensor(B, B)});
  CHECK_THROWS_AS(ParSplit::make(t.copy(B), AND(t), {B, B}, {T, B}), TypeError);
}

TEST_CASE("duo trees evaluate and rewrite") {
  Theory t = finfn();
  ParSplit p = ParSplit::make(t.copy(B), XOR(t), {B, B}, {B, B});
  DuoPtr tree = duo_par(p, duo_open({B, B}), duo_seq_unit(NOT(t)));
  CHECK(duo_holes(tree).size() == 1);
  // x -> x xor !x = 1
  CHECK(tab(duo_eval(t, tree, {t.identity(B)})) == std::vector<std::uint32_t>{1, 1});
  DuoPtr par_unit_tree = duo_par(ParSplit::make(t.identity(B), t.identity(B), {B, B}, {I, I}), duo_open({B, B}),
                                 duo_par_unit(t.identity(I), t.identity(I)));
  DuoPtr act = duo_rewrite(t, par_unit_tree, {}, DuoRewrite::ParRho);
  CHECK(act->kind == DuoNode::Kind::Act);
  CHECK(t.equal(duo_eval(t, act, {NOT(t)}), duo_eval(t, par_unit_tree, {NOT(t)})));
}
