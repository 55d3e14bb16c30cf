#include "mctx/lens.hpp"

namespace mctx {

namespace {

void expect(const ObjectList& got, const ObjectList& want, const std::string& what) {
  if (got != want) throw TypeError(what + ": have " + got.str() + ", need " + want.str());
}

Morphism id(const Theory& t, const ObjectList& a) { return t.identity(a); }

Morphism left_of(const Theory& t, const ObjectList& m, const Morphism& h) { return t.tensor(id(t, m), h); }

}  // namespace

Lens1 Lens1::make(Morphism f, Morphism g, ObjectList m, Hole hole) {
  expect(f.cod(), tensor(m, hole.x), "lens f");
  expect(g.dom(), tensor(m, hole.y), "lens g");
  return Lens1{std::move(f), std::move(g), std::move(m), std::move(hole)};
}

Word Lens1::word() const { return Word{{f, g}, {HoleLayer::single(m, hole, {})}}; }

LensSplit LensSplit::make(std::vector<Morphism> steps, std::vector<ObjectList> residuals, std::vector<Hole> holes) {
  if (residuals.size() != holes.size() || steps.size() != holes.size() + 1)
    throw TypeError("lens split: need n holes, n residuals and n+1 steps");
  for (std::size_t k = 0; k < holes.size(); ++k) {
    expect(steps[k].cod(), tensor(residuals[k], holes[k].x), "stage " + std::to_string(k + 1) + " output");
    expect(steps[k + 1].dom(), tensor(residuals[k], holes[k].y), "stage " + std::to_string(k + 1) + " input");
  }
  return LensSplit{std::move(steps), std::move(residuals), std::move(holes)};
}

Word LensSplit::word() const {
  Word w{steps, {}};
  for (std::size_t k = 0; k < holes.size(); ++k) w.layers.push_back(HoleLayer::single(residuals[k], holes[k], {}));
  return w;
}

LensParSplit LensParSplit::make(Lens1 lens, Hole left, Hole right) {
  if (!(lens.hole == Hole{tensor(left.x, right.x), tensor(left.y, right.y)}))
    throw TypeError("lens parallel split: fused hole " + lens.hole.str() + " is not " + left.str() + "⊗" + right.str());
  return LensParSplit{std::move(lens), std::move(left), std::move(right)};
}

Lens1 lens_identity(const Theory& t, const ObjectList& a, const ObjectList& b) {
  return Lens1::make(id(t, a), id(t, b), {}, {a, b});
}

Lens1 lens_from_context(const Theory& t, const Context1& c) {
  // Move the right residual next to the left one: M⊗X⊗N → M⊗N⊗X.
  Morphism f = t.compose(c.f, t.permute({c.m, c.hole.x, c.n}, {0, 2, 1}));
  Morphism g = t.compose(t.permute({c.m, c.n, c.hole.y}, {0, 2, 1}), c.g);
  return Lens1::make(f, g, tensor(c.m, c.n), c.hole);
}

Lens1 lens_compose(const Theory& t, const Lens1& outer, const Lens1& inner) {
  if (!(inner.outer() == outer.hole))
    throw TypeError("lens_compose: inner lens " + inner.outer().str() + " does not fit hole " + outer.hole.str());
  return Lens1::make(t.compose(outer.f, left_of(t, outer.m, inner.f)),
                     t.compose(left_of(t, outer.m, inner.g), outer.g), tensor(outer.m, inner.m), inner.hole);
}

LensParSplit lens_tensor_split(const Theory& t, const Lens1& a, const Lens1& b) {
  Morphism f = t.compose(t.tensor(a.f, b.f), t.permute({a.m, a.hole.x, b.m, b.hole.x}, {0, 2, 1, 3}));
  Morphism g = t.compose(t.permute({a.m, b.m, a.hole.y, b.hole.y}, {0, 2, 1, 3}), t.tensor(a.g, b.g));
  Hole fused{tensor(a.hole.x, b.hole.x), tensor(a.hole.y, b.hole.y)};
  return LensParSplit::make(Lens1::make(f, g, tensor(a.m, b.m), fused), a.hole, b.hole);
}

Lens1 lens_tensor(const Theory& t, const Lens1& a, const Lens1& b) {
  if (!t.symmetric()) throw TheoryError("lens_tensor needs a symmetric theory");
  return lens_tensor_split(t, a, b).lens;
}

Morphism fill(const Theory& t, const Lens1& l, const Morphism& h) {
  if (!(h.type() == l.hole)) throw TypeError("fill: filler " + h.type().str() + " vs hole " + l.hole.str());
  return t.seq(l.f, left_of(t, l.m, t.adopt(h)), l.g);
}

LensSplit lens_split_action(const Theory& t, const LensSplit& s, std::size_t i, const Lens1& c) {
  if (i >= s.arity()) throw TypeError("lens action: hole index out of range");
  if (!(c.outer() == s.holes[i])) throw TypeError("lens action: lens does not fit hole " + s.holes[i].str());
  LensSplit out = s;
  out.steps[i] = t.compose(s.steps[i], left_of(t, s.residuals[i], c.f));
  out.steps[i + 1] = t.compose(left_of(t, s.residuals[i], c.g), s.steps[i + 1]);
  out.residuals[i] = tensor(s.residuals[i], c.m);
  out.holes[i] = c.hole;
  return LensSplit::make(out.steps, out.residuals, out.holes);
}

LensSplit lens_split_fill(const Theory& t, const LensSplit& s, std::size_t i, const LensSplit& d) {
  if (i >= s.arity()) throw TypeError("lens fill: hole index out of range");
  if (!(d.outer() == s.holes[i])) throw TypeError("lens fill: split does not fit hole " + s.holes[i].str());
  const ObjectList& r = s.residuals[i];
  std::vector<Morphism> steps(s.steps.begin(), s.steps.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<ObjectList> res(s.residuals.begin(), s.residuals.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Hole> holes(s.holes.begin(), s.holes.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t k = 0; k <= d.arity(); ++k) {
    Morphism step = left_of(t, r, d.steps[k]);
    if (k == 0) step = t.compose(s.steps[i], step);
    if (k == d.arity()) step = t.compose(step, s.steps[i + 1]);
    steps.push_back(step);
    if (k < d.arity()) {
      res.push_back(tensor(r, d.residuals[k]));
      holes.push_back(d.holes[k]);
    }
  }
  for (std::size_t k = i + 1; k < s.arity(); ++k) {
    steps.push_back(s.steps[k + 1]);
    res.push_back(s.residuals[k]);
    holes.push_back(s.holes[k]);
  }
  return LensSplit::make(steps, res, holes);
}

LensSplit lens_split_close(const Theory& t, const LensSplit& s, std::size_t i, const Morphism& u) {
  return lens_split_fill(t, s, i, LensSplit::make({u}, {}, {}));
}

Lens1 lens_of_split(const LensSplit& s) {
  if (s.arity() != 1) throw TypeError("expected a one-hole lens split");
  return Lens1::make(s.steps[0], s.steps[1], s.residuals[0], s.holes[0]);
}

LensSplit split_of_lens(const Lens1& l) { return LensSplit::make({l.f, l.g}, {l.m}, {l.hole}); }

LensSplit lens_seq_assoc_left(const Theory& t, const LensSplit& s, const LensSplit& in) {
  if (s.arity() != 2 || in.arity() != 2) throw TypeError("lens_seq_assoc_left: two-hole splits expected");
  return lens_split_fill(t, s, 0, in);
}

LensSplit lens_seq_assoc_right(const Theory& t, const LensSplit& s, const LensSplit& in) {
  if (s.arity() != 2 || in.arity() != 2) throw TypeError("lens_seq_assoc_right: two-hole splits expected");
  return lens_split_fill(t, s, 1, in);
}

Lens1 lens_seq_unitor_left(const Theory& t, const LensSplit& s, const Morphism& u) {
  if (s.arity() != 2) throw TypeError("lens_seq_unitor_left: two-hole split expected");
  return lens_of_split(lens_split_close(t, s, 0, u));
}

Lens1 lens_seq_unitor_right(const Theory& t, const LensSplit& s, const Morphism& u) {
  if (s.arity() != 2) throw TypeError("lens_seq_unitor_right: two-hole split expected");
  return lens_of_split(lens_split_close(t, s, 1, u));
}

Lens1 lens_par_unitor_left(const Theory& t, const LensParSplit& p, const Morphism& u) {
  if (!(u.type() == p.left)) throw TypeError("lens_par_unitor_left: unit does not fit the left hole");
  const Lens1& l = p.lens;
  return Lens1::make(t.compose(l.f, t.par(id(t, l.m), t.adopt(u), id(t, p.right.x))), l.g, tensor(l.m, p.left.y),
                     p.right);
}

Lens1 lens_par_unitor_right(const Theory& t, const LensParSplit& p, const Morphism& v) {
  if (!(v.type() == p.right)) throw TypeError("lens_par_unitor_right: unit does not fit the right hole");
  const Lens1& l = p.lens;
  Morphism f = t.seq(l.f, t.tensor(id(t, l.m), t.symmetry(p.left.x, p.right.x)),
                     t.par(id(t, l.m), t.adopt(v), id(t, p.left.x)));
  Morphism g = t.compose(t.tensor(id(t, l.m), t.symmetry(p.right.y, p.left.y)), l.g);
  return Lens1::make(f, g, tensor(l.m, p.right.y), p.left);
}

LensParSplit lens_symmetry(const Theory& t, const LensParSplit& p) {
  const Lens1& l = p.lens;
  Morphism f = t.compose(l.f, t.tensor(id(t, l.m), t.symmetry(p.left.x, p.right.x)));
  Morphism g = t.compose(t.tensor(id(t, l.m), t.symmetry(p.right.y, p.left.y)), l.g);
  Hole fused{tensor(p.right.x, p.left.x), tensor(p.right.y, p.left.y)};
  return LensParSplit::make(Lens1::make(f, g, l.m, fused), p.right, p.left);
}

LensSplit lens_laxator(const Theory& t, const LensParSplit& p, const LensSplit& a, const LensSplit& b) {
  if (a.arity() != b.arity()) throw TypeError("lens_laxator: stage counts differ");
  if (!(a.outer() == p.left) || !(b.outer() == p.right)) throw TypeError("lens_laxator: splits do not fit");
  const ObjectList& m = p.lens.m;
  std::size_t n = a.arity();
  std::vector<Morphism> steps;
  std::vector<ObjectList> res;
  std::vector<Hole> holes;
  for (std::size_t k = 0; k <= n; ++k) {
    Morphism step = t.par(id(t, m), a.steps[k], b.steps[k]);
    if (k == 0) {
      step = t.compose(p.lens.f, step);
    } else {
      // M⊗Ra⊗Rb⊗Ya⊗Yb → M⊗Ra⊗Ya⊗Rb⊗Yb
      const auto &ra = a.residuals[k - 1], &rb = b.residuals[k - 1];
      step = t.compose(t.permute({m, ra, rb, a.holes[k - 1].y, b.holes[k - 1].y}, {0, 1, 3, 2, 4}), step);
    }
    if (k == n) {
      step = t.compose(step, p.lens.g);
    } else {
      const auto &ra = a.residuals[k], &rb = b.residuals[k];
      step = t.compose(step, t.permute({m, ra, a.holes[k].x, rb, b.holes[k].x}, {0, 1, 3, 2, 4}));
      res.push_back(tensor(m, ra, rb));
      holes.push_back({tensor(a.holes[k].x, b.holes[k].x), tensor(a.holes[k].y, b.holes[k].y)});
    }
    steps.push_back(step);
  }
  return LensSplit::make(steps, res, holes);
}

Lens1 send(const Theory& t, const Morphism& f) {
  return Lens1::make(t.adopt(f), id(t, {}), {}, {f.cod(), {}});
}

Lens1 get(const Theory& t, const Morphism& f) {
  return Lens1::make(id(t, {}), t.adopt(f), {}, {{}, f.dom()});
}

Morphism SymNormalElement::fill(const Theory& t, const Morphism& h) const {
  return t.seq(f, t.tensor(n, t.adopt(h)), g);
}

SymNormalElement as_sym_normal_element(const Theory& t, const Lens1& l) {
  return SymNormalElement{l.f, l.g, l.hole, id(t, l.m)};
}

LensElement sym_normalize(const Theory& t, const SymDuoElement& e) {
  if (auto* s = std::get_if<NHoleSplice>(&e)) {
    if (s->arity() == 0) return (*s)[0];
    std::vector<ObjectList> res(s->arity());
    LensSplit split = LensSplit::make(s->morphisms(), res, s->holes());
    if (s->arity() == 1) return lens_of_split(split);
    return split;
  }
  if (auto* p = std::get_if<ParSplit>(&e))
    return LensParSplit::make(Lens1::make(p->f, p->g, {}, {tensor(p->left.x, p->right.x), tensor(p->left.y, p->right.y)}),
                              p->left, p->right);
  if (auto* u = std::get_if<ParUnit>(&e)) return phi0(t, *u);
  const auto& ne = std::get<SymNormalElement>(e);
  return Lens1::make(ne.f, t.compose(t.tensor(ne.n, id(t, ne.hole.y)), ne.g), ne.n.dom(), ne.hole);
}

CartesianLens to_getput(const Theory& t, const Lens1& l) {
  if (!t.cartesian()) throw TheoryError("get/put form needs a cartesian theory");
  Morphism get = t.compose(l.f, t.tensor(t.discard(l.m), id(t, l.hole.x)));
  Morphism res = t.compose(l.f, t.tensor(id(t, l.m), t.discard(l.hole.x)));
  Morphism put = t.compose(t.tensor(res, id(t, l.hole.y)), l.g);
  return {get, put};
}

Lens1 from_getput(const Theory& t, const CartesianLens& c) {
  if (!t.cartesian()) throw TheoryError("get/put form needs a cartesian theory");
  const ObjectList& a = c.get.dom();
  Morphism f = t.compose(t.copy(a), t.tensor(id(t, a), c.get));
  ObjectList y = c.put.dom().slice(a.size(), c.put.dom().size() - a.size());
  return Lens1::make(f, c.put, a, {c.get.cod(), y});
}

bool getput_equal(const Theory& t, const CartesianLens& a, const CartesianLens& b) {
  return t.equal(a.get, b.get) && t.equal(a.put, b.put);
}

FillVerdict fill_equal(const Theory& t, const Lens1& a, const Lens1& b, const FillOptions& opt) {
  return fill_equal(t, a.word(), b.word(), opt);
}

bool lens_equal(const Theory& t, const Lens1& a, const Lens1& b) {
  if (!(a.outer() == b.outer()) || !(a.hole == b.hole)) return false;
  if (t.cartesian()) return getput_equal(t, to_getput(t, a), to_getput(t, b));
  return fill_equal(t, a, b).equal;
}

}  // namespace mctx
