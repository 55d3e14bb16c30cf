#include "mctx/context.hpp"

namespace mctx {

namespace {

void expect(const ObjectList& got, const ObjectList& want, const std::string& what) {
  if (got != want) throw TypeError(what + ": have " + got.str() + ", need " + want.str());
}

Morphism id(const Theory& t, const ObjectList& a) { return t.identity(a); }

// id_L ⊗ h ⊗ id_R
Morphism around(const Theory& t, const ObjectList& l, const Morphism& h, const ObjectList& r) {
  return t.par(id(t, l), h, id(t, r));
}

}  // namespace

Context1 Context1::make(Morphism f, Morphism g, ObjectList m, ObjectList n, Hole hole) {
  expect(f.cod(), tensor(m, hole.x, n), "context f");
  expect(g.dom(), tensor(m, hole.y, n), "context g");
  return Context1{std::move(f), std::move(g), std::move(m), std::move(n), std::move(hole)};
}

Word Context1::word() const { return Word{{f, g}, {HoleLayer::single(m, hole, n)}}; }

CtxSeqSplit CtxSeqSplit::make(Morphism f, Morphism g, Morphism h, ObjectList m, ObjectList n, ObjectList k,
                              ObjectList l, Hole first, Hole second) {
  expect(f.cod(), tensor(m, first.x, n), "sequential split f");
  expect(g.dom(), tensor(m, first.y, n), "sequential split g");
  expect(g.cod(), tensor(k, second.x, l), "sequential split g");
  expect(h.dom(), tensor(k, second.y, l), "sequential split h");
  return CtxSeqSplit{std::move(f), std::move(g), std::move(h), std::move(m), std::move(n),
                     std::move(k), std::move(l), std::move(first), std::move(second)};
}

Word CtxSeqSplit::word() const {
  return Word{{f, g, h}, {HoleLayer::single(m, first, n), HoleLayer::single(k, second, l)}};
}

CtxParSplit CtxParSplit::make(Morphism f, Morphism g, ObjectList m, ObjectList n, ObjectList o, Hole first,
                              Hole second) {
  expect(f.cod(), tensor(m, first.x, n, second.x, o), "parallel split f");
  expect(g.dom(), tensor(m, first.y, n, second.y, o), "parallel split g");
  return CtxParSplit{std::move(f), std::move(g), std::move(m), std::move(n), std::move(o),
                     std::move(first), std::move(second)};
}

Word CtxParSplit::word() const { return Word{{f, g}, {HoleLayer::pair(m, first, n, second, o)}}; }

Context1 ctx_identity(const Theory& t, const ObjectList& a, const ObjectList& b) {
  return Context1::make(id(t, a), id(t, b), {}, {}, {a, b});
}

Context1 ctx_compose(const Theory& t, const Context1& outer, const Context1& inner) {
  if (!(inner.outer() == outer.hole))
    throw TypeError("ctx_compose: inner context " + inner.outer().str() + " does not fit hole " + outer.hole.str());
  return Context1::make(t.compose(outer.f, around(t, outer.m, inner.f, outer.n)),
                        t.compose(around(t, outer.m, inner.g, outer.n), outer.g), tensor(outer.m, inner.m),
                        tensor(inner.n, outer.n), inner.hole);
}

Morphism fill(const Theory& t, const Context1& c, const Morphism& h) {
  if (!(h.type() == c.hole)) throw TypeError("fill: filler " + h.type().str() + " vs hole " + c.hole.str());
  return t.seq(c.f, around(t, c.m, t.adopt(h), c.n), c.g);
}

FillVerdict fill_equal(const Theory& t, const Context1& a, const Context1& b, const FillOptions& opt) {
  return fill_equal(t, a.word(), b.word(), opt);
}

bool ctx_same(const Theory& t, const Context1& a, const Context1& b) {
  return a.m == b.m && a.n == b.n && a.hole == b.hole && t.equal(a.f, b.f) && t.equal(a.g, b.g);
}

Morphism unit_action(const Theory& t, const Context1& c, const Morphism& h) { return fill(t, c, h); }

CtxSeqSplit seq_action_1(const Theory& t, const CtxSeqSplit& s, const Context1& c) {
  if (!(c.outer() == s.first)) throw TypeError("seq_action_1: context does not fit the first hole");
  return CtxSeqSplit::make(t.compose(s.f, around(t, s.m, c.f, s.n)), t.compose(around(t, s.m, c.g, s.n), s.g), s.h,
                           tensor(s.m, c.m), tensor(c.n, s.n), s.k, s.l, c.hole, s.second);
}

CtxSeqSplit seq_action_2(const Theory& t, const CtxSeqSplit& s, const Context1& c) {
  if (!(c.outer() == s.second)) throw TypeError("seq_action_2: context does not fit the second hole");
  return CtxSeqSplit::make(s.f, t.compose(s.g, around(t, s.k, c.f, s.l)), t.compose(around(t, s.k, c.g, s.l), s.h),
                           s.m, s.n, tensor(s.k, c.m), tensor(c.n, s.l), s.first, c.hole);
}

CtxSeqSplit seq_action_both(const Theory& t, const Context1& c, const CtxSeqSplit& s) {
  if (!(s.outer() == c.hole)) throw TypeError("seq_action_both: split does not fit the hole");
  return CtxSeqSplit::make(t.compose(c.f, around(t, c.m, s.f, c.n)), around(t, c.m, s.g, c.n),
                           t.compose(around(t, c.m, s.h, c.n), c.g), tensor(c.m, s.m), tensor(s.n, c.n),
                           tensor(c.m, s.k), tensor(s.l, c.n), s.first, s.second);
}

Word seq_assoc_left(const Theory& t, const CtxSeqSplit& s, const CtxSeqSplit& in) {
  if (!(in.outer() == s.first)) throw TypeError("seq_assoc_left: split does not fit the first hole");
  Word w{{t.compose(s.f, around(t, s.m, in.f, s.n)), around(t, s.m, in.g, s.n),
          t.compose(around(t, s.m, in.h, s.n), s.g), s.h},
         {HoleLayer::single(tensor(s.m, in.m), in.first, tensor(in.n, s.n)),
          HoleLayer::single(tensor(s.m, in.k), in.second, tensor(in.l, s.n)), HoleLayer::single(s.k, s.second, s.l)}};
  w.check();
  return w;
}

Word seq_assoc_right(const Theory& t, const CtxSeqSplit& s, const CtxSeqSplit& in) {
  if (!(in.outer() == s.second)) throw TypeError("seq_assoc_right: split does not fit the second hole");
  Word w{{s.f, t.compose(s.g, around(t, s.k, in.f, s.l)), around(t, s.k, in.g, s.l),
          t.compose(around(t, s.k, in.h, s.l), s.h)},
         {HoleLayer::single(s.m, s.first, s.n), HoleLayer::single(tensor(s.k, in.m), in.first, tensor(in.n, s.l)),
          HoleLayer::single(tensor(s.k, in.k), in.second, tensor(in.l, s.l))}};
  w.check();
  return w;
}

Context1 seq_unitor_left(const Theory& t, const CtxSeqSplit& s, const CtxUnit& u) {
  if (!(u.outer() == s.first)) throw TypeError("seq_unitor_left: unit does not fit the first hole");
  return Context1::make(t.seq(s.f, around(t, s.m, t.adopt(u.f), s.n), s.g), s.h, s.k, s.l, s.second);
}

Context1 seq_unitor_right(const Theory& t, const CtxSeqSplit& s, const CtxUnit& u) {
  if (!(u.outer() == s.second)) throw TypeError("seq_unitor_right: unit does not fit the second hole");
  return Context1::make(s.f, t.seq(s.g, around(t, s.k, t.adopt(u.f), s.l), s.h), s.m, s.n, s.first);
}

CtxParSplit par_action_1(const Theory& t, const CtxParSplit& p, const Context1& c) {
  if (!(c.outer() == p.first)) throw TypeError("par_action_1: context does not fit the first hole");
  ObjectList rx = tensor(p.n, p.second.x, p.o), ry = tensor(p.n, p.second.y, p.o);
  return CtxParSplit::make(t.compose(p.f, around(t, p.m, c.f, rx)), t.compose(around(t, p.m, c.g, ry), p.g),
                           tensor(p.m, c.m), tensor(c.n, p.n), p.o, c.hole, p.second);
}

CtxParSplit par_action_2(const Theory& t, const CtxParSplit& p, const Context1& c) {
  if (!(c.outer() == p.second)) throw TypeError("par_action_2: context does not fit the second hole");
  ObjectList lx = tensor(p.m, p.first.x, p.n), ly = tensor(p.m, p.first.y, p.n);
  return CtxParSplit::make(t.compose(p.f, around(t, lx, c.f, p.o)), t.compose(around(t, ly, c.g, p.o), p.g), p.m,
                           tensor(p.n, c.m), tensor(c.n, p.o), p.first, c.hole);
}

CtxParSplit par_action_both(const Theory& t, const Context1& c, const CtxParSplit& p) {
  if (!(p.outer() == c.hole)) throw TypeError("par_action_both: split does not fit the hole");
  return CtxParSplit::make(t.compose(c.f, around(t, c.m, p.f, c.n)), t.compose(around(t, c.m, p.g, c.n), c.g),
                           tensor(c.m, p.m), p.n, tensor(p.o, c.n), p.first, p.second);
}

Word par_assoc_left(const Theory& t, const CtxParSplit& p, const CtxParSplit& in) {
  if (!(in.outer() == p.first)) throw TypeError("par_assoc_left: split does not fit the first hole");
  ObjectList rx = tensor(p.n, p.second.x, p.o), ry = tensor(p.n, p.second.y, p.o);
  Word w{{t.compose(p.f, around(t, p.m, in.f, rx)), t.compose(around(t, p.m, in.g, ry), p.g)},
         {HoleLayer{{tensor(p.m, in.m), in.n, tensor(in.o, p.n), p.o}, {in.first, in.second, p.second}}}};
  w.check();
  return w;
}

Word par_assoc_right(const Theory& t, const CtxParSplit& p, const CtxParSplit& in) {
  if (!(in.outer() == p.second)) throw TypeError("par_assoc_right: split does not fit the second hole");
  ObjectList lx = tensor(p.m, p.first.x, p.n), ly = tensor(p.m, p.first.y, p.n);
  Word w{{t.compose(p.f, around(t, lx, in.f, p.o)), t.compose(around(t, ly, in.g, p.o), p.g)},
         {HoleLayer{{p.m, tensor(p.n, in.m), in.n, tensor(in.o, p.o)}, {p.first, in.first, in.second}}}};
  w.check();
  return w;
}

Context1 par_unitor_left(const Theory& t, const CtxParSplit& p, const CtxUnit& u, int form) {
  if (!(u.outer() == p.first)) throw TypeError("par_unitor_left: unit does not fit the first hole");
  Morphism uf = t.adopt(u.f);
  if (form == 0)
    return Context1::make(t.compose(p.f, around(t, p.m, uf, tensor(p.n, p.second.x, p.o))), p.g,
                          tensor(p.m, p.first.y, p.n), p.o, p.second);
  return Context1::make(p.f, t.compose(around(t, p.m, uf, tensor(p.n, p.second.y, p.o)), p.g),
                        tensor(p.m, p.first.x, p.n), p.o, p.second);
}

Context1 par_unitor_right(const Theory& t, const CtxParSplit& p, const CtxUnit& u, int form) {
  if (!(u.outer() == p.second)) throw TypeError("par_unitor_right: unit does not fit the second hole");
  Morphism uf = t.adopt(u.f);
  if (form == 0)
    return Context1::make(t.compose(p.f, around(t, tensor(p.m, p.first.x, p.n), uf, p.o)), p.g, p.m,
                          tensor(p.n, p.second.y, p.o), p.first);
  return Context1::make(p.f, t.compose(around(t, tensor(p.m, p.first.y, p.n), uf, p.o), p.g), p.m,
                        tensor(p.n, p.second.x, p.o), p.first);
}

Word laxator_left(const Theory& t, const CtxParSplit& p, const CtxSeqSplit& a, const CtxSeqSplit& b) {
  if (!(a.outer() == p.first) || !(b.outer() == p.second))
    throw TypeError("laxator_left: splits do not fit the parallel holes");
  auto both = [&](const Morphism& x, const Morphism& y) { return t.par(id(t, p.m), x, id(t, p.n), y, id(t, p.o)); };
  Word w{{t.compose(p.f, both(a.f, b.f)), both(a.g, b.g), t.compose(both(a.h, b.h), p.g)},
         {HoleLayer::pair(tensor(p.m, a.m), a.first, tensor(a.n, p.n, b.m), b.first, tensor(b.n, p.o)),
          HoleLayer::pair(tensor(p.m, a.k), a.second, tensor(a.l, p.n, b.k), b.second, tensor(b.l, p.o))}};
  w.check();
  return w;
}

Word laxator_right(const Theory& t, const CtxSeqSplit& s, const CtxParSplit& a, const CtxParSplit& b) {
  if (!(a.outer() == s.first) || !(b.outer() == s.second))
    throw TypeError("laxator_right: splits do not fit the sequential holes");
  Word w{{t.compose(s.f, around(t, s.m, a.f, s.n)),
          t.seq(around(t, s.m, a.g, s.n), s.g, around(t, s.k, b.f, s.l)),
          t.compose(around(t, s.k, b.g, s.l), s.h)},
         {HoleLayer::pair(tensor(s.m, a.m), a.first, a.n, a.second, tensor(a.o, s.n)),
          HoleLayer::pair(tensor(s.k, b.m), b.first, b.n, b.second, tensor(b.o, s.l))}};
  w.check();
  return w;
}

namespace {

bool same_morphism(const Theory& t, const Morphism& a, const Morphism& b) {
  if (t.finite()) return t.equal(a, b);
  return a.dom() == b.dom() && a.cod() == b.cod() && a.term()->str() == b.term()->str();
}

}  // namespace

Context1 dinat_slide(const Theory& t, const Context1& c, const Factorization& fac, SlideDirection dir) {
  if (dir == SlideDirection::IntoG) {
    Morphism re = t.compose(fac.core, t.par(fac.m, id(t, c.hole.x), fac.n));
    if (!same_morphism(t, re, c.f)) throw TypeError("dinat_slide: factorization does not recompose to f");
    return Context1::make(fac.core, t.compose(t.par(fac.m, id(t, c.hole.y), fac.n), c.g), fac.m.dom(), fac.n.dom(),
                          c.hole);
  }
  Morphism re = t.compose(t.par(fac.m, id(t, c.hole.y), fac.n), fac.core);
  if (!same_morphism(t, re, c.g)) throw TypeError("dinat_slide: factorization does not recompose to g");
  return Context1::make(t.compose(c.f, t.par(fac.m, id(t, c.hole.x), fac.n)), fac.core, fac.m.cod(), fac.n.cod(),
                        c.hole);
}

Morphism NormalElement::fill(const Theory& t, const Morphism& h) const {
  return t.seq(f, t.par(n1, t.adopt(h), n2), g);
}

Context1 normalize(const Theory& t, const NormalElement& e) {
  return Context1::make(e.f, t.compose(t.par(e.n1, id(t, e.hole.y), e.n2), e.g), e.n1.dom(), e.n2.dom(), e.hole);
}

NormalElement as_normal_element(const Theory& t, const Context1& c) {
  return NormalElement{c.f, c.g, c.hole, id(t, c.m), id(t, c.n)};
}

CtxElement normalize_from_duosplice(const Theory& t, const DuoElement& e) {
  if (auto* s = std::get_if<NHoleSplice>(&e)) {
    switch (s->arity()) {
      case 0: return CtxUnit{(*s)[0]};
      case 1: return Context1::make((*s)[0], (*s)[1], {}, {}, s->hole(0));
      case 2: return CtxSeqSplit::make((*s)[0], (*s)[1], (*s)[2], {}, {}, {}, {}, s->hole(0), s->hole(1));
      default: throw TypeError("normalize_from_duosplice: splits with more than two holes are words");
    }
  }
  if (auto* p = std::get_if<ParSplit>(&e)) return CtxParSplit::make(p->f, p->g, {}, {}, {}, p->left, p->right);
  if (auto* u = std::get_if<ParUnit>(&e)) return CtxUnit{phi0(t, *u)};
  return normalize(t, std::get<NormalElement>(e));
}

}  // namespace mctx
