#include "mctx/duosplice.hpp"

namespace mctx {

ParSplit ParSplit::make(Morphism f, Morphism g, Hole left, Hole right) {
  if (f.cod() != tensor(left.x, right.x))
    throw TypeError("parallel split: f lands in " + f.cod().str() + ", holes need " + tensor(left.x, right.x).str());
  if (g.dom() != tensor(left.y, right.y))
    throw TypeError("parallel split: g starts at " + g.dom().str() + ", holes give " + tensor(left.y, right.y).str());
  return ParSplit{std::move(f), std::move(g), std::move(left), std::move(right)};
}

ParSplit ParSplit::identity(const Theory& t, const Hole& left, const Hole& right) {
  return make(t.identity(tensor(left.x, right.x)), t.identity(tensor(left.y, right.y)), left, right);
}

Word ParSplit::word() const { return Word{{f, g}, {HoleLayer::pair({}, left, {}, right, {})}}; }

ParUnit ParUnit::make(Morphism f, Morphism g) {
  if (!f.cod().empty() || !g.dom().empty()) throw TypeError("parallel unit pieces must meet at I");
  return ParUnit{std::move(f), std::move(g)};
}

Psi2Result psi2(const Theory& t, const ParSplit& outer, const NHoleSplice& left, const NHoleSplice& right) {
  if (left.arity() != 2 || right.arity() != 2) throw TypeError("psi2: both inner splits need two holes");
  if (!(left.outer() == outer.left) || !(right.outer() == outer.right))
    throw TypeError("psi2: inner splits do not fit the parallel holes");
  NHoleSplice seq({t.compose(outer.f, t.tensor(left[0], right[0])), t.tensor(left[1], right[1]),
                   t.compose(t.tensor(left[2], right[2]), outer.g)});
  return {seq, ParSplit::identity(t, left.hole(0), right.hole(0)),
          ParSplit::identity(t, left.hole(1), right.hole(1))};
}

Psi0Result psi0(const Theory& t, const ParUnit& u) {
  Morphism id = t.identity({});
  return {NHoleSplice({u.f, id, u.g}), ParUnit{id, id}, ParUnit{id, id}};
}

Morphism phi2(const Theory& t, const ParSplit& outer, const Morphism& h0, const Morphism& h1) {
  return t.seq(outer.f, t.tensor(h0, h1), outer.g);
}

Morphism phi0(const Theory& t, const ParUnit& u) { return t.compose(u.f, u.g); }

NHoleSplice par_representable(const ParSplit& p) { return NHoleSplice({p.f, p.g}); }

ParSplit par_from_representable(const NHoleSplice& s, const Hole& left, const Hole& right) {
  if (s.arity() != 1) throw TypeError("par_from_representable: expected one hole");
  return ParSplit::make(s[0], s[1], left, right);
}

NHoleSplice unit_representable(const ParUnit& u) { return NHoleSplice({u.f, u.g}); }

ParUnit unit_from_representable(const NHoleSplice& s) {
  if (s.arity() != 1) throw TypeError("unit_from_representable: expected one hole");
  return ParUnit::make(s[0], s[1]);
}

DuoPtr duo_open(Hole h) { return std::make_shared<const DuoNode>(DuoNode{DuoNode::Kind::Open, std::move(h), {}, {}}); }

DuoPtr duo_seq_unit(Morphism f) {
  Hole h = f.type();
  return std::make_shared<const DuoNode>(DuoNode{DuoNode::Kind::SeqUnit, h, {std::move(f)}, {}});
}

DuoPtr duo_par_unit(Morphism a0, Morphism a1) {
  auto u = ParUnit::make(std::move(a0), std::move(a1));
  return std::make_shared<const DuoNode>(DuoNode{DuoNode::Kind::ParUnit, u.outer(), {u.f, u.g}, {}});
}

DuoPtr duo_seq(const NHoleSplice& s, DuoPtr first, DuoPtr second) {
  if (s.arity() != 2) throw TypeError("duo_seq: expected a 2-hole split");
  if (!(first->type == s.hole(0)) || !(second->type == s.hole(1))) throw TypeError("duo_seq: children do not fit");
  return std::make_shared<const DuoNode>(
      DuoNode{DuoNode::Kind::Seq, s.outer(), s.morphisms(), {std::move(first), std::move(second)}});
}

DuoPtr duo_par(const ParSplit& p, DuoPtr first, DuoPtr second) {
  if (!(first->type == p.left) || !(second->type == p.right)) throw TypeError("duo_par: children do not fit");
  return std::make_shared<const DuoNode>(
      DuoNode{DuoNode::Kind::Par, p.outer(), {p.f, p.g}, {std::move(first), std::move(second)}});
}

DuoPtr duo_act(Morphism f, Morphism g, DuoPtr kid) {
  if (f.cod() != kid->type.x || g.dom() != kid->type.y) throw TypeError("duo_act: boundary mismatch");
  Hole h{f.dom(), g.cod()};
  return std::make_shared<const DuoNode>(DuoNode{DuoNode::Kind::Act, h, {std::move(f), std::move(g)}, {std::move(kid)}});
}

namespace {

void collect_holes(const DuoPtr& n, std::vector<Hole>& out) {
  if (n->kind == DuoNode::Kind::Open) out.push_back(n->type);
  for (const auto& k : n->kids) collect_holes(k, out);
}

Morphism eval_node(const Theory& t, const DuoPtr& n, const std::vector<Morphism>& fs, std::size_t& next) {
  switch (n->kind) {
    case DuoNode::Kind::Open: {
      const Morphism& h = fs.at(next++);
      if (!(h.type() == n->type)) throw TypeError("duo_eval: filler does not fit " + n->type.str());
      return t.adopt(h);
    }
    case DuoNode::Kind::SeqUnit: return n->ms[0];
    case DuoNode::Kind::ParUnit: return t.compose(n->ms[0], n->ms[1]);
    case DuoNode::Kind::Seq: {
      Morphism a = eval_node(t, n->kids[0], fs, next);
      Morphism b = eval_node(t, n->kids[1], fs, next);
      return t.seq(n->ms[0], a, n->ms[1], b, n->ms[2]);
    }
    case DuoNode::Kind::Par: {
      Morphism a = eval_node(t, n->kids[0], fs, next);
      Morphism b = eval_node(t, n->kids[1], fs, next);
      return t.seq(n->ms[0], t.tensor(a, b), n->ms[1]);
    }
    case DuoNode::Kind::Act: return t.seq(n->ms[0], eval_node(t, n->kids[0], fs, next), n->ms[1]);
  }
  throw TypeError("unreachable");
}

const DuoPtr& kid_of(const DuoPtr& n, DuoNode::Kind parent, std::size_t i, const char* what) {
  if (n->kind != parent) throw TypeError(std::string(what) + ": wrong node kind");
  return n->kids.at(i);
}

void need(const DuoPtr& n, DuoNode::Kind k, const char* what) {
  if (n->kind != k) throw TypeError(std::string(what) + ": wrong child kind");
}

ParSplit par_of(const DuoPtr& n) { return ParSplit::make(n->ms[0], n->ms[1], n->kids[0]->type, n->kids[1]->type); }
NHoleSplice seq_of(const DuoPtr& n) { return NHoleSplice(n->ms); }

DuoPtr rewrite_here(const Theory& t, const DuoPtr& n, DuoRewrite r, const DuoHooks& hooks) {
  using K = DuoNode::Kind;
  switch (r) {
    case DuoRewrite::ParAssocRight: {
      const DuoPtr& in = kid_of(n, K::Par, 0, "par-assoc");
      need(in, K::Par, "par-assoc");
      const DuoPtr &a = in->kids[0], &b = in->kids[1], &c = n->kids[1];
      Morphism f = t.compose(n->ms[0], t.tensor(in->ms[0], t.identity(c->type.x)));
      Morphism g = t.compose(t.tensor(in->ms[1], t.identity(c->type.y)), n->ms[1]);
      Hole bc{tensor(b->type.x, c->type.x), tensor(b->type.y, c->type.y)};
      return duo_par(ParSplit::make(f, g, a->type, bc), a, duo_par(ParSplit::identity(t, b->type, c->type), b, c));
    }
    case DuoRewrite::ParAssocLeft: {
      const DuoPtr& in = kid_of(n, K::Par, 1, "par-assoc");
      need(in, K::Par, "par-assoc");
      const DuoPtr &a = n->kids[0], &b = in->kids[0], &c = in->kids[1];
      Morphism f = t.compose(n->ms[0], t.tensor(t.identity(a->type.x), in->ms[0]));
      Morphism g = t.compose(t.tensor(t.identity(a->type.y), in->ms[1]), n->ms[1]);
      Hole ab{tensor(a->type.x, b->type.x), tensor(a->type.y, b->type.y)};
      return duo_par(ParSplit::make(f, g, ab, c->type), duo_par(ParSplit::identity(t, a->type, b->type), a, b), c);
    }
    case DuoRewrite::SeqAssocRight: {
      const DuoPtr& in = kid_of(n, K::Seq, 0, "seq-assoc");
      need(in, K::Seq, "seq-assoc");
      auto res = splice_alpha_inv(t, {seq_of(n), seq_of(in), 0});
      return duo_seq(res.outer, in->kids[0], duo_seq(res.inner, in->kids[1], n->kids[1]));
    }
    case DuoRewrite::SeqAssocLeft: {
      const DuoPtr& in = kid_of(n, K::Seq, 1, "seq-assoc");
      need(in, K::Seq, "seq-assoc");
      auto res = splice_alpha(t, {seq_of(n), seq_of(in), 1});
      return duo_seq(res.outer, duo_seq(res.inner, n->kids[0], in->kids[0]), in->kids[1]);
    }
    case DuoRewrite::ParLambda: {
      const DuoPtr& u = kid_of(n, K::Par, 0, "par-lambda");
      need(u, K::ParUnit, "par-lambda");
      const DuoPtr& a = n->kids[1];
      return duo_act(t.compose(n->ms[0], t.tensor(u->ms[0], t.identity(a->type.x))),
                     t.compose(t.tensor(u->ms[1], t.identity(a->type.y)), n->ms[1]), a);
    }
    case DuoRewrite::ParRho: {
      const DuoPtr& u = kid_of(n, K::Par, 1, "par-rho");
      need(u, K::ParUnit, "par-rho");
      const DuoPtr& a = n->kids[0];
      return duo_act(t.compose(n->ms[0], t.tensor(t.identity(a->type.x), u->ms[0])),
                     t.compose(t.tensor(t.identity(a->type.y), u->ms[1]), n->ms[1]), a);
    }
    case DuoRewrite::SeqLambda: {
      const DuoPtr& u = kid_of(n, K::Seq, 0, "seq-lambda");
      need(u, K::SeqUnit, "seq-lambda");
      return duo_act(t.seq(n->ms[0], u->ms[0], n->ms[1]), n->ms[2], n->kids[1]);
    }
    case DuoRewrite::SeqRho: {
      const DuoPtr& u = kid_of(n, K::Seq, 1, "seq-rho");
      need(u, K::SeqUnit, "seq-rho");
      return duo_act(n->ms[0], t.seq(n->ms[1], u->ms[0], n->ms[2]), n->kids[0]);
    }
    case DuoRewrite::Psi2: {
      const DuoPtr& l = kid_of(n, K::Par, 0, "psi2");
      const DuoPtr& r = n->kids[1];
      need(l, K::Seq, "psi2");
      need(r, K::Seq, "psi2");
      auto res = hooks.psi2(t, par_of(n), seq_of(l), seq_of(r));
      return duo_seq(res.seq, duo_par(res.first, l->kids[0], r->kids[0]), duo_par(res.second, l->kids[1], r->kids[1]));
    }
    case DuoRewrite::Psi0: {
      need(n, K::ParUnit, "psi0");
      auto res = psi0(t, ParUnit{n->ms[0], n->ms[1]});
      return duo_seq(res.seq, duo_par_unit(res.first.f, res.first.g), duo_par_unit(res.second.f, res.second.g));
    }
    case DuoRewrite::Phi2: {
      const DuoPtr& a = kid_of(n, K::Par, 0, "phi2");
      const DuoPtr& b = n->kids[1];
      need(a, K::SeqUnit, "phi2");
      need(b, K::SeqUnit, "phi2");
      return duo_seq_unit(phi2(t, par_of(n), a->ms[0], b->ms[0]));
    }
    case DuoRewrite::Phi0: {
      need(n, K::ParUnit, "phi0");
      return duo_seq_unit(phi0(t, ParUnit{n->ms[0], n->ms[1]}));
    }
  }
  throw TypeError("unreachable");
}

DuoPtr with_kid(const DuoPtr& n, std::size_t i, DuoPtr kid) {
  auto copy = std::make_shared<DuoNode>(*n);
  if (!(copy->kids.at(i)->type == kid->type)) throw TypeError("rewrite changed a boundary");
  copy->kids[i] = std::move(kid);
  return copy;
}

}  // namespace

std::vector<Hole> duo_holes(const DuoPtr& n) {
  std::vector<Hole> out;
  collect_holes(n, out);
  return out;
}

Morphism duo_eval(const Theory& t, const DuoPtr& n, const std::vector<Morphism>& fillers) {
  std::size_t next = 0;
  Morphism m = eval_node(t, n, fillers, next);
  if (next != fillers.size()) throw TypeError("duo_eval: too many fillers");
  return m;
}

DuoPtr duo_rewrite(const Theory& t, const DuoPtr& root, const TreePath& path, DuoRewrite r, const DuoHooks& hooks) {
  if (path.empty()) return rewrite_here(t, root, r, hooks);
  return with_kid(root, path[0],
                  duo_rewrite(t, root->kids.at(path[0]), TreePath(path.begin() + 1, path.end()), r, hooks));
}

}  // namespace mctx
