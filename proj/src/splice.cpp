#include "mctx/splice.hpp"

namespace mctx {

NHoleSplice::NHoleSplice(std::vector<Morphism> morphisms) : ms_(std::move(morphisms)) {
  if (ms_.empty()) throw TypeError("a spliced arrow needs at least one morphism");
}

std::vector<Hole> NHoleSplice::holes() const {
  std::vector<Hole> out;
  for (std::size_t i = 0; i < arity(); ++i) out.push_back(hole(i));
  return out;
}

Word NHoleSplice::word() const {
  Word w{ms_, {}};
  for (std::size_t i = 0; i < arity(); ++i) w.layers.push_back(HoleLayer::single({}, hole(i), {}));
  return w;
}

bool splice_equal(const Theory& t, const NHoleSplice& a, const NHoleSplice& b) {
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.morphisms().size(); ++i)
    if (!t.equal(a[i], b[i])) return false;
  return true;
}

NHoleSplice splice_fill(const Theory& t, const NHoleSplice& c, std::size_t i, const NHoleSplice& d) {
  if (i >= c.arity()) throw TypeError("splice_fill: hole index " + std::to_string(i) + " out of range");
  if (!(d.outer() == c.hole(i)))
    throw TypeError("splice_fill: filler has outer type " + d.outer().str() + ", hole is " + c.hole(i).str());
  std::vector<Morphism> out(c.morphisms().begin(), c.morphisms().begin() + static_cast<std::ptrdiff_t>(i + 1));
  out.back() = t.compose(out.back(), d[0]);
  for (std::size_t k = 1; k < d.morphisms().size(); ++k) out.push_back(d[k]);
  out.back() = t.compose(out.back(), c[i + 1]);
  for (std::size_t k = i + 2; k < c.morphisms().size(); ++k) out.push_back(c[k]);
  return NHoleSplice(std::move(out));
}

Morphism splice_fill_all(const Theory& t, const NHoleSplice& c, const std::vector<Morphism>& fillers) {
  return fill(t, c.word(), fillers);
}

NHoleSplice flatten(const Theory& t, const SplicePair& p) {
  return splice_fill(t, p.outer, p.position, p.inner);
}

namespace {

void need_two(const NHoleSplice& s, const char* what) {
  if (s.arity() != 2) throw TypeError(std::string(what) + ": expected a 2-hole split");
}

}  // namespace

SplicePair splice_alpha(const Theory& t, const SplicePair& right_nested) {
  need_two(right_nested.outer, "splice_alpha");
  need_two(right_nested.inner, "splice_alpha");
  if (right_nested.position != 1) throw TypeError("splice_alpha: inner split must sit in the second hole");
  NHoleSplice p = flatten(t, right_nested);
  NHoleSplice k({p[0], p[1], p[2]});
  NHoleSplice h({t.identity(p[0].dom()), t.identity(p[2].cod()), p[3]});
  return {h, k, 0};
}

SplicePair splice_alpha_inv(const Theory& t, const SplicePair& left_nested) {
  need_two(left_nested.outer, "splice_alpha_inv");
  need_two(left_nested.inner, "splice_alpha_inv");
  if (left_nested.position != 0) throw TypeError("splice_alpha_inv: inner split must sit in the first hole");
  NHoleSplice p = flatten(t, left_nested);
  NHoleSplice f({p[0], p[1], p[3]});
  NHoleSplice g({t.identity(p[1].cod()), p[2], t.identity(p[3].dom())});
  return {f, g, 1};
}

NHoleSplice splice_lambda(const Theory& t, const NHoleSplice& s, const Morphism& u) {
  need_two(s, "splice_lambda");
  return NHoleSplice({t.seq(s[0], u, s[1]), s[2]});
}

NHoleSplice splice_rho(const Theory& t, const NHoleSplice& s, const Morphism& u) {
  need_two(s, "splice_rho");
  return NHoleSplice({s[0], t.seq(s[1], u, s[2])});
}

SpliceNodePtr splice_node(NHoleSplice split, std::vector<SpliceChild> children) {
  if (children.size() != split.arity()) throw TypeError("splice node: one child per hole required");
  for (std::size_t i = 0; i < children.size(); ++i) {
    Hole want = split.hole(i);
    if (auto* m = std::get_if<Morphism>(&children[i])) {
      if (!(m->type() == want)) throw TypeError("splice node: unit child does not fit " + want.str());
    } else if (auto* n = std::get_if<SpliceNodePtr>(&children[i])) {
      if (!((*n)->split.outer() == want)) throw TypeError("splice node: child split does not fit " + want.str());
    }
  }
  return std::make_shared<const SpliceNode>(SpliceNode{std::move(split), std::move(children)});
}

NHoleSplice flatten(const Theory& t, const SpliceNodePtr& node) {
  NHoleSplice acc = node->split;
  // Fill right to left so earlier hole indices stay valid.
  for (std::size_t i = node->children.size(); i-- > 0;) {
    const auto& ch = node->children[i];
    if (auto* m = std::get_if<Morphism>(&ch)) {
      acc = splice_fill(t, acc, i, NHoleSplice({*m}));
    } else if (auto* n = std::get_if<SpliceNodePtr>(&ch)) {
      acc = splice_fill(t, acc, i, flatten(t, *n));
    }
  }
  return acc;
}

namespace {

SpliceNodePtr rewrite_here(const Theory& t, const SpliceNodePtr& n, SpliceRewrite r) {
  switch (r) {
    case SpliceRewrite::AssocLeft: {
      auto* inner = std::get_if<SpliceNodePtr>(&n->children.at(1));
      if (!inner) throw TypeError("assoc-left: second child is not a split");
      auto res = splice_alpha(t, {n->split, (*inner)->split, 1});
      auto k = splice_node(res.inner, {n->children[0], (*inner)->children[0]});
      return splice_node(res.outer, {k, (*inner)->children[1]});
    }
    case SpliceRewrite::AssocRight: {
      auto* inner = std::get_if<SpliceNodePtr>(&n->children.at(0));
      if (!inner) throw TypeError("assoc-right: first child is not a split");
      auto res = splice_alpha_inv(t, {n->split, (*inner)->split, 0});
      auto g = splice_node(res.inner, {(*inner)->children[1], n->children[1]});
      return splice_node(res.outer, {(*inner)->children[0], g});
    }
    case SpliceRewrite::Lambda: {
      auto* u = std::get_if<Morphism>(&n->children.at(0));
      if (!u) throw TypeError("lambda: first child is not a unit");
      return splice_node(splice_lambda(t, n->split, *u), {n->children[1]});
    }
    case SpliceRewrite::Rho: {
      auto* u = std::get_if<Morphism>(&n->children.at(1));
      if (!u) throw TypeError("rho: second child is not a unit");
      return splice_node(splice_rho(t, n->split, *u), {n->children[0]});
    }
  }
  throw TypeError("unreachable");
}

}  // namespace

SpliceNodePtr rewrite_at(const Theory& t, const SpliceNodePtr& root, const TreePath& path, SpliceRewrite r) {
  if (path.empty()) return rewrite_here(t, root, r);
  auto children = root->children;
  auto* child = std::get_if<SpliceNodePtr>(&children.at(path[0]));
  if (!child) throw TypeError("rewrite path leads to a leaf");
  *child = rewrite_at(t, *child, TreePath(path.begin() + 1, path.end()), r);
  return splice_node(root->split, std::move(children));
}

}  // namespace mctx
