#include "mctx/contour.hpp"

#include <set>

namespace mctx {

std::string tag_name(EqTag t) {
  switch (t) {
    case EqTag::Alpha: return "alpha";
    case EqTag::Lambda: return "lambda";
    case EqTag::Rho: return "rho";
    case EqTag::ParAlpha: return "par-alpha";
    case EqTag::ParLambda: return "par-lambda";
    case EqTag::ParRho: return "par-rho";
    case EqTag::Psi2: return "psi2";
    case EqTag::Psi0: return "psi0";
    case EqTag::Phi2: return "phi2";
    case EqTag::Phi0: return "phi0";
  }
  return "?";
}

std::string PathExpr::str() const {
  switch (kind) {
    case Kind::Gen: return gen;
    case Kind::Id: return "id[" + obj.str() + "]";
    case Kind::Seq:
    case Kind::Par: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += kind == Kind::Seq ? " ; " : " * ";
        out += parts[i].str();
      }
      return out + ")";
    }
  }
  return "?";
}

std::string CategoryPresentation::str() const {
  std::string out = "objects:";
  for (const auto& o : objects) out += " " + o;
  out += "\n";
  for (const auto& g : generators) out += "gen " + g.name + " : " + g.dom.str() + " -> " + g.cod.str() + "\n";
  for (const auto& r : relations) out += "rel[" + r.tag + "] " + r.lhs.str() + " = " + r.rhs.str() + "\n";
  return out;
}

namespace {

ObjectList L(const std::string& x) { return ObjectList{x + "^L"}; }
ObjectList R(const std::string& x) { return ObjectList{x + "^R"}; }

using P = PathExpr;

P g(const PresElement& e, int i) { return P::generator(e.name + "_" + std::to_string(i)); }
P idL(const std::string& x) { return P::identity(L(x)); }
P idR(const std::string& x) { return P::identity(R(x)); }

class Emitter {
 public:
  Emitter(const PromonoidalPresentation& p, bool monoidal) : p_(p), monoidal_(monoidal) {
    for (const auto& e : p.elements) byname_[e.name] = &e;
  }

  CategoryPresentation run() {
    CategoryPresentation out;
    out.monoidal = monoidal_;
    std::set<std::string> known(p_.objects.begin(), p_.objects.end());
    for (const auto& o : p_.objects) {
      out.objects.push_back(o + "^L");
      out.objects.push_back(o + "^R");
    }
    for (const auto& e : p_.elements) {
      auto check_obj = [&](const std::string& o) {
        if (!known.count(o)) throw TypeError("element '" + e.name + "' mentions unknown object '" + o + "'");
      };
      check_obj(e.outer);
      for (const auto& h : e.holes) check_obj(h);
      emit_generators(e, out.generators);
    }
    for (const auto& eq : p_.equations) emit_relations(eq, out.relations);
    return out;
  }

 private:
  void emit_generators(const PresElement& e, std::vector<CatGenerator>& gens) {
    auto add = [&](int i, ObjectList d, ObjectList c) {
      gens.push_back({e.name + "_" + std::to_string(i), std::move(d), std::move(c)});
    };
    auto arity = [&](std::size_t n) {
      if (e.holes.size() != n) throw TypeError("element '" + e.name + "' has the wrong number of holes");
    };
    const std::string& a = e.outer;
    switch (e.kind) {
      case ElementKind::SeqUnit:
        arity(0);
        add(0, L(a), R(a));
        return;
      case ElementKind::Morph:
        arity(1);
        add(0, L(a), L(e.holes[0]));
        add(1, R(e.holes[0]), R(a));
        return;
      case ElementKind::SeqSplit:
        arity(2);
        add(0, L(a), L(e.holes[0]));
        add(1, R(e.holes[0]), L(e.holes[1]));
        add(2, R(e.holes[1]), R(a));
        return;
      case ElementKind::ParSplit:
        if (!monoidal_) throw TypeError("parallel split '" + e.name + "' in a promonoidal presentation");
        arity(2);
        add(0, L(a), tensor(L(e.holes[0]), L(e.holes[1])));
        add(1, tensor(R(e.holes[0]), R(e.holes[1])), R(a));
        return;
      case ElementKind::ParUnit:
        if (!monoidal_) throw TypeError("parallel unit '" + e.name + "' in a promonoidal presentation");
        arity(0);
        add(0, L(a), {});
        add(1, {}, R(a));
        return;
    }
  }

  const PresElement& el(const EquationInstance& eq, std::size_t i, ElementKind k) {
    if (i >= eq.elements.size()) throw TypeError(tag_name(eq.tag) + " instance: too few elements");
    auto it = byname_.find(eq.elements[i]);
    if (it == byname_.end()) throw TypeError(tag_name(eq.tag) + " instance: unknown element '" + eq.elements[i] + "'");
    if (it->second->kind != k) throw TypeError(tag_name(eq.tag) + " instance: element '" + eq.elements[i] + "' has the wrong kind");
    return *it->second;
  }

  static void same(const std::string& a, const std::string& b, const EquationInstance& eq) {
    if (a != b) throw TypeError("ill-typed " + tag_name(eq.tag) + " instance: object " + a + " vs " + b);
  }

  void emit_relations(const EquationInstance& eq, std::vector<Relation>& rels) {
    std::string tag = tag_name(eq.tag);
    auto rel = [&](P lhs, P rhs) { rels.push_back({tag, std::move(lhs), std::move(rhs)}); };
    using K = ElementKind;
    bool par_tag = eq.tag == EqTag::ParAlpha || eq.tag == EqTag::ParLambda || eq.tag == EqTag::ParRho ||
                   eq.tag == EqTag::Psi2 || eq.tag == EqTag::Psi0 || eq.tag == EqTag::Phi2 || eq.tag == EqTag::Phi0;
    if (par_tag && !monoidal_) throw TypeError(tag + " instance in a promonoidal presentation");
    switch (eq.tag) {
      case EqTag::Alpha: {
        const auto &a = el(eq, 0, K::SeqSplit), &b = el(eq, 1, K::SeqSplit), &c = el(eq, 2, K::SeqSplit),
                   &d = el(eq, 3, K::SeqSplit);
        same(b.outer, a.holes[1], eq);
        same(d.outer, c.holes[0], eq);
        same(a.outer, c.outer, eq);
        same(a.holes[0], d.holes[0], eq);
        same(b.holes[0], d.holes[1], eq);
        same(b.holes[1], c.holes[1], eq);
        rel(g(a, 0), P::seq({g(c, 0), g(d, 0)}));
        rel(P::seq({g(a, 1), g(b, 0)}), g(d, 1));
        rel(g(b, 1), P::seq({g(d, 2), g(c, 1)}));
        rel(P::seq({g(b, 2), g(a, 2)}), g(c, 2));
        return;
      }
      case EqTag::Lambda: {
        const auto &d = el(eq, 0, K::SeqSplit), &e = el(eq, 1, K::SeqUnit), &c = el(eq, 2, K::Morph);
        same(e.outer, d.holes[0], eq);
        same(c.outer, d.outer, eq);
        same(c.holes[0], d.holes[1], eq);
        rel(g(c, 0), P::seq({g(d, 0), g(e, 0), g(d, 1)}));
        rel(g(c, 1), g(d, 2));
        return;
      }
      case EqTag::Rho: {
        const auto &a = el(eq, 0, K::SeqSplit), &b = el(eq, 1, K::SeqUnit), &c = el(eq, 2, K::Morph);
        same(b.outer, a.holes[1], eq);
        same(c.outer, a.outer, eq);
        same(c.holes[0], a.holes[0], eq);
        rel(g(a, 0), g(c, 0));
        rel(P::seq({g(a, 1), g(b, 0), g(a, 2)}), g(c, 1));
        return;
      }
      case EqTag::ParAlpha: {
        const auto &a = el(eq, 0, K::ParSplit), &b = el(eq, 1, K::ParSplit), &c = el(eq, 2, K::ParSplit),
                   &d = el(eq, 3, K::ParSplit);
        same(b.outer, a.holes[0], eq);
        same(d.outer, c.holes[1], eq);
        same(a.outer, c.outer, eq);
        same(b.holes[0], c.holes[0], eq);
        same(b.holes[1], d.holes[0], eq);
        same(a.holes[1], d.holes[1], eq);
        const std::string &x = c.holes[0], &z = a.holes[1];
        rel(P::seq({g(a, 0), P::par({g(b, 0), idL(z)})}), P::seq({g(c, 0), P::par({idL(x), g(d, 0)})}));
        rel(P::seq({P::par({g(b, 1), idR(z)}), g(a, 1)}), P::seq({P::par({idR(x), g(d, 1)}), g(c, 1)}));
        return;
      }
      case EqTag::ParLambda:
      case EqTag::ParRho: {
        const auto &a = el(eq, 0, K::ParSplit), &b = el(eq, 1, K::ParUnit), &c = el(eq, 2, K::Morph);
        bool left = eq.tag == EqTag::ParLambda;
        same(b.outer, a.holes[left ? 0 : 1], eq);
        same(c.outer, a.outer, eq);
        const std::string& rest = a.holes[left ? 1 : 0];
        same(c.holes[0], rest, eq);
        P in = left ? P::par({g(b, 0), idL(rest)}) : P::par({idL(rest), g(b, 0)});
        P out = left ? P::par({g(b, 1), idR(rest)}) : P::par({idR(rest), g(b, 1)});
        rel(P::seq({g(a, 0), in}), g(c, 0));
        rel(P::seq({out, g(a, 1)}), g(c, 1));
        return;
      }
      case EqTag::Psi2: {
        const auto &a = el(eq, 0, K::ParSplit), &b = el(eq, 1, K::SeqSplit), &c = el(eq, 2, K::SeqSplit),
                   &d = el(eq, 3, K::SeqSplit), &e = el(eq, 4, K::ParSplit), &f = el(eq, 5, K::ParSplit);
        same(b.outer, a.holes[0], eq);
        same(c.outer, a.holes[1], eq);
        same(d.outer, a.outer, eq);
        same(e.outer, d.holes[0], eq);
        same(f.outer, d.holes[1], eq);
        same(e.holes[0], b.holes[0], eq);
        same(e.holes[1], c.holes[0], eq);
        same(f.holes[0], b.holes[1], eq);
        same(f.holes[1], c.holes[1], eq);
        rel(P::seq({g(a, 0), P::par({g(b, 0), g(c, 0)})}), P::seq({g(d, 0), g(e, 0)}));
        rel(P::par({g(b, 1), g(c, 1)}), P::seq({g(e, 1), g(d, 1), g(f, 0)}));
        rel(P::seq({P::par({g(b, 2), g(c, 2)}), g(a, 1)}), P::seq({g(f, 1), g(d, 2)}));
        return;
      }
      case EqTag::Psi0: {
        const auto &a = el(eq, 0, K::ParUnit), &b = el(eq, 1, K::SeqSplit), &c = el(eq, 2, K::ParUnit),
                   &d = el(eq, 3, K::ParUnit);
        same(b.outer, a.outer, eq);
        same(c.outer, b.holes[0], eq);
        same(d.outer, b.holes[1], eq);
        rel(g(a, 0), P::seq({g(b, 0), g(c, 0)}));
        rel(P::identity({}), P::seq({g(c, 1), g(b, 1), g(d, 0)}));
        rel(g(a, 1), P::seq({g(d, 1), g(b, 2)}));
        return;
      }
      case EqTag::Phi2: {
        const auto &a = el(eq, 0, K::ParSplit), &b = el(eq, 1, K::SeqUnit), &c = el(eq, 2, K::SeqUnit),
                   &d = el(eq, 3, K::SeqUnit);
        same(b.outer, a.holes[0], eq);
        same(c.outer, a.holes[1], eq);
        same(d.outer, a.outer, eq);
        rel(P::seq({g(a, 0), P::par({g(b, 0), g(c, 0)}), g(a, 1)}), g(d, 0));
        return;
      }
      case EqTag::Phi0: {
        const auto &a = el(eq, 0, K::ParUnit), &b = el(eq, 1, K::SeqUnit);
        same(a.outer, b.outer, eq);
        rel(P::seq({g(a, 0), g(a, 1)}), g(b, 0));
        return;
      }
    }
  }

  const PromonoidalPresentation& p_;
  bool monoidal_;
  std::map<std::string, const PresElement*> byname_;
};

PathExpr rename_path(const PathExpr& p, const std::function<std::string(const std::string&)>& f);

ObjectList rename_obj(const ObjectList& o, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> atoms;
  for (const auto& a : o.atoms()) {
    auto hat = a.rfind('^');
    atoms.push_back(f(a.substr(0, hat)) + a.substr(hat));
  }
  return ObjectList(atoms);
}

std::string rename_gen(const std::string& g, const std::function<std::string(const std::string&)>& f) {
  auto us = g.rfind('_');
  return f(g.substr(0, us)) + g.substr(us);
}

PathExpr rename_path(const PathExpr& p, const std::function<std::string(const std::string&)>& f) {
  PathExpr out = p;
  if (p.kind == PathExpr::Kind::Gen) out.gen = rename_gen(p.gen, f);
  if (p.kind == PathExpr::Kind::Id) out.obj = rename_obj(p.obj, f);
  for (auto& part : out.parts) part = rename_path(part, f);
  return out;
}

}  // namespace

CategoryPresentation contour(const PromonoidalPresentation& p) { return Emitter(p, false).run(); }
CategoryPresentation monoidal_contour(const PromonoidalPresentation& p) { return Emitter(p, true).run(); }

PromonoidalPresentation renamed(const PromonoidalPresentation& p,
                                const std::function<std::string(const std::string&)>& f) {
  PromonoidalPresentation out = p;
  for (auto& o : out.objects) o = f(o);
  for (auto& e : out.elements) {
    e.name = f(e.name);
    e.outer = f(e.outer);
    for (auto& h : e.holes) h = f(h);
  }
  for (auto& eq : out.equations)
    for (auto& n : eq.elements) n = f(n);
  return out;
}

CategoryPresentation renamed(const CategoryPresentation& c, const std::function<std::string(const std::string&)>& f) {
  CategoryPresentation out = c;
  for (auto& o : out.objects) o = rename_obj(ObjectList{o}, f)[0];
  for (auto& g : out.generators) {
    g.name = rename_gen(g.name, f);
    g.dom = rename_obj(g.dom, f);
    g.cod = rename_obj(g.cod, f);
  }
  for (auto& r : out.relations) {
    r.lhs = rename_path(r.lhs, f);
    r.rhs = rename_path(r.rhs, f);
  }
  return out;
}

std::string SampleBuilder::object(const Hole& h) {
  auto it = names_.find(h);
  if (it != names_.end()) return it->second;
  std::string name = "O" + std::to_string(names_.size());
  names_[h] = name;
  s_.pres.objects.push_back(name);
  s_.objects[name] = h;
  return name;
}

std::string SampleBuilder::element(ElementKind k, const Hole& outer, const std::vector<Hole>& holes,
                                   std::vector<Morphism> comps) {
  std::string name = "e" + std::to_string(s_.pres.elements.size());
  PresElement e{name, k, object(outer), {}};
  for (const auto& h : holes) e.holes.push_back(object(h));
  s_.pres.elements.push_back(e);
  s_.components[name] = std::move(comps);
  return name;
}

std::string SampleBuilder::add_unit(const Morphism& u) { return element(ElementKind::SeqUnit, u.type(), {}, {u}); }

std::string SampleBuilder::add_morphism(const NHoleSplice& s) {
  if (s.arity() != 1) throw TypeError("add_morphism: expected one hole");
  return element(ElementKind::Morph, s.outer(), s.holes(), s.morphisms());
}

std::string SampleBuilder::add_split(const NHoleSplice& s) {
  if (s.arity() != 2) throw TypeError("add_split: expected two holes");
  return element(ElementKind::SeqSplit, s.outer(), s.holes(), s.morphisms());
}

std::string SampleBuilder::add_par_split(const ParSplit& p) {
  return element(ElementKind::ParSplit, p.outer(), {p.left, p.right}, {p.f, p.g});
}

std::string SampleBuilder::add_par_unit(const ParUnit& u) {
  return element(ElementKind::ParUnit, u.outer(), {}, {u.f, u.g});
}

void SampleBuilder::add_alpha(const SplicePair& rn) {
  auto res = splice_alpha(t_, rn);
  std::string a = add_split(rn.outer), b = add_split(rn.inner), c = add_split(res.outer), d = add_split(res.inner);
  s_.pres.equations.push_back({EqTag::Alpha, {a, b, c, d}});
}

void SampleBuilder::add_lambda(const NHoleSplice& s, const Morphism& u) {
  std::string d = add_split(s), e = add_unit(u), c = add_morphism(splice_lambda(t_, s, u));
  s_.pres.equations.push_back({EqTag::Lambda, {d, e, c}});
}

void SampleBuilder::add_rho(const NHoleSplice& s, const Morphism& u) {
  std::string a = add_split(s), b = add_unit(u), c = add_morphism(splice_rho(t_, s, u));
  s_.pres.equations.push_back({EqTag::Rho, {a, b, c}});
}

void SampleBuilder::add_par_alpha(const ParSplit& a, const ParSplit& b) {
  if (!(b.outer() == a.left)) throw TypeError("add_par_alpha: inner split does not fit");
  Morphism f = t_.compose(a.f, t_.tensor(b.f, t_.identity(a.right.x)));
  Morphism g = t_.compose(t_.tensor(b.g, t_.identity(a.right.y)), a.g);
  Hole v{tensor(b.right.x, a.right.x), tensor(b.right.y, a.right.y)};
  ParSplit c = ParSplit::make(f, g, b.left, v);
  ParSplit d = ParSplit::identity(t_, b.right, a.right);
  std::string na = add_par_split(a), nb = add_par_split(b), nc = add_par_split(c), nd = add_par_split(d);
  s_.pres.equations.push_back({EqTag::ParAlpha, {na, nb, nc, nd}});
}

void SampleBuilder::add_par_lambda(const ParSplit& a, const ParUnit& b) {
  NHoleSplice c({t_.compose(a.f, t_.tensor(b.f, t_.identity(a.right.x))),
                 t_.compose(t_.tensor(b.g, t_.identity(a.right.y)), a.g)});
  std::string na = add_par_split(a), nb = add_par_unit(b), nc = add_morphism(c);
  s_.pres.equations.push_back({EqTag::ParLambda, {na, nb, nc}});
}

void SampleBuilder::add_par_rho(const ParSplit& a, const ParUnit& b) {
  NHoleSplice c({t_.compose(a.f, t_.tensor(t_.identity(a.left.x), b.f)),
                 t_.compose(t_.tensor(t_.identity(a.left.y), b.g), a.g)});
  std::string na = add_par_split(a), nb = add_par_unit(b), nc = add_morphism(c);
  s_.pres.equations.push_back({EqTag::ParRho, {na, nb, nc}});
}

void SampleBuilder::add_psi2(const ParSplit& a, const NHoleSplice& b, const NHoleSplice& c, const Psi2Fn& psi) {
  auto res = psi(t_, a, b, c);
  std::string na = add_par_split(a), nb = add_split(b), nc = add_split(c), nd = add_split(res.seq),
              ne = add_par_split(res.first), nf = add_par_split(res.second);
  s_.pres.equations.push_back({EqTag::Psi2, {na, nb, nc, nd, ne, nf}});
}

void SampleBuilder::add_psi0(const ParUnit& a) {
  auto res = psi0(t_, a);
  std::string na = add_par_unit(a), nb = add_split(res.seq), nc = add_par_unit(res.first),
              nd = add_par_unit(res.second);
  s_.pres.equations.push_back({EqTag::Psi0, {na, nb, nc, nd}});
}

void SampleBuilder::add_phi2(const ParSplit& a, const Morphism& b, const Morphism& c) {
  std::string na = add_par_split(a), nb = add_unit(b), nc = add_unit(c), nd = add_unit(phi2(t_, a, b, c));
  s_.pres.equations.push_back({EqTag::Phi2, {na, nb, nc, nd}});
}

void SampleBuilder::add_phi0(const ParUnit& a) {
  std::string na = add_par_unit(a), nb = add_unit(phi0(t_, a));
  s_.pres.equations.push_back({EqTag::Phi0, {na, nb}});
}

namespace {

ObjectList interpret_obj(const ObjectList& o, const std::map<std::string, Hole>& objs) {
  ObjectList out;
  for (const auto& a : o.atoms()) {
    auto hat = a.rfind('^');
    const Hole& h = objs.at(a.substr(0, hat));
    out = tensor(out, a.substr(hat) == "^L" ? h.x : h.y);
  }
  return out;
}

Morphism interpret(const Theory& t, const PathExpr& p, const std::map<std::string, Morphism>& gens,
                   const std::map<std::string, Hole>& objs) {
  switch (p.kind) {
    case PathExpr::Kind::Gen: return gens.at(p.gen);
    case PathExpr::Kind::Id: return t.identity(interpret_obj(p.obj, objs));
    case PathExpr::Kind::Seq:
    case PathExpr::Kind::Par: {
      std::vector<Morphism> ms;
      for (const auto& part : p.parts) ms.push_back(interpret(t, part, gens, objs));
      return p.kind == PathExpr::Kind::Seq ? t.seq_all(ms) : t.par_all(ms);
    }
  }
  throw TypeError("unreachable");
}

}  // namespace

CounitReport check_counit(const Theory& t, const ConcreteSample& sample) {
  CategoryPresentation cp = monoidal_contour(sample.pres);
  std::map<std::string, Morphism> gens;
  for (const auto& g : cp.generators) {
    auto us = g.name.rfind('_');
    std::size_t i = std::stoul(g.name.substr(us + 1));
    const Morphism& m = sample.components.at(g.name.substr(0, us)).at(i);
    if (m.dom() != interpret_obj(g.dom, sample.objects) || m.cod() != interpret_obj(g.cod, sample.objects))
      throw TypeError("generator " + g.name + " is interpreted at the wrong type");
    gens.emplace(g.name, m);
  }
  CounitReport rep;
  for (const auto& r : cp.relations) {
    ++rep.relations_checked;
    Morphism lhs = interpret(t, r.lhs, gens, sample.objects);
    Morphism rhs = interpret(t, r.rhs, gens, sample.objects);
    if (!t.equal(lhs, rhs)) rep.violations.push_back(r.tag + ": " + r.lhs.str() + " = " + r.rhs.str());
  }
  return rep;
}

}  // namespace mctx
