#include "mctx/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mctx/context.hpp"
#include "mctx/contour.hpp"
#include "mctx/lens.hpp"

namespace mctx {

namespace {

constexpr std::size_t kMaxFailures = 5;

// Random instances over a small object pool.
struct Gen {
  const Theory& t;
  Rng rng;
  std::vector<ObjectList> pool;   // outer boundaries and residuals
  std::vector<ObjectList> small;  // hole boundaries
  bool uniform = false;           // every object is B (maximises type coincidences)

  Gen(const Theory& th, std::uint64_t seed) : t(th), rng(seed) {
    pool = {ObjectList{}, ObjectList{"B"}, ObjectList{"C"}};
    small = {ObjectList{}, ObjectList{"B"}};
  }

  ObjectList pick(const std::vector<ObjectList>& from) {
    if (uniform) return ObjectList{"B"};
    return from[uniform_index(rng, from.size())];
  }
  ObjectList obj() { return pick(pool); }
  ObjectList sobj() { return pick(small); }
  Hole outer() { return {obj(), obj()}; }
  Hole hole() { return {sobj(), sobj()}; }
  Morphism mor(const ObjectList& a, const ObjectList& b) { return t.random(rng, a, b); }
  bool coin() { return uniform_index(rng, 2) == 0; }

  NHoleSplice split(const Hole& out, const Hole& h0, const Hole& h1) {
    return NHoleSplice({mor(out.x, h0.x), mor(h0.y, h1.x), mor(h1.y, out.y)});
  }
  ParSplit par(const Hole& out, const Hole& l, const Hole& r) {
    return ParSplit::make(mor(out.x, tensor(l.x, r.x)), mor(tensor(l.y, r.y), out.y), l, r);
  }
  ParUnit punit(const Hole& out) { return ParUnit::make(mor(out.x, {}), mor({}, out.y)); }
  Morphism unit(const Hole& h) { return mor(h.x, h.y); }

  Context1 ctx(const Hole& out, const Hole& h) {
    ObjectList m = sobj(), n = sobj();
    return Context1::make(mor(out.x, tensor(m, h.x, n)), mor(tensor(m, h.y, n), out.y), m, n, h);
  }
  CtxSeqSplit cseq(const Hole& out, const Hole& h0, const Hole& h1) {
    ObjectList m = sobj(), n = sobj(), k = sobj(), l = sobj();
    return CtxSeqSplit::make(mor(out.x, tensor(m, h0.x, n)), mor(tensor(m, h0.y, n), tensor(k, h1.x, l)),
                             mor(tensor(k, h1.y, l), out.y), m, n, k, l, h0, h1);
  }
  CtxParSplit cpar(const Hole& out, const Hole& h0, const Hole& h1) {
    ObjectList m = sobj(), n = sobj(), o = sobj();
    return CtxParSplit::make(mor(out.x, tensor(m, h0.x, n, h1.x, o)), mor(tensor(m, h0.y, n, h1.y, o), out.y), m, n,
                             o, h0, h1);
  }
  Lens1 lens(const Hole& out, const Hole& h) {
    ObjectList m = sobj();
    return Lens1::make(mor(out.x, tensor(m, h.x)), mor(tensor(m, h.y), out.y), m, h);
  }
};

class FamilyRun {
 public:
  FamilyRun(std::string family) { res_.family = std::move(family); }

  // Runs one case of a named check; `body` returns false or throws on failure.
  void run(const std::string& check, std::size_t case_no, const std::function<bool(std::string&)>& body,
           std::size_t checks = 1) {
    LawCheck& c = entry(check);
    ++c.cases;
    c.checks += checks;
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++c.failed;
      if (res_.failures.size() < kMaxFailures)
        res_.failures.push_back(check + ", case " + std::to_string(case_no) + (why.empty() ? "" : ": " + why));
    }
  }

  LawCheck& entry(const std::string& check) {
    for (auto& c : res_.checks)
      if (c.name == check) return c;
    res_.checks.push_back({check});
    return res_.checks.back();
  }

  void note(std::string s) { res_.notes.push_back(std::move(s)); }
  LawFamilyResult result() && { return std::move(res_); }

 private:
  LawFamilyResult res_;
};

// Compares two evaluations under every filler assignment (or samples).
bool same_under_fillers(const Theory& t, const std::vector<Hole>& holes,
                        const std::function<Morphism(const std::vector<Morphism>&)>& lhs,
                        const std::function<Morphism(const std::vector<Morphism>&)>& rhs, std::string& why,
                        std::size_t budget = 4096, std::size_t samples = 16, std::uint64_t seed = 7) {
  for (const auto& fs : filler_assignments(t, holes, budget, samples, seed)) {
    if (!t.equal(lhs(fs), rhs(fs))) {
      why = "fillings differ";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- splice

LawFamilyResult splice_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("splice-coherence");
  Gen g(t, seed);
  auto open = [] { return SpliceChild{OpenSlot{}}; };
  for (std::size_t i = 0; i < opt.cases; ++i) {
    g.uniform = i % 4 == 3;
    // Pentagon on s1(□, s2(□, s3(□, □))).
    Hole a = g.outer(), h1 = g.hole(), h2 = g.hole(), h3 = g.hole(), h4 = g.hole(), p = g.outer(), r = g.outer();
    auto s3 = splice_node(g.split(r, h3, h4), {open(), open()});
    auto s2 = splice_node(g.split(p, h2, r), {open(), s3});
    auto root = splice_node(g.split(a, h1, p), {open(), s2});
    run.run("pentagon", i, [&](std::string& why) {
      auto via_root = rewrite_at(t, rewrite_at(t, root, {}, SpliceRewrite::AssocLeft), {}, SpliceRewrite::AssocLeft);
      auto via_inner = rewrite_at(t, root, {1}, SpliceRewrite::AssocLeft);
      via_inner = rewrite_at(t, via_inner, {}, SpliceRewrite::AssocLeft);
      via_inner = rewrite_at(t, via_inner, {0}, SpliceRewrite::AssocLeft);
      if (!splice_equal(t, flatten(t, via_root), flatten(t, via_inner))) {
        why = "the two bracketings disagree";
        return false;
      }
      return splice_equal(t, flatten(t, via_root), flatten(t, root));
    });
    run.run("associator-inverse", i, [&](std::string&) {
      auto there = rewrite_at(t, root, {}, SpliceRewrite::AssocLeft);
      auto back = rewrite_at(t, there, {}, SpliceRewrite::AssocRight);
      return splice_equal(t, flatten(t, back), flatten(t, root));
    });
    // Triangle on s1(□, s2(u, □)).
    Hole u = g.hole(), h5 = g.hole();
    auto inner = splice_node(g.split(p, u, h5), {g.unit(u), open()});
    auto troot = splice_node(g.split(a, h1, p), {open(), inner});
    run.run("triangle", i, [&](std::string&) {
      auto left = rewrite_at(t, rewrite_at(t, troot, {}, SpliceRewrite::AssocLeft), {0}, SpliceRewrite::Rho);
      auto right = rewrite_at(t, troot, {1}, SpliceRewrite::Lambda);
      return splice_equal(t, flatten(t, left), flatten(t, right));
    });
  }
  return std::move(run).result();
}

// ------------------------------------------------------------ produoidal

using Step = std::pair<TreePath, DuoRewrite>;

DuoPtr apply_steps(const Theory& t, DuoPtr n, const std::vector<Step>& steps, const DuoHooks& hooks) {
  for (const auto& [path, r] : steps) n = duo_rewrite(t, n, path, r, hooks);
  return n;
}

struct Diagram {
  std::string name;
  std::function<DuoPtr(Gen&)> start;
  std::vector<Step> left, right;
};

std::vector<Diagram> diagrams() {
  using R = DuoRewrite;
  auto open = [](Gen& g) { return duo_open(g.hole()); };
  auto seq = [](Gen& g, DuoPtr a, DuoPtr b) { return duo_seq(g.split(g.outer(), a->type, b->type), a, b); };
  auto par = [](Gen& g, DuoPtr a, DuoPtr b) { return duo_par(g.par(g.outer(), a->type, b->type), a, b); };
  auto sunit = [](Gen& g) { return duo_seq_unit(g.unit(g.hole())); };
  auto punit = [](Gen& g) {
    auto u = g.punit(g.outer());
    return duo_par_unit(u.f, u.g);
  };
  auto so = [=](Gen& g) { return seq(g, open(g), open(g)); };
  return {
      {"par-assoc/psi2", [=](Gen& g) { return par(g, par(g, so(g), so(g)), so(g)); },
       {{{0}, R::Psi2}, {{}, R::Psi2}, {{0}, R::ParAssocRight}, {{1}, R::ParAssocRight}},
       {{{}, R::ParAssocRight}, {{1}, R::Psi2}, {{}, R::Psi2}}},
      {"seq-assoc/psi2",
       [=](Gen& g) { return par(g, seq(g, so(g), open(g)), seq(g, so(g), open(g))); },
       {{{}, R::Psi2}, {{0}, R::Psi2}, {{}, R::SeqAssocRight}},
       {{{0}, R::SeqAssocRight}, {{1}, R::SeqAssocRight}, {{}, R::Psi2}, {{1}, R::Psi2}}},
      {"par-unit-left/psi0-psi2", [=](Gen& g) { return par(g, punit(g), so(g)); },
       {{{}, R::ParLambda}},
       {{{0}, R::Psi0}, {{}, R::Psi2}, {{0}, R::ParLambda}, {{1}, R::ParLambda}}},
      {"par-unit-right/psi0-psi2", [=](Gen& g) { return par(g, so(g), punit(g)); },
       {{{}, R::ParRho}},
       {{{1}, R::Psi0}, {{}, R::Psi2}, {{0}, R::ParRho}, {{1}, R::ParRho}}},
      {"seq-unit-left/psi2-phi2", [=](Gen& g) { return par(g, seq(g, sunit(g), open(g)), seq(g, sunit(g), open(g))); },
       {{{}, R::Psi2}, {{0}, R::Phi2}, {{}, R::SeqLambda}},
       {{{0}, R::SeqLambda}, {{1}, R::SeqLambda}}},
      {"seq-unit-right/psi2-phi2", [=](Gen& g) { return par(g, seq(g, open(g), sunit(g)), seq(g, open(g), sunit(g))); },
       {{{}, R::Psi2}, {{1}, R::Phi2}, {{}, R::SeqRho}},
       {{{0}, R::SeqRho}, {{1}, R::SeqRho}}},
      {"phi2-assoc", [=](Gen& g) { return par(g, par(g, sunit(g), sunit(g)), sunit(g)); },
       {{{0}, R::Phi2}, {{}, R::Phi2}},
       {{{}, R::ParAssocRight}, {{1}, R::Phi2}, {{}, R::Phi2}}},
      {"psi0-coassoc", [=](Gen& g) { return punit(g); },
       {{{}, R::Psi0}, {{0}, R::Psi0}, {{}, R::SeqAssocRight}},
       {{{}, R::Psi0}, {{1}, R::Psi0}}},
      {"unit-right/phi0-phi2", [=](Gen& g) { return par(g, sunit(g), punit(g)); },
       {{{1}, R::Phi0}, {{}, R::Phi2}},
       {{{}, R::ParRho}}},
      {"unit-left/phi0-phi2", [=](Gen& g) { return par(g, punit(g), sunit(g)); },
       {{{0}, R::Phi0}, {{}, R::Phi2}},
       {{{}, R::ParLambda}}},
      {"counit-right/psi0-phi0", [=](Gen& g) { return punit(g); },
       {{{}, R::Psi0}, {{1}, R::Phi0}, {{}, R::SeqRho}},
       {}},
      {"counit-left/psi0-phi0", [=](Gen& g) { return punit(g); },
       {{{}, R::Psi0}, {{0}, R::Phi0}, {{}, R::SeqLambda}},
       {}},
  };
}

LawFamilyResult produoidal_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("produoidal-coherence");
  Gen g(t, seed);
  for (const auto& d : diagrams()) {
    for (std::size_t i = 0; i < opt.cases; ++i) {
      g.uniform = i % 2 == 1;
      DuoPtr start = d.start(g);
      run.run(d.name, i, [&](std::string& why) {
        DuoPtr l = apply_steps(t, start, d.left, opt.hooks);
        DuoPtr r = apply_steps(t, start, d.right, opt.hooks);
        auto holes = duo_holes(l);
        if (holes != duo_holes(r)) {
          why = "paths end at different hole lists";
          return false;
        }
        return same_under_fillers(
            t, holes, [&](const auto& fs) { return duo_eval(t, l, fs); },
            [&](const auto& fs) { return duo_eval(t, r, fs); }, why, 64, 8, seed + i);
      });
    }
  }
  return std::move(run).result();
}

// ------------------------------------------------------ context operations

Morphism around(const Theory& t, const ObjectList& l, const Morphism& h, const ObjectList& r) {
  return t.par(t.identity(l), t.adopt(h), t.identity(r));
}
Morphism hand_fill(const Theory& t, const Context1& c, const Morphism& h) {
  return t.seq(c.f, around(t, c.m, h, c.n), c.g);
}
Morphism hand_fill(const Theory& t, const CtxSeqSplit& s, const Morphism& a, const Morphism& b) {
  return t.seq(s.f, around(t, s.m, a, s.n), s.g, around(t, s.k, b, s.l), s.h);
}
Morphism hand_fill(const Theory& t, const CtxParSplit& p, const Morphism& a, const Morphism& b) {
  return t.seq(p.f, t.par(t.identity(p.m), t.adopt(a), t.identity(p.n), t.adopt(b), t.identity(p.o)), p.g);
}

LawFamilyResult context_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("context-operations");
  Gen g(t, seed);
  using Fill = std::function<Morphism(const std::vector<Morphism>&)>;
  auto check = [&](const std::string& name, std::size_t i, const std::vector<Hole>& holes, Fill built, Fill oracle) {
    run.run(name, i, [&](std::string& why) { return same_under_fillers(t, holes, built, oracle, why); });
  };
  auto w = [&](const Word& word) { return [&t, word](const std::vector<Morphism>& fs) { return fill(t, word, fs); }; };
  const std::size_t kOps = 17;
  for (std::size_t i = 0; i < opt.cases * kOps; ++i) {
    std::size_t op = i % kOps, c = i / kOps;
    Hole o = g.outer(), h0 = g.hole(), h1 = g.hole(), h2 = g.hole();
    switch (op) {
      case 0: {
        Context1 x = g.ctx(o, h0);
        Morphism h = g.unit(h0);
        run.run("unit-action", c, [&](std::string&) { return t.equal(unit_action(t, x, h), hand_fill(t, x, h)); });
        break;
      }
      case 1: {
        Hole mid = g.hole();
        CtxSeqSplit s = g.cseq(o, mid, h1);
        Context1 x = g.ctx(mid, h0);
        CtxSeqSplit r = seq_action_1(t, s, x);
        check("seq-action-first", c, {h0, h1}, w(r.word()),
              [&](const auto& fs) { return hand_fill(t, s, hand_fill(t, x, fs[0]), fs[1]); });
        break;
      }
      case 2: {
        Hole mid = g.hole();
        CtxSeqSplit s = g.cseq(o, h0, mid);
        Context1 x = g.ctx(mid, h1);
        CtxSeqSplit r = seq_action_2(t, s, x);
        check("seq-action-second", c, {h0, h1}, w(r.word()),
              [&](const auto& fs) { return hand_fill(t, s, fs[0], hand_fill(t, x, fs[1])); });
        break;
      }
      case 3: {
        Hole mid = g.hole();
        Context1 x = g.ctx(o, mid);
        CtxSeqSplit s = g.cseq(mid, h0, h1);
        CtxSeqSplit r = seq_action_both(t, x, s);
        check("seq-action-outer", c, {h0, h1}, w(r.word()),
              [&](const auto& fs) { return hand_fill(t, x, hand_fill(t, s, fs[0], fs[1])); });
        break;
      }
      case 4: {
        Hole mid = g.hole();
        CtxSeqSplit s = g.cseq(o, mid, h2), in = g.cseq(mid, h0, h1);
        check("seq-assoc-left", c, {h0, h1, h2}, w(seq_assoc_left(t, s, in)),
              [&](const auto& fs) { return hand_fill(t, s, hand_fill(t, in, fs[0], fs[1]), fs[2]); });
        break;
      }
      case 5: {
        Hole mid = g.hole();
        CtxSeqSplit s = g.cseq(o, h0, mid), in = g.cseq(mid, h1, h2);
        check("seq-assoc-right", c, {h0, h1, h2}, w(seq_assoc_right(t, s, in)),
              [&](const auto& fs) { return hand_fill(t, s, fs[0], hand_fill(t, in, fs[1], fs[2])); });
        break;
      }
      case 6: {
        Hole uh = g.hole();
        CtxSeqSplit s = g.cseq(o, uh, h0);
        CtxUnit u{g.unit(uh)};
        check("seq-unitor-left", c, {h0}, w(seq_unitor_left(t, s, u).word()),
              [&](const auto& fs) { return hand_fill(t, s, u.f, fs[0]); });
        break;
      }
      case 7: {
        Hole uh = g.hole();
        CtxSeqSplit s = g.cseq(o, h0, uh);
        CtxUnit u{g.unit(uh)};
        check("seq-unitor-right", c, {h0}, w(seq_unitor_right(t, s, u).word()),
              [&](const auto& fs) { return hand_fill(t, s, fs[0], u.f); });
        break;
      }
      case 8: {
        Hole mid = g.hole();
        CtxParSplit p = g.cpar(o, mid, h1);
        Context1 x = g.ctx(mid, h0);
        check("par-action-first", c, {h0, h1}, w(par_action_1(t, p, x).word()),
              [&](const auto& fs) { return hand_fill(t, p, hand_fill(t, x, fs[0]), fs[1]); });
        break;
      }
      case 9: {
        Hole mid = g.hole();
        CtxParSplit p = g.cpar(o, h0, mid);
        Context1 x = g.ctx(mid, h1);
        check("par-action-second", c, {h0, h1}, w(par_action_2(t, p, x).word()),
              [&](const auto& fs) { return hand_fill(t, p, fs[0], hand_fill(t, x, fs[1])); });
        break;
      }
      case 10: {
        Hole mid = g.hole();
        Context1 x = g.ctx(o, mid);
        CtxParSplit p = g.cpar(mid, h0, h1);
        check("par-action-outer", c, {h0, h1}, w(par_action_both(t, x, p).word()),
              [&](const auto& fs) { return hand_fill(t, x, hand_fill(t, p, fs[0], fs[1])); });
        break;
      }
      case 11: {
        Hole mid = g.hole();
        CtxParSplit p = g.cpar(o, mid, h2), in = g.cpar(mid, h0, h1);
        check("par-assoc-left", c, {h0, h1, h2}, w(par_assoc_left(t, p, in)),
              [&](const auto& fs) { return hand_fill(t, p, hand_fill(t, in, fs[0], fs[1]), fs[2]); });
        break;
      }
      case 12: {
        Hole mid = g.hole();
        CtxParSplit p = g.cpar(o, h0, mid), in = g.cpar(mid, h1, h2);
        check("par-assoc-right", c, {h0, h1, h2}, w(par_assoc_right(t, p, in)),
              [&](const auto& fs) { return hand_fill(t, p, fs[0], hand_fill(t, in, fs[1], fs[2])); });
        break;
      }
      case 13:
      case 14: {
        bool left = op == 13;
        Hole uh = g.hole();
        CtxParSplit p = left ? g.cpar(o, uh, h0) : g.cpar(o, h0, uh);
        CtxUnit u{g.unit(uh)};
        for (int form = 0; form < 2; ++form) {
          Context1 r = left ? par_unitor_left(t, p, u, form) : par_unitor_right(t, p, u, form);
          check(std::string(left ? "par-unitor-left" : "par-unitor-right") + (form ? "/after" : "/before"), c, {h0},
                w(r.word()), [&](const auto& fs) {
                  return left ? hand_fill(t, p, u.f, fs[0]) : hand_fill(t, p, fs[0], u.f);
                });
        }
        break;
      }
      case 15: {
        Hole l = g.hole(), r = g.hole(), k0 = g.hole(), k1 = g.hole();
        CtxParSplit p = g.cpar(o, l, r);
        CtxSeqSplit a = g.cseq(l, h0, h1), b = g.cseq(r, k0, k1);
        check("laxator-par-of-seq", c, {h0, k0, h1, k1}, w(laxator_left(t, p, a, b)), [&](const auto& fs) {
          return hand_fill(t, p, hand_fill(t, a, fs[0], fs[2]), hand_fill(t, b, fs[1], fs[3]));
        });
        break;
      }
      case 16: {
        Hole l = g.hole(), r = g.hole(), k0 = g.hole(), k1 = g.hole();
        CtxSeqSplit s = g.cseq(o, l, r);
        CtxParSplit a = g.cpar(l, h0, h1), b = g.cpar(r, k0, k1);
        check("laxator-seq-of-par", c, {h0, h1, k0, k1}, w(laxator_right(t, s, a, b)), [&](const auto& fs) {
          return hand_fill(t, s, hand_fill(t, a, fs[0], fs[1]), hand_fill(t, b, fs[2], fs[3]));
        });
        break;
      }
    }
  }
  return std::move(run).result();
}

// ---------------------------------------------------------- normalization

LawFamilyResult normalization_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("normalization");
  Gen g(t, seed);
  auto word_of = [](const CtxElement& e) -> std::optional<Word> {
    if (auto* c = std::get_if<Context1>(&e)) return c->word();
    if (auto* s = std::get_if<CtxSeqSplit>(&e)) return s->word();
    if (auto* p = std::get_if<CtxParSplit>(&e)) return p->word();
    return std::nullopt;
  };
  for (std::size_t i = 0; i < opt.cases; ++i) {
    Hole o = g.outer(), h0 = g.hole(), h1 = g.hole();
    std::size_t variant = i % 5;
    DuoElement e = NHoleSplice({g.unit(o)});
    std::vector<Hole> holes;
    std::function<Morphism(const std::vector<Morphism>&)> direct;
    switch (variant) {
      case 0: {
        NHoleSplice s({g.unit(o)});
        e = s;
        direct = [&t, s](const auto& fs) { return splice_fill_all(t, s, fs); };
        break;
      }
      case 1: {
        NHoleSplice s({g.mor(o.x, h0.x), g.mor(h0.y, o.y)});
        e = s;
        holes = {h0};
        direct = [&t, s](const auto& fs) { return splice_fill_all(t, s, fs); };
        break;
      }
      case 2: {
        NHoleSplice s = g.split(o, h0, h1);
        e = s;
        holes = {h0, h1};
        direct = [&t, s](const auto& fs) { return splice_fill_all(t, s, fs); };
        break;
      }
      case 3: {
        if (g.coin()) {
          ParSplit p = g.par(o, h0, h1);
          e = p;
          holes = {h0, h1};
          direct = [&t, p](const auto& fs) { return phi2(t, p, fs[0], fs[1]); };
        } else {
          ParUnit u = g.punit(o);
          e = u;
          direct = [&t, u](const auto&) { return phi0(t, u); };
        }
        break;
      }
      default: {
        ObjectList u1 = g.sobj(), u2 = g.sobj(), v1 = g.sobj(), v2 = g.sobj();
        NormalElement ne{g.mor(o.x, tensor(u1, h0.x, u2)), g.mor(tensor(v1, h0.y, v2), o.y), h0, g.mor(u1, v1),
                         g.mor(u2, v2)};
        e = ne;
        holes = {h0};
        direct = [&t, ne](const auto& fs) { return ne.fill(t, fs[0]); };
        break;
      }
    }
    run.run("preserves-fills", i, [&](std::string& why) {
      CtxElement n = normalize_from_duosplice(t, e);
      auto word = word_of(n);
      if (!word) return t.equal(std::get<CtxUnit>(n).f, direct({}));
      return same_under_fillers(
          t, holes, [&](const auto& fs) { return fill(t, *word, fs); }, direct, why);
    });
    if (auto* ne = std::get_if<NormalElement>(&e)) {
      run.run("idempotent", i, [&](std::string&) {
        Context1 once = normalize(t, *ne);
        Context1 twice = normalize(t, as_normal_element(t, once));
        return ctx_same(t, once, twice);
      });
      // Symmetric variant: merge both residual sides into one on the left.
      ObjectList u = tensor(ne->n1.dom(), ne->n2.dom()), v = tensor(ne->n1.cod(), ne->n2.cod());
      Morphism f = t.compose(ne->f, t.permute({ne->n1.dom(), h0.x, ne->n2.dom()}, {0, 2, 1}));
      Morphism gg = t.compose(t.permute({ne->n1.cod(), ne->n2.cod(), h0.y}, {0, 2, 1}), ne->g);
      SymNormalElement se{f, gg, h0, t.tensor(ne->n1, ne->n2)};
      run.run("sym-preserves-fills", i, [&](std::string& why) {
        Lens1 l = std::get<Lens1>(sym_normalize(t, se));
        if (l.m != u) return false;
        (void)v;
        return same_under_fillers(
            t, {h0}, [&](const auto& fs) { return fill(t, l, fs[0]); },
            [&](const auto& fs) { return se.fill(t, fs[0]); }, why);
      });
      run.run("sym-idempotent", i, [&](std::string&) {
        Lens1 once = std::get<Lens1>(sym_normalize(t, se));
        Lens1 twice = std::get<Lens1>(sym_normalize(t, as_sym_normal_element(t, once)));
        return once.m == twice.m && t.equal(once.f, twice.f) && t.equal(once.g, twice.g);
      });
    }
  }
  return std::move(run).result();
}

// ----------------------------------------------------------- dinaturality

LawFamilyResult dinaturality_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("dinaturality");
  Gen g(t, seed);
  for (std::size_t i = 0; i < opt.cases; ++i) {
    Hole o = g.outer(), h = g.hole();
    ObjectList m0 = g.sobj(), n0 = g.sobj(), m1 = g.sobj(), n1 = g.sobj();
    bool into_g = i % 2 == 0;
    Morphism mm = g.mor(m0, m1), nn = g.mor(n0, n1);
    Context1 c = Context1::make(g.mor(o.x, tensor(m1, h.x, n1)), g.mor(tensor(m1, h.y, n1), o.y), m1, n1, h);
    Factorization fac{g.mor(o.x, tensor(m0, h.x, n0)), mm, nn};
    if (into_g) {
      c.f = t.compose(fac.core, t.par(mm, t.identity(h.x), nn));
    } else {
      c = Context1::make(g.mor(o.x, tensor(m0, h.x, n0)), g.mor(tensor(m0, h.y, n0), o.y), m0, n0, h);
      fac.core = g.mor(tensor(m1, h.y, n1), o.y);
      c.g = t.compose(t.par(mm, t.identity(h.y), nn), fac.core);
    }
    run.run(into_g ? "slide-into-g" : "slide-into-f", i, [&](std::string& why) {
      Context1 s = dinat_slide(t, c, fac, into_g ? SlideDirection::IntoG : SlideDirection::IntoF);
      FillVerdict v = fill_equal(t, c, s);
      why = v.witness;
      return v.equal;
    });
    // A perturbed piece must be told apart whenever its fills change.
    run.run("separates-perturbations", i, [&](std::string& why) {
      Context1 d = c;
      d.g = g.mor(d.g.dom(), d.g.cod());
      bool fills_differ = !same_under_fillers(
          t, {h}, [&](const auto& fs) { return fill(t, c, fs[0]); }, [&](const auto& fs) { return fill(t, d, fs[0]); },
          why);
      why.clear();
      return !fills_differ || !fill_equal(t, c, d).equal;
    });
  }
  return std::move(run).result();
}

// --------------------------------------------------------- cartesian lens

LawFamilyResult cartesian_family(const Theory& t, const LawOptions&) {
  FamilyRun run("cartesian-lens");
  if (!t.cartesian()) {
    run.note("skipped: needs a cartesian theory");
    return std::move(run).result();
  }
  ObjectList b{"B"};
  Hole outer{b, b}, hole{b, b};
  std::vector<Lens1> reps;
  for (const auto& f : t.enumerate_hom(b, tensor(b, b)))
    for (const auto& g : t.enumerate_hom(tensor(b, b), b)) reps.push_back(Lens1::make(f, g, b, hole));
  for (const auto& f : t.enumerate_hom(b, b))
    for (const auto& g : t.enumerate_hom(b, b)) reps.push_back(Lens1::make(f, g, {}, hole));
  std::vector<std::size_t> leaders;
  std::vector<std::size_t> cls(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::size_t k = 0;
    while (k < leaders.size() && !fill_equal(t, reps[leaders[k]], reps[i]).equal) ++k;
    if (k == leaders.size()) leaders.push_back(i);
    cls[i] = k;
  }
  std::size_t expected = t.hom_size(outer.x, hole.x) * t.hom_size(tensor(outer.x, hole.y), outer.y);
  run.run("class-count", 0, [&](std::string& why) {
    why = std::to_string(leaders.size()) + " classes, expected " + std::to_string(expected);
    return leaders.size() == expected;
  });
  run.note("fill-equivalence classes: " + std::to_string(leaders.size()) + " (expected " + std::to_string(expected) +
           ")");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    run.run("getput-roundtrip", i, [&](std::string&) {
      Lens1 back = from_getput(t, to_getput(t, reps[i]));
      return fill_equal(t, back, reps[leaders[cls[i]]]).equal;
    });
    run.run("getput-agrees", i, [&](std::string&) {
      std::size_t j = (i * 37 + 11) % reps.size();
      return (cls[i] == cls[j]) == getput_equal(t, to_getput(t, reps[i]), to_getput(t, reps[j]));
    });
  }
  return std::move(run).result();
}

// ---------------------------------------------------------- lens functors

LawFamilyResult functor_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("lens-functors");
  Gen g(t, seed);
  for (std::size_t i = 0; i < opt.cases; ++i) {
    ObjectList a = g.obj(), b = g.obj(), c = g.obj(), a2 = g.obj(), b2 = g.obj();
    Morphism f = g.mor(a, b), h = g.mor(b, c), f2 = g.mor(a2, b2);
    run.run("send-compose", i, [&](std::string&) {
      return lens_equal(t, send(t, t.compose(f, h)), lens_compose(t, send(t, f), send(t, h)));
    });
    run.run("send-tensor", i, [&](std::string&) {
      return lens_equal(t, send(t, t.tensor(f, f2)), lens_tensor(t, send(t, f), send(t, f2)));
    });
    run.run("send-identity", i, [&](std::string&) {
      return lens_equal(t, send(t, t.identity(a)), lens_identity(t, a, {}));
    });
    // get is contravariant: get(h) then get(f) fits get(f ; h).
    run.run("get-compose", i, [&](std::string&) {
      return lens_equal(t, get(t, t.compose(f, h)), lens_compose(t, get(t, h), get(t, f)));
    });
    run.run("get-tensor", i, [&](std::string&) {
      return lens_equal(t, get(t, t.tensor(f, f2)), lens_tensor(t, get(t, f), get(t, f2)));
    });
    run.run("get-identity", i, [&](std::string&) {
      return lens_equal(t, get(t, t.identity(a)), lens_identity(t, {}, a));
    });
  }
  return std::move(run).result();
}

// ------------------------------------------------------------------ counit

LawFamilyResult counit_family(const Theory& t, const LawOptions& opt, std::uint64_t seed) {
  FamilyRun run("counit");
  Gen g(t, seed);
  for (std::size_t i = 0; i < opt.cases; ++i) {
    g.uniform = i % 3 == 2;
    SampleBuilder sb(t);
    Hole o = g.outer(), h0 = g.hole(), h1 = g.hole(), h2 = g.hole(), mid = g.hole();
    sb.add_alpha({g.split(o, h0, mid), g.split(mid, h1, h2), 1});
    sb.add_lambda(g.split(o, h0, h1), g.unit(h0));
    sb.add_rho(g.split(o, h0, h1), g.unit(h1));
    sb.add_par_alpha(g.par(o, mid, h2), g.par(mid, h0, h1));
    sb.add_par_lambda(g.par(o, h0, h1), g.punit(h0));
    sb.add_par_rho(g.par(o, h0, h1), g.punit(h1));
    Hole l = g.hole(), r = g.hole(), k0 = g.hole(), k1 = g.hole();
    sb.add_psi2(g.par(o, l, r), g.split(l, h0, h1), g.split(r, k0, k1), opt.hooks.psi2);
    sb.add_psi0(g.punit(o));
    sb.add_phi2(g.par(o, h0, h1), g.unit(h0), g.unit(h1));
    sb.add_phi0(g.punit(o));
    CounitReport rep;
    run.run("contour-relations", i, [&](std::string& why) {
      rep = check_counit(t, sb.sample());
      if (!rep.ok()) why = rep.violations.front();
      return rep.ok();
    });
    run.entry("contour-relations").checks += rep.relations_checked ? rep.relations_checked - 1 : 0;
  }
  return std::move(run).result();
}

Theory make_theory(const LawOptions& opt) {
  Signature sig;
  std::size_t c = std::max<std::size_t>(1, opt.max_carrier);
  sig.declare("B", std::min<std::size_t>(2, c));
  sig.declare("C", c);
  switch (opt.theory) {
    case TheoryKind::FinFn: return Theory::fin_fn(sig);
    case TheoryKind::FinStoch: return Theory::fin_stoch(sig);
    case TheoryKind::Free: break;
  }
  throw TheoryError("law suites need a finite theory");
}

}  // namespace

bool LawFamilyResult::ok() const {
  for (const auto& c : checks)
    if (c.failed) return false;
  return true;
}

bool LawReport::ok() const {
  for (const auto& f : families)
    if (!f.ok()) return false;
  return true;
}

const std::vector<std::string>& law_families() {
  static const std::vector<std::string> names = {"splice-coherence", "produoidal-coherence", "context-operations",
                                                 "normalization",    "dinaturality",         "cartesian-lens",
                                                 "lens-functors",    "counit"};
  return names;
}

LawReport run_laws(const LawOptions& opt) {
  Theory t = make_theory(opt);
  LawReport rep;
  if (opt.cases == 0) rep.warnings.push_back("--cases 0: sampled families are vacuous");
  std::vector<std::string> wanted = opt.families.empty() ? law_families() : opt.families;
  for (const auto& name : wanted) {
    auto it = std::find(law_families().begin(), law_families().end(), name);
    if (it == law_families().end()) throw ParseError("unknown law family '" + name + "'");
    std::uint64_t seed = opt.seed * 1000003u + static_cast<std::uint64_t>(it - law_families().begin());
    if (name == "splice-coherence") rep.families.push_back(splice_family(t, opt, seed));
    if (name == "produoidal-coherence") rep.families.push_back(produoidal_family(t, opt, seed));
    if (name == "context-operations") rep.families.push_back(context_family(t, opt, seed));
    if (name == "normalization") rep.families.push_back(normalization_family(t, opt, seed));
    if (name == "dinaturality") rep.families.push_back(dinaturality_family(t, opt, seed));
    if (name == "cartesian-lens") rep.families.push_back(cartesian_family(t, opt));
    if (name == "lens-functors") rep.families.push_back(functor_family(t, opt, seed));
    if (name == "counit") rep.families.push_back(counit_family(t, opt, seed));
  }
  return rep;
}

std::string LawReport::text() const {
  std::ostringstream out;
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  std::size_t passed = 0;
  for (const auto& f : families) {
    if (f.ok()) ++passed;
    out << (f.ok() ? "PASS " : "FAIL ") << f.family << "\n";
    for (const auto& c : f.checks)
      out << "  " << c.name << ": " << (c.cases - c.failed) << "/" << c.cases << " cases, " << c.checks
          << " checks\n";
    for (const auto& n : f.notes) out << "  note: " << n << "\n";
    for (const auto& e : f.failures) out << "  failure: " << e << "\n";
  }
  out << passed << "/" << families.size() << " families pass\n";
  return out.str();
}

std::string LawReport::json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["warnings"] = warnings;
  j["families"] = nlohmann::ordered_json::array();
  for (const auto& f : families) {
    nlohmann::ordered_json fj;
    fj["family"] = f.family;
    fj["ok"] = f.ok();
    fj["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : f.checks)
      fj["checks"].push_back({{"name", c.name}, {"cases", c.cases}, {"checks", c.checks}, {"failed", c.failed}});
    fj["notes"] = f.notes;
    fj["failures"] = f.failures;
    j["families"].push_back(fj);
  }
  return j.dump(2) + "\n";
}

}  // namespace mctx
