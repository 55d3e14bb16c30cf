#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mctx/splice.hpp"

namespace mctx {

// f ⨾ (□ ⊗ □) ⨾ g with f: A→X⊗X′ and g: Y⊗Y′→B.
struct ParSplit {
  Morphism f;
  Morphism g;
  Hole left;
  Hole right;

  static ParSplit make(Morphism f, Morphism g, Hole left, Hole right);
  static ParSplit identity(const Theory& t, const Hole& left, const Hole& right);
  Hole outer() const { return {f.dom(), g.cod()}; }
  Word word() const;
};

// ⟨f ∥ g⟩ with f: A→I and g: I→B.
struct ParUnit {
  Morphism f;
  Morphism g;

  static ParUnit make(Morphism f, Morphism g);
  Hole outer() const { return {f.dom(), g.cod()}; }
};

struct Psi2Result {
  NHoleSplice seq;  // ⟨f₀⨾(h₀⊗k₀) | h₁⊗k₁ | (h₂⊗k₂)⨾f₁⟩
  ParSplit first;   // pure (□⊗□) on the first holes
  ParSplit second;
};

struct Psi0Result {
  NHoleSplice seq;  // ⟨a₀ | id_I | a₁⟩
  ParUnit first;
  ParUnit second;
};

Psi2Result psi2(const Theory& t, const ParSplit& outer, const NHoleSplice& left, const NHoleSplice& right);
Psi0Result psi0(const Theory& t, const ParUnit& u);
Morphism phi2(const Theory& t, const ParSplit& outer, const Morphism& h0, const Morphism& h1);
Morphism phi0(const Theory& t, const ParUnit& u);

// Parallel splits are exactly one-hole spliced arrows on the fused hole.
NHoleSplice par_representable(const ParSplit& p);
ParSplit par_from_representable(const NHoleSplice& s, const Hole& left, const Hole& right);
NHoleSplice unit_representable(const ParUnit& u);
ParUnit unit_from_representable(const NHoleSplice& s);

// Trees of 𝓣ℂ pieces for the produoidal coherence checks.
struct DuoNode;
using DuoPtr = std::shared_ptr<const DuoNode>;

struct DuoNode {
  enum class Kind { Open, SeqUnit, ParUnit, Seq, Par, Act };
  Kind kind;
  Hole type;                    // outer boundary
  std::vector<Morphism> ms;     // SeqUnit {f}; ParUnit {a0,a1}; Seq {f0,f1,f2}; Par {f0,f1}; Act {f,g}
  std::vector<DuoPtr> kids;     // Seq/Par: 2; Act: 1
};

DuoPtr duo_open(Hole h);
DuoPtr duo_seq_unit(Morphism f);
DuoPtr duo_par_unit(Morphism a0, Morphism a1);
DuoPtr duo_seq(const NHoleSplice& s, DuoPtr first, DuoPtr second);
DuoPtr duo_par(const ParSplit& p, DuoPtr first, DuoPtr second);
DuoPtr duo_act(Morphism f, Morphism g, DuoPtr kid);

std::vector<Hole> duo_holes(const DuoPtr& n);
Morphism duo_eval(const Theory& t, const DuoPtr& n, const std::vector<Morphism>& fillers);

enum class DuoRewrite {
  ParAssocRight,  // (a⊗b)⊗c → a⊗(b⊗c)
  ParAssocLeft,
  SeqAssocRight,  // (a◁b)◁c → a◁(b◁c)
  SeqAssocLeft,
  ParLambda,      // I⊗a → a
  ParRho,         // a⊗I → a
  SeqLambda,      // N◁a → a
  SeqRho,         // a◁N → a
  Psi2,
  Psi0,
  Phi2,
  Phi0,
};

using Psi2Fn = std::function<Psi2Result(const Theory&, const ParSplit&, const NHoleSplice&, const NHoleSplice&)>;

struct DuoHooks {
  Psi2Fn psi2 = mctx::psi2;
};

DuoPtr duo_rewrite(const Theory& t, const DuoPtr& root, const TreePath& path, DuoRewrite r,
                   const DuoHooks& hooks = {});

}  // namespace mctx
