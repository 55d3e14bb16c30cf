#pragma once

#include <variant>

#include "mctx/context.hpp"

namespace mctx {

// f ⨾ (id_M ⊗ ■) ⨾ g with the residual on the left.
struct Lens1 {
  Morphism f;  // A → M⊗X
  Morphism g;  // M⊗Y → B
  ObjectList m;
  Hole hole;

  static Lens1 make(Morphism f, Morphism g, ObjectList m, Hole hole);
  Hole outer() const { return {f.dom(), g.cod()}; }
  Word word() const;
};

// n-stage sequential split: steps[0]: A → R₁⊗X₁, steps[k]: Rₖ⊗Yₖ → Rₖ₊₁⊗Xₖ₊₁,
// steps[n]: Rₙ⊗Yₙ → B. residuals[k] is the wire beside hole k.
struct LensSplit {
  std::vector<Morphism> steps;
  std::vector<ObjectList> residuals;
  std::vector<Hole> holes;

  static LensSplit make(std::vector<Morphism> steps, std::vector<ObjectList> residuals, std::vector<Hole> holes);
  std::size_t arity() const { return holes.size(); }
  Hole outer() const { return {steps.front().dom(), steps.back().cod()}; }
  Word word() const;
};
using LensSeqSplit = LensSplit;

// A parallel split of lenses is a lens on the fused hole; the two component
// holes are remembered alongside the very same data.
struct LensParSplit {
  Lens1 lens;
  Hole left, right;

  static LensParSplit make(Lens1 lens, Hole left, Hole right);
  const Lens1& as_lens() const { return lens; }
};

struct Polarized {
  enum class Pol { Send, Get };
  Pol pol;
  ObjectList obj;
  std::string label;  // display name, e.g. an alias
  Hole denote() const { return pol == Pol::Send ? Hole{obj, {}} : Hole{{}, obj}; }
};

struct CartesianLens {
  Morphism get;  // A → X
  Morphism put;  // A⊗Y → B
};

Lens1 lens_identity(const Theory& t, const ObjectList& a, const ObjectList& b);
Lens1 lens_from_context(const Theory& t, const Context1& c);  // symmetric theories
Lens1 lens_compose(const Theory& t, const Lens1& outer, const Lens1& inner);
Lens1 lens_tensor(const Theory& t, const Lens1& l1, const Lens1& l2);
LensParSplit lens_tensor_split(const Theory& t, const Lens1& l1, const Lens1& l2);
Morphism fill(const Theory& t, const Lens1& l, const Morphism& h);

// Sequential structure (hole indices zero-based).
LensSplit lens_split_action(const Theory& t, const LensSplit& s, std::size_t i, const Lens1& c);
LensSplit lens_split_fill(const Theory& t, const LensSplit& s, std::size_t i, const LensSplit& d);
LensSplit lens_split_close(const Theory& t, const LensSplit& s, std::size_t i, const Morphism& u);
Lens1 lens_of_split(const LensSplit& s);  // one-hole split as a lens
LensSplit split_of_lens(const Lens1& l);
LensSplit lens_seq_assoc_left(const Theory& t, const LensSplit& s, const LensSplit& in_first);
LensSplit lens_seq_assoc_right(const Theory& t, const LensSplit& s, const LensSplit& in_second);
Lens1 lens_seq_unitor_left(const Theory& t, const LensSplit& s, const Morphism& u);
Lens1 lens_seq_unitor_right(const Theory& t, const LensSplit& s, const Morphism& u);

// Parallel structure.
Lens1 lens_par_unitor_left(const Theory& t, const LensParSplit& p, const Morphism& u);
Lens1 lens_par_unitor_right(const Theory& t, const LensParSplit& p, const Morphism& v);
LensParSplit lens_symmetry(const Theory& t, const LensParSplit& p);
// Laxator: a parallel split with n-stage splits in both holes becomes an
// n-stage split whose k-th hole fuses the two k-th holes.
LensSplit lens_laxator(const Theory& t, const LensParSplit& p, const LensSplit& a, const LensSplit& b);

Lens1 send(const Theory& t, const Morphism& f);  // f: A → B, on (A, I) with hole (B, I)
Lens1 get(const Theory& t, const Morphism& f);   // f: B → A, on (I, A) with hole (I, B)

// Elements of the symmetric normalization: a split A → U⊗X, V⊗Y → B with
// the sequential unit n: U → V closing the extra hole.
struct SymNormalElement {
  Morphism f;
  Morphism g;
  Hole hole;
  Morphism n;
  Morphism fill(const Theory& t, const Morphism& h) const;
};

using SymDuoElement = std::variant<NHoleSplice, ParSplit, ParUnit, SymNormalElement>;
using LensElement = std::variant<Morphism, Lens1, LensSplit, LensParSplit>;
LensElement sym_normalize(const Theory& t, const SymDuoElement& e);
SymNormalElement as_sym_normal_element(const Theory& t, const Lens1& l);

CartesianLens to_getput(const Theory& t, const Lens1& l);
Lens1 from_getput(const Theory& t, const CartesianLens& c);
bool getput_equal(const Theory& t, const CartesianLens& a, const CartesianLens& b);
FillVerdict fill_equal(const Theory& t, const Lens1& a, const Lens1& b, const FillOptions& opt = {});
bool lens_equal(const Theory& t, const Lens1& a, const Lens1& b);

}  // namespace mctx
