#pragma once

#include <variant>

#include "mctx/duosplice.hpp"

namespace mctx {

// f ⨾ (id_M ⊗ ■ ⊗ id_N) ⨾ g, a representative of a monoidal context.
struct Context1 {
  Morphism f;  // A → M⊗X⊗N
  Morphism g;  // M⊗Y⊗N → B
  ObjectList m, n;
  Hole hole;

  static Context1 make(Morphism f, Morphism g, ObjectList m, ObjectList n, Hole hole);
  Hole outer() const { return {f.dom(), g.cod()}; }
  Word word() const;
};

struct CtxSeqSplit {
  Morphism f;  // A → M⊗X⊗N
  Morphism g;  // M⊗Y⊗N → K⊗X′⊗L
  Morphism h;  // K⊗Y′⊗L → B
  ObjectList m, n, k, l;
  Hole first, second;

  static CtxSeqSplit make(Morphism f, Morphism g, Morphism h, ObjectList m, ObjectList n, ObjectList k,
                          ObjectList l, Hole first, Hole second);
  Hole outer() const { return {f.dom(), h.cod()}; }
  Word word() const;
};

struct CtxParSplit {
  Morphism f;  // A → M⊗X⊗N⊗X′⊗O
  Morphism g;  // M⊗Y⊗N⊗Y′⊗O → B
  ObjectList m, n, o;
  Hole first, second;

  static CtxParSplit make(Morphism f, Morphism g, ObjectList m, ObjectList n, ObjectList o, Hole first,
                          Hole second);
  Hole outer() const { return {f.dom(), g.cod()}; }
  Word word() const;
};

// Both units are plain arrows A → B.
struct CtxUnit {
  Morphism f;
  Hole outer() const { return f.type(); }
};

Context1 ctx_identity(const Theory& t, const ObjectList& a, const ObjectList& b);
Context1 ctx_compose(const Theory& t, const Context1& outer, const Context1& inner);
Morphism fill(const Theory& t, const Context1& c, const Morphism& h);
FillVerdict fill_equal(const Theory& t, const Context1& a, const Context1& b, const FillOptions& opt = {});
bool ctx_same(const Theory& t, const Context1& a, const Context1& b);  // componentwise

// The full operation set on representatives.
Morphism unit_action(const Theory& t, const Context1& c, const Morphism& h);
CtxSeqSplit seq_action_1(const Theory& t, const CtxSeqSplit& s, const Context1& c);
CtxSeqSplit seq_action_2(const Theory& t, const CtxSeqSplit& s, const Context1& c);
CtxSeqSplit seq_action_both(const Theory& t, const Context1& c, const CtxSeqSplit& s);
Word seq_assoc_left(const Theory& t, const CtxSeqSplit& s, const CtxSeqSplit& in_first);
Word seq_assoc_right(const Theory& t, const CtxSeqSplit& s, const CtxSeqSplit& in_second);
Context1 seq_unitor_left(const Theory& t, const CtxSeqSplit& s, const CtxUnit& u);
Context1 seq_unitor_right(const Theory& t, const CtxSeqSplit& s, const CtxUnit& u);
CtxParSplit par_action_1(const Theory& t, const CtxParSplit& p, const Context1& c);
CtxParSplit par_action_2(const Theory& t, const CtxParSplit& p, const Context1& c);
CtxParSplit par_action_both(const Theory& t, const Context1& c, const CtxParSplit& p);
Word par_assoc_left(const Theory& t, const CtxParSplit& p, const CtxParSplit& in_first);
Word par_assoc_right(const Theory& t, const CtxParSplit& p, const CtxParSplit& in_second);
// Two equal readings: the unit absorbed before the hole (form 0) or after it (form 1).
Context1 par_unitor_left(const Theory& t, const CtxParSplit& p, const CtxUnit& u, int form = 0);
Context1 par_unitor_right(const Theory& t, const CtxParSplit& p, const CtxUnit& u, int form = 0);
Word laxator_left(const Theory& t, const CtxParSplit& p, const CtxSeqSplit& first, const CtxSeqSplit& second);
Word laxator_right(const Theory& t, const CtxSeqSplit& s, const CtxParSplit& first, const CtxParSplit& second);

// f = core ⨾ (m ⊗ id_X ⊗ n) (sliding into g), or g = (m ⊗ id_Y ⊗ n) ⨾ core (sliding into f).
struct Factorization {
  Morphism core;
  Morphism m;
  Morphism n;
};
enum class SlideDirection { IntoG, IntoF };
Context1 dinat_slide(const Theory& t, const Context1& c, const Factorization& fac, SlideDirection dir);

// Elements of the normalization: a parallel three-hole split whose outer
// holes are closed by sequential units.
struct NormalElement {
  Morphism f;   // A → U₁⊗X⊗U₂
  Morphism g;   // V₁⊗Y⊗V₂ → B
  Hole hole;
  Morphism n1;  // U₁ → V₁
  Morphism n2;  // U₂ → V₂

  Morphism fill(const Theory& t, const Morphism& h) const;
};

using DuoElement = std::variant<NHoleSplice, ParSplit, ParUnit, NormalElement>;
using CtxElement = std::variant<CtxUnit, Context1, CtxSeqSplit, CtxParSplit>;

CtxElement normalize_from_duosplice(const Theory& t, const DuoElement& e);
Context1 normalize(const Theory& t, const NormalElement& e);
NormalElement as_normal_element(const Theory& t, const Context1& c);

}  // namespace mctx
