#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mctx/duosplice.hpp"

namespace mctx {

enum class ElementKind { SeqUnit, Morph, SeqSplit, ParSplit, ParUnit };

struct PresElement {
  std::string name;
  ElementKind kind;
  std::string outer;                // source object name
  std::vector<std::string> holes;   // 0 (units), 1 (morphisms) or 2 (splits)
};

// Positional element lists per tag:
//   Alpha    a b c d   α(a|b) = (c|d), b in a's second hole, d in c's first
//   Lambda   d e c     λ(d|e) = c, unit e in d's first hole
//   Rho      a b c     ρ(a|b) = c, unit b in a's second hole
//   ParAlpha a b c d   b in a's first parallel hole, d in c's second
//   ParLambda a b c / ParRho a b c   parallel unit b beside the remaining hole
//   Psi2     a b c d e f   ψ₂(a|b|c) = (d|e|f)
//   Psi0     a b c d       ψ₀(a) = (b|c|d)
//   Phi2     a b c d       φ₂(a|b|c) = d
//   Phi0     a b           φ₀(a) = b
enum class EqTag { Alpha, Lambda, Rho, ParAlpha, ParLambda, ParRho, Psi2, Psi0, Phi2, Phi0 };
std::string tag_name(EqTag t);

struct EquationInstance {
  EqTag tag;
  std::vector<std::string> elements;
};

struct PromonoidalPresentation {
  std::vector<std::string> objects;
  std::vector<PresElement> elements;
  std::vector<EquationInstance> equations;
};

// Morphism expressions over the generators of a presentation. Objects are
// lists of boundary atoms "X^L" / "X^R".
struct PathExpr {
  enum class Kind { Gen, Id, Seq, Par };
  Kind kind;
  std::string gen;
  ObjectList obj;
  std::vector<PathExpr> parts;

  static PathExpr generator(std::string name) { return {Kind::Gen, std::move(name), {}, {}}; }
  static PathExpr identity(ObjectList o) { return {Kind::Id, {}, std::move(o), {}}; }
  static PathExpr seq(std::vector<PathExpr> ps) { return {Kind::Seq, {}, {}, std::move(ps)}; }
  static PathExpr par(std::vector<PathExpr> ps) { return {Kind::Par, {}, {}, std::move(ps)}; }
  std::string str() const;
};

struct CatGenerator {
  std::string name;
  ObjectList dom, cod;
};

struct Relation {
  std::string tag;
  PathExpr lhs, rhs;
};

struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<CatGenerator> generators;
  std::vector<Relation> relations;
  bool monoidal = false;
  std::string str() const;
};

CategoryPresentation contour(const PromonoidalPresentation& p);
CategoryPresentation monoidal_contour(const PromonoidalPresentation& p);

PromonoidalPresentation renamed(const PromonoidalPresentation& p, const std::function<std::string(const std::string&)>& f);
CategoryPresentation renamed(const CategoryPresentation& c, const std::function<std::string(const std::string&)>& f);

// A presentation together with concrete data in a theory: every source
// object is a pair of objects and every element has its components.
struct ConcreteSample {
  PromonoidalPresentation pres;
  std::map<std::string, Hole> objects;
  std::map<std::string, std::vector<Morphism>> components;
};

// Records concrete elements and the coherence instances relating them.
class SampleBuilder {
 public:
  explicit SampleBuilder(const Theory& t) : t_(t) {}

  std::string add_unit(const Morphism& u);
  std::string add_morphism(const NHoleSplice& s);
  std::string add_split(const NHoleSplice& s);
  std::string add_par_split(const ParSplit& p);
  std::string add_par_unit(const ParUnit& u);

  void add_alpha(const SplicePair& right_nested);
  void add_lambda(const NHoleSplice& s, const Morphism& u);
  void add_rho(const NHoleSplice& s, const Morphism& u);
  void add_par_alpha(const ParSplit& a, const ParSplit& b_in_first);
  void add_par_lambda(const ParSplit& a, const ParUnit& b);
  void add_par_rho(const ParSplit& a, const ParUnit& b);
  void add_psi2(const ParSplit& a, const NHoleSplice& b, const NHoleSplice& c, const Psi2Fn& psi = psi2);
  void add_psi0(const ParUnit& a);
  void add_phi2(const ParSplit& a, const Morphism& b, const Morphism& c);
  void add_phi0(const ParUnit& a);

  const ConcreteSample& sample() const { return s_; }

 private:
  std::string object(const Hole& h);
  std::string element(ElementKind k, const Hole& outer, const std::vector<Hole>& holes, std::vector<Morphism> comps);

  const Theory& t_;
  ConcreteSample s_;
  std::map<Hole, std::string> names_;
};

struct CounitReport {
  std::size_t relations_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Interprets each contour generator as the matching component and checks
// every emitted relation in the theory.
CounitReport check_counit(const Theory& t, const ConcreteSample& sample);

}  // namespace mctx
