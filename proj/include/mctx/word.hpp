#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mctx/theory.hpp"

namespace mctx {

// One layer of parallel holes flanked by residual wires:
//   P0 ⊗ ■₁ ⊗ P1 ⊗ ... ⊗ ■ₖ ⊗ Pk
struct HoleLayer {
  std::vector<ObjectList> residuals;  // holes.size() + 1 entries
  std::vector<Hole> holes;

  static HoleLayer single(ObjectList left, Hole hole, ObjectList right);
  static HoleLayer pair(ObjectList p0, Hole h1, ObjectList p1, Hole h2, ObjectList p2);
  ObjectList inputs() const;   // P0 ⊗ X1 ⊗ P1 ...
  ObjectList outputs() const;  // P0 ⊗ Y1 ⊗ P1 ...
};

// A general multi-hole shape: pieces[0], layer 0, pieces[1], ..., pieces[n].
// Spliced arrows, contexts, lenses and parallel splits all flatten to this.
struct Word {
  std::vector<Morphism> pieces;
  std::vector<HoleLayer> layers;

  Hole outer() const { return {pieces.front().dom(), pieces.back().cod()}; }
  std::vector<Hole> holes() const;
  void check() const;  // throws TypeError on a boundary mismatch
};

// Closes every hole, in layer order, left to right within a layer.
Morphism fill(const Theory& t, const Word& w, const std::vector<Morphism>& fillers);

// The word filled with the generic probe: every hole reads its input from a
// fresh environment wire and writes its output to another.
//   A ⊗ Y₁ ⊗ ... ⊗ Yₙ  ->  B ⊗ X₁ ⊗ ... ⊗ Xₙ
// Requires a symmetric theory.
Morphism transcript(const Theory& t, const Word& w);

struct FillVerdict {
  bool equal = true;
  std::string witness;  // a separating filling when !equal
  explicit operator bool() const { return equal; }
};

struct FillOptions {
  std::size_t max_assignments = 4096;  // plain-fill enumeration budget
  std::size_t samples = 128;           // random plain fills when over budget
  bool use_transcript = true;
};

// Observational equality of two representatives with the same boundary.
FillVerdict fill_equal(const Theory& t, const Word& a, const Word& b, const FillOptions& opt = {});

// Every assignment of fillers (enumerate_hom / probing family) when the
// product is within budget, otherwise `samples` deterministic random picks.
std::vector<std::vector<Morphism>> filler_assignments(const Theory& t, const std::vector<Hole>& holes,
                                                      std::size_t budget, std::size_t samples,
                                                      std::uint64_t seed = 7);

}  // namespace mctx
