#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "mctx/word.hpp"

namespace mctx {

// f₀ ⨾ □ ⨾ f₁ ⨾ □ ⨾ ... ⨾ fₙ. Hole i has type (cod fᵢ, dom fᵢ₊₁).
class NHoleSplice {
 public:
  explicit NHoleSplice(std::vector<Morphism> morphisms);

  const std::vector<Morphism>& morphisms() const { return ms_; }
  const Morphism& operator[](std::size_t i) const { return ms_[i]; }
  std::size_t arity() const { return ms_.size() - 1; }
  Hole outer() const { return {ms_.front().dom(), ms_.back().cod()}; }
  Hole hole(std::size_t i) const { return {ms_[i].cod(), ms_[i + 1].dom()}; }
  std::vector<Hole> holes() const;
  Word word() const;

 private:
  std::vector<Morphism> ms_;
};

bool splice_equal(const Theory& t, const NHoleSplice& a, const NHoleSplice& b);

// Hole indices are zero-based.
NHoleSplice splice_fill(const Theory& t, const NHoleSplice& c, std::size_t i, const NHoleSplice& d);
Morphism splice_fill_all(const Theory& t, const NHoleSplice& c, const std::vector<Morphism>& fillers);

// A 2-hole split with another 2-hole split sitting in one of its holes.
struct SplicePair {
  NHoleSplice outer;
  NHoleSplice inner;
  std::size_t position;  // 0 or 1
};

NHoleSplice flatten(const Theory& t, const SplicePair& p);
// Right-nested (inner in hole 1) to left-nested (inner in hole 0), and back.
SplicePair splice_alpha(const Theory& t, const SplicePair& right_nested);
SplicePair splice_alpha_inv(const Theory& t, const SplicePair& left_nested);

NHoleSplice splice_lambda(const Theory& t, const NHoleSplice& s, const Morphism& u);
NHoleSplice splice_rho(const Theory& t, const NHoleSplice& s, const Morphism& u);

// Trees of splits, for coherence checks. A child is an open hole, a unit
// (plain morphism) or a further node.
struct SpliceNode;
using SpliceNodePtr = std::shared_ptr<const SpliceNode>;
struct OpenSlot {};
using SpliceChild = std::variant<OpenSlot, Morphism, SpliceNodePtr>;

struct SpliceNode {
  NHoleSplice split;
  std::vector<SpliceChild> children;
};

SpliceNodePtr splice_node(NHoleSplice split, std::vector<SpliceChild> children);
NHoleSplice flatten(const Theory& t, const SpliceNodePtr& node);

using TreePath = std::vector<std::size_t>;
enum class SpliceRewrite { AssocLeft, AssocRight, Lambda, Rho };
SpliceNodePtr rewrite_at(const Theory& t, const SpliceNodePtr& root, const TreePath& path, SpliceRewrite r);

}  // namespace mctx
