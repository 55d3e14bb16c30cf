#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mctx/errors.hpp"
#include "mctx/morphism.hpp"
#include "mctx/object.hpp"

namespace mctx {

using Rng = std::mt19937_64;

// Uniform in [0, n); portable across standard libraries.
std::size_t uniform_index(Rng& rng, std::size_t n);

struct AtomInfo {
  std::size_t size = 1;
  std::vector<std::string> labels;  // optional, one per carrier element
};

class Signature {
 public:
  Signature() = default;
  void declare(const std::string& atom, std::size_t size, std::vector<std::string> labels = {});
  bool has(const std::string& atom) const { return atoms_.count(atom) > 0; }
  const AtomInfo& info(const std::string& atom) const;
  std::size_t carrier(const ObjectList& obj) const;
  std::vector<std::size_t> radices(const ObjectList& obj) const;
  const std::map<std::string, AtomInfo>& atoms() const { return atoms_; }

  // Mixed-radix digits of an index, leftmost atom most significant.
  std::vector<std::size_t> decode(const ObjectList& obj, std::size_t index) const;
  std::size_t encode(const ObjectList& obj, const std::vector<std::size_t>& digits) const;
  // "Client=10 Server=21"-style rendering of an element.
  std::string label(const ObjectList& obj, std::size_t index) const;

 private:
  std::map<std::string, AtomInfo> atoms_;
};

enum class TheoryKind { FinFn, FinStoch, Free };

// One uniform contract over the three backends. Values are immutable.
class Theory {
 public:
  static Theory fin_fn(Signature sig);
  static Theory fin_stoch(Signature sig);
  static Theory free(bool symmetric = true);

  TheoryKind kind() const { return kind_; }
  Backend backend() const;
  bool symmetric() const { return symmetric_; }
  bool cartesian() const { return kind_ == TheoryKind::FinFn; }
  bool finite() const { return kind_ != TheoryKind::Free; }
  const Signature& signature() const { return *sig_; }
  std::size_t carrier(const ObjectList& obj) const { return sig_->carrier(obj); }

  Morphism identity(const ObjectList& obj) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism symmetry(const ObjectList& a, const ObjectList& b) const;
  bool equal(const Morphism& f, const Morphism& g) const;

  template <typename... Rest>
  Morphism seq(const Morphism& f, const Morphism& g, const Rest&... rest) const {
    if constexpr (sizeof...(rest) == 0) {
      return compose(f, g);
    } else {
      return seq(compose(f, g), rest...);
    }
  }
  template <typename... Rest>
  Morphism par(const Morphism& f, const Morphism& g, const Rest&... rest) const {
    if constexpr (sizeof...(rest) == 0) {
      return tensor(f, g);
    } else {
      return par(tensor(f, g), rest...);
    }
  }
  Morphism seq_all(const std::vector<Morphism>& fs) const;
  Morphism par_all(const std::vector<Morphism>& fs) const;

  // Wire permutation: tensor(blocks) -> tensor(blocks[order[0]], ...).
  Morphism permute(const std::vector<ObjectList>& blocks, const std::vector<std::size_t>& order) const;

  // Validated constructors for the finite backends.
  Morphism table(const ObjectList& dom, const ObjectList& cod, std::vector<std::uint32_t> t) const;
  Morphism matrix(const ObjectList& dom, const ObjectList& cod, StochMatrix m) const;
  Morphism function(const ObjectList& dom, const ObjectList& cod,
                    const std::function<std::size_t(std::size_t)>& fn) const;
  Morphism generator(const std::string& name, const ObjectList& dom, const ObjectList& cod) const;

  // Brings a morphism into this theory: deterministic tables embed into
  // FinStoch; anything else must already match.
  Morphism adopt(const Morphism& m) const;
  void validate(const Morphism& m) const;

  // Cartesian/deterministic structure (finite backends).
  Morphism copy(const ObjectList& a) const;
  Morphism discard(const ObjectList& a) const;

  std::vector<Morphism> enumerate_hom(const ObjectList& a, const ObjectList& b) const;
  std::size_t hom_size(const ObjectList& a, const ObjectList& b) const;  // saturates at SIZE_MAX
  // enumerate_hom for FinFn; deterministic maps plus mixtures for FinStoch.
  std::vector<Morphism> probing_family(const ObjectList& a, const ObjectList& b) const;
  Morphism random(Rng& rng, const ObjectList& a, const ObjectList& b) const;

 private:
  Theory(TheoryKind kind, bool symmetric, std::shared_ptr<const Signature> sig);
  void check_backend(const Morphism& m) const;

  TheoryKind kind_;
  bool symmetric_;
  std::shared_ptr<const Signature> sig_;
};

Morphism eval_term(const TermPtr& t, const std::map<std::string, Morphism>& interp, const Theory& target);

}  // namespace mctx
