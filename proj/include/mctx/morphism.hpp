#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mctx/object.hpp"
#include "mctx/rational.hpp"

namespace mctx {

enum class Backend { FinFn, FinStoch, Free };

std::string backend_name(Backend b);

// Row-major dense matrix of exact rationals; rows index the domain.
struct StochMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  friend bool operator==(const StochMatrix&, const StochMatrix&) = default;
};

class FreeTerm;
using TermPtr = std::shared_ptr<const FreeTerm>;

// Syntax tree of a symmetric monoidal term. No quotient is applied beyond
// dropping identities in composites and identities on the unit in tensors.
class FreeTerm {
 public:
  enum class Kind { Generator, Identity, Compose, Tensor, Symmetry };

  static TermPtr generator(std::string name, ObjectList dom, ObjectList cod);
  static TermPtr identity(ObjectList obj);
  static TermPtr compose(TermPtr first, TermPtr second);
  static TermPtr tensor(TermPtr left, TermPtr right);
  static TermPtr symmetry(ObjectList a, ObjectList b);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const ObjectList& dom() const { return dom_; }
  const ObjectList& cod() const { return cod_; }
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }
  // Symmetry(a, b) keeps its two factors here.
  const ObjectList& sym_a() const { return sym_a_; }
  const ObjectList& sym_b() const { return sym_b_; }

  std::string str() const;

 private:
  FreeTerm() = default;
  Kind kind_ = Kind::Identity;
  std::string name_;
  ObjectList dom_, cod_, sym_a_, sym_b_;
  TermPtr lhs_, rhs_;
};

// A theory-tagged arrow. Cheap to copy; payloads are shared and immutable.
class Morphism {
 public:
  Morphism(ObjectList dom, ObjectList cod, std::vector<std::uint32_t> table);
  Morphism(ObjectList dom, ObjectList cod, StochMatrix matrix);
  explicit Morphism(TermPtr term);

  Backend backend() const { return backend_; }
  const ObjectList& dom() const { return dom_; }
  const ObjectList& cod() const { return cod_; }
  Hole type() const { return {dom_, cod_}; }

  const std::vector<std::uint32_t>& table() const;
  const StochMatrix& matrix() const;
  const TermPtr& term() const;

  std::string str() const;

 private:
  Backend backend_;
  ObjectList dom_, cod_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
  std::shared_ptr<const StochMatrix> matrix_;
  TermPtr term_;
};

}  // namespace mctx
