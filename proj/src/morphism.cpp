#include "mctx/morphism.hpp"

#include <memory>

#include "mctx/errors.hpp"

namespace mctx {

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::FinFn: return "finfn";
    case Backend::FinStoch: return "finstoch";
    case Backend::Free: return "free";
  }
  return "?";
}

TermPtr FreeTerm::generator(std::string name, ObjectList dom, ObjectList cod) {
  auto t = std::shared_ptr<FreeTerm>(new FreeTerm());
  t->kind_ = Kind::Generator;
  t->name_ = std::move(name);
  t->dom_ = std::move(dom);
  t->cod_ = std::move(cod);
  return t;
}

TermPtr FreeTerm::identity(ObjectList obj) {
  auto t = std::shared_ptr<FreeTerm>(new FreeTerm());
  t->kind_ = Kind::Identity;
  t->dom_ = obj;
  t->cod_ = std::move(obj);
  return t;
}

TermPtr FreeTerm::compose(TermPtr first, TermPtr second) {
  if (first->cod() != second->dom())
    throw TypeError("compose: " + first->cod().str() + " vs " + second->dom().str());
  if (first->kind() == Kind::Identity) return second;
  if (second->kind() == Kind::Identity) return first;
  auto t = std::shared_ptr<FreeTerm>(new FreeTerm());
  t->kind_ = Kind::Compose;
  t->dom_ = first->dom();
  t->cod_ = second->cod();
  t->lhs_ = std::move(first);
  t->rhs_ = std::move(second);
  return t;
}

TermPtr FreeTerm::tensor(TermPtr left, TermPtr right) {
  auto is_unit = [](const TermPtr& x) { return x->kind() == Kind::Identity && x->dom().empty(); };
  if (is_unit(left)) return right;
  if (is_unit(right)) return left;
  if (left->kind() == Kind::Identity && right->kind() == Kind::Identity)
    return identity(mctx::tensor(left->dom(), right->dom()));
  auto t = std::shared_ptr<FreeTerm>(new FreeTerm());
  t->kind_ = Kind::Tensor;
  t->dom_ = mctx::tensor(left->dom(), right->dom());
  t->cod_ = mctx::tensor(left->cod(), right->cod());
  t->lhs_ = std::move(left);
  t->rhs_ = std::move(right);
  return t;
}

TermPtr FreeTerm::symmetry(ObjectList a, ObjectList b) {
  if (a.empty() || b.empty()) return identity(mctx::tensor(a, b));
  auto t = std::shared_ptr<FreeTerm>(new FreeTerm());
  t->kind_ = Kind::Symmetry;
  t->dom_ = mctx::tensor(a, b);
  t->cod_ = mctx::tensor(b, a);
  t->sym_a_ = std::move(a);
  t->sym_b_ = std::move(b);
  return t;
}

std::string FreeTerm::str() const {
  switch (kind_) {
    case Kind::Generator: return name_;
    case Kind::Identity: return "id[" + dom_.str() + "]";
    case Kind::Compose: return "(" + lhs_->str() + " ; " + rhs_->str() + ")";
    case Kind::Tensor: return "(" + lhs_->str() + " * " + rhs_->str() + ")";
    case Kind::Symmetry: return "sw[" + sym_a_.str() + "," + sym_b_.str() + "]";
  }
  return "?";
}

Morphism::Morphism(ObjectList dom, ObjectList cod, std::vector<std::uint32_t> table)
    : backend_(Backend::FinFn),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      table_(std::make_shared<const std::vector<std::uint32_t>>(std::move(table))) {}

Morphism::Morphism(ObjectList dom, ObjectList cod, StochMatrix matrix)
    : backend_(Backend::FinStoch),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      matrix_(std::make_shared<const StochMatrix>(std::move(matrix))) {}

Morphism::Morphism(TermPtr term)
    : backend_(Backend::Free), dom_(term->dom()), cod_(term->cod()), term_(std::move(term)) {}

const std::vector<std::uint32_t>& Morphism::table() const {
  if (backend_ != Backend::FinFn) throw TheoryError("table() on a " + backend_name(backend_) + " morphism");
  return *table_;
}

const StochMatrix& Morphism::matrix() const {
  if (backend_ != Backend::FinStoch) throw TheoryError("matrix() on a " + backend_name(backend_) + " morphism");
  return *matrix_;
}

const TermPtr& Morphism::term() const {
  if (backend_ != Backend::Free) throw TheoryError("term() on a " + backend_name(backend_) + " morphism");
  return term_;
}

std::string Morphism::str() const {
  std::string head = dom_.str() + " -> " + cod_.str() + " ";
  switch (backend_) {
    case Backend::FinFn: {
      std::string s = "[";
      for (std::size_t i = 0; i < table_->size(); ++i) s += (i ? "," : "") + std::to_string((*table_)[i]);
      return head + s + "]";
    }
    case Backend::FinStoch: {
      std::string s = "[";
      for (std::size_t r = 0; r < matrix_->rows; ++r) {
        s += r ? "; " : "";
        for (std::size_t c = 0; c < matrix_->cols; ++c) s += (c ? " " : "") + to_string(matrix_->at(r, c));
      }
      return head + s + "]";
    }
    case Backend::Free: return head + term_->str();
  }
  return head;
}

}  // namespace mctx
