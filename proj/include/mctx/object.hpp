#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mctx {

// A strict monoidal object: a flat list of atom names. Tensor is
// concatenation, the unit is the empty list.
class ObjectList {
 public:
  ObjectList() = default;
  ObjectList(std::initializer_list<std::string> atoms) : atoms_(atoms) {}
  explicit ObjectList(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::string& operator[](std::size_t i) const { return atoms_[i]; }

  ObjectList slice(std::size_t from, std::size_t count) const;
  bool has_prefix(const ObjectList& p) const;
  bool has_suffix(const ObjectList& s) const;

  // "A⊗B", or "I" for the unit.
  std::string str() const;

  friend bool operator==(const ObjectList&, const ObjectList&) = default;
  friend auto operator<=>(const ObjectList&, const ObjectList&) = default;

 private:
  std::vector<std::string> atoms_;
};

inline ObjectList tensor(const ObjectList& a) { return a; }

template <typename... Rest>
ObjectList tensor(const ObjectList& a, const ObjectList& b, const Rest&... rest) {
  std::vector<std::string> out = a.atoms();
  out.insert(out.end(), b.atoms().begin(), b.atoms().end());
  return tensor(ObjectList(std::move(out)), rest...);
}

ObjectList tensor_all(const std::vector<ObjectList>& parts);

// A hole or boundary type: a pair (X, Y) of input and output objects.
struct Hole {
  ObjectList x;
  ObjectList y;
  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole&, const Hole&) = default;
  std::string str() const;
};

}  // namespace mctx
