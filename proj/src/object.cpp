#include "mctx/object.hpp"

namespace mctx {

ObjectList ObjectList::slice(std::size_t from, std::size_t count) const {
  return ObjectList(std::vector<std::string>(atoms_.begin() + static_cast<std::ptrdiff_t>(from),
                                             atoms_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

bool ObjectList::has_prefix(const ObjectList& p) const {
  if (p.size() > size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (atoms_[i] != p.atoms_[i]) return false;
  return true;
}

bool ObjectList::has_suffix(const ObjectList& s) const {
  if (s.size() > size()) return false;
  std::size_t off = size() - s.size();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (atoms_[off + i] != s.atoms_[i]) return false;
  return true;
}

std::string ObjectList::str() const {
  if (atoms_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += "⊗";
    out += atoms_[i];
  }
  return out;
}

ObjectList tensor_all(const std::vector<ObjectList>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.atoms().begin(), p.atoms().end());
  return ObjectList(std::move(out));
}

std::string Hole::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

}  // namespace mctx
