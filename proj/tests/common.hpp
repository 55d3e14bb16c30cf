#pragma once

#include <doctest.h>

#include "mctx/theory.hpp"

namespace testing {

using namespace mctx;

inline const ObjectList B{"B"};
inline const ObjectList T{"T"};
inline const ObjectList I{};

// B has carrier 2, T carrier 3.
inline Signature small_signature() {
  Signature s;
  s.declare("B", 2);
  s.declare("T", 3);
  return s;
}
inline Theory finfn() { return Theory::fin_fn(small_signature()); }
inline Theory finstoch() { return Theory::fin_stoch(small_signature()); }

inline Morphism NOT(const Theory& t) { return t.table(B, B, {1, 0}); }
inline Morphism AND(const Theory& t) { return t.table(tensor(B, B), B, {0, 0, 0, 1}); }
inline Morphism XOR(const Theory& t) { return t.table(tensor(B, B), B, {0, 1, 1, 0}); }

inline std::vector<std::uint32_t> tab(const Morphism& m) { return m.table(); }

}  // namespace testing
