#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mctx/duosplice.hpp"
#include "mctx/theory.hpp"

namespace mctx {

struct LawOptions {
  TheoryKind theory = TheoryKind::FinFn;
  std::size_t max_carrier = 2;
  std::size_t cases = 300;
  std::uint64_t seed = 1;
  std::vector<std::string> families;  // empty: all
  DuoHooks hooks;                     // lets tests inject a faulty laxator
};

struct LawCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
};

struct LawFamilyResult {
  std::string family;
  std::vector<LawCheck> checks;
  std::vector<std::string> failures;  // first few, for the report
  std::vector<std::string> notes;
  bool ok() const;
};

struct LawReport {
  std::vector<LawFamilyResult> families;
  std::vector<std::string> warnings;
  bool ok() const;
  std::string text() const;
  std::string json() const;
};

const std::vector<std::string>& law_families();
LawReport run_laws(const LawOptions& opt);

}  // namespace mctx
