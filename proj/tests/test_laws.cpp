#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/laws.hpp"

using namespace testing;

namespace {

// Swaps the middle tensor factors when their types coincide.
Psi2Result swapped_psi2(const Theory& t, const ParSplit& outer, const NHoleSplice& l, const NHoleSplice& r) {
  Psi2Result good = psi2(t, outer, l, r);
  if (l[1].type() != r[1].type()) return good;
  std::vector<Morphism> ms = good.seq.morphisms();
  ms[1] = t.tensor(r[1], l[1]);
  return {NHoleSplice(ms), good.first, good.second};
}

const LawFamilyResult& family(const LawReport& r, const std::string& name) {
  for (const auto& f : r.families)
    if (f.family == name) return f;
  throw std::runtime_error("missing family " + name);
}

}  // namespace

TEST_CASE("all families pass on a small run") {
  LawOptions opt;
  opt.cases = 20;
  LawReport r = run_laws(opt);
  CHECK(r.families.size() == law_families().size());
  CHECK(r.ok());
  CHECK(r.text().find("8/8 families pass") != std::string::npos);
}

TEST_CASE("a faulty laxator is caught") {
  LawOptions opt;
  opt.cases = 40;
  opt.families = {"produoidal-coherence", "counit"};
  opt.hooks.psi2 = swapped_psi2;
  LawReport r = run_laws(opt);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(family(r, "produoidal-coherence").ok());
  CHECK_FALSE(family(r, "counit").ok());
  CHECK(r.text().find("FAIL produoidal-coherence") != std::string::npos);
  // unit diagrams without a laxator are untouched
  for (const auto& c : family(r, "produoidal-coherence").checks)
    if (c.name == "phi2-assoc" || c.name == "psi0-coassoc") CHECK(c.failed == 0);
}

TEST_CASE("zero cases is a vacuous pass with a warning") {
  LawOptions opt;
  opt.cases = 0;
  LawReport r = run_laws(opt);
  CHECK(r.ok());
  REQUIRE(r.warnings.size() == 1);
}

TEST_CASE("reports are deterministic per seed") {
  LawOptions opt;
  opt.cases = 15;
  opt.seed = 99;
  CHECK(run_laws(opt).text() == run_laws(opt).text());
  CHECK(run_laws(opt).json() == run_laws(opt).json());
}

TEST_CASE("stochastic theory") {
  LawOptions opt;
  opt.cases = 10;
  opt.theory = TheoryKind::FinStoch;
  opt.families = {"splice-coherence", "produoidal-coherence", "counit", "cartesian-lens"};
  LawReport r = run_laws(opt);
  CHECK(r.ok());
  CHECK(family(r, "cartesian-lens").notes.size() == 1);
}
