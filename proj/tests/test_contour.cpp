#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "mctx/contour.hpp"

using namespace testing;

namespace {

std::vector<std::string> rels(const CategoryPresentation& c) {
  std::vector<std::string> out;
  for (const auto& r : c.relations) out.push_back(r.lhs.str() + " = " + r.rhs.str());
  return out;
}

PresElement split(std::string n, std::string o, std::string x, std::string y) {
  return {std::move(n), ElementKind::SeqSplit, std::move(o), {std::move(x), std::move(y)}};
}

}  // namespace

TEST_CASE("a single split contours to three generators") {
  PromonoidalPresentation p{{"C", "Y", "Z"}, {split("c", "C", "Y", "Z")}, {}};
  CategoryPresentation c = contour(p);
  CHECK(c.objects.size() == 6);
  REQUIRE(c.generators.size() == 3);
  CHECK(c.generators[0].name == "c_0");
  CHECK(c.generators[0].dom == ObjectList{"C^L"});
  CHECK(c.generators[0].cod == ObjectList{"Y^L"});
  CHECK(c.generators[1].dom == ObjectList{"Y^R"});
  CHECK(c.generators[1].cod == ObjectList{"Z^L"});
  CHECK(c.generators[2].dom == ObjectList{"Z^R"});
  CHECK(c.generators[2].cod == ObjectList{"C^R"});
}

TEST_CASE("empty presentation") {
  PromonoidalPresentation p{{"A", "B"}, {}, {}};
  CategoryPresentation c = contour(p);
  CHECK(c.objects == std::vector<std::string>{"A^L", "A^R", "B^L", "B^R"});
  CHECK(c.generators.empty());
  CHECK(c.relations.empty());
}

TEST_CASE("an associativity instance yields four relations") {
  PromonoidalPresentation p{{"A", "X", "Y", "Z", "U", "V"},
                            {split("a", "A", "X", "U"), split("b", "U", "Y", "Z"), split("c", "A", "V", "Z"),
                             split("d", "V", "X", "Y")},
                            {{EqTag::Alpha, {"a", "b", "c", "d"}}}};
  CategoryPresentation c = contour(p);
  CHECK(c.generators.size() == 12);
  CHECK(rels(c) == std::vector<std::string>{"a_0 = (c_0 ; d_0)", "(a_1 ; b_0) = d_1", "b_1 = (d_2 ; c_1)",
                                            "(b_2 ; a_2) = c_2"});
  // ill-typed: d does not sit in c's first hole
  PromonoidalPresentation bad = p;
  bad.elements[3].outer = "U";
  CHECK_THROWS_AS(contour(bad), TypeError);
  PromonoidalPresentation missing = p;
  missing.equations[0].elements[1] = "nope";
  CHECK_THROWS_AS(contour(missing), TypeError);
}

TEST_CASE("unitor instances") {
  PromonoidalPresentation p{{"A", "N1", "X"},
                            {split("d", "A", "N1", "X"),
                             {"e", ElementKind::SeqUnit, "N1", {}},
                             {"c", ElementKind::Morph, "A", {"X"}}},
                            {{EqTag::Lambda, {"d", "e", "c"}}}};
  CHECK(rels(contour(p)) == std::vector<std::string>{"c_0 = (d_0 ; e_0 ; d_1)", "c_1 = d_2"});
}

TEST_CASE("laxator relation schemas") {
  PromonoidalPresentation phi0{{"A"},
                               {{"a", ElementKind::ParUnit, "A", {}}, {"b", ElementKind::SeqUnit, "A", {}}},
                               {{EqTag::Phi0, {"a", "b"}}}};
  CHECK_THROWS_AS(contour(phi0), TypeError);
  CategoryPresentation c = monoidal_contour(phi0);
  CHECK(c.generators[0].cod.empty());
  CHECK(rels(c) == std::vector<std::string>{"(a_0 ; a_1) = b_0"});

  PromonoidalPresentation psi0{{"A", "P", "Q"},
                               {{"a", ElementKind::ParUnit, "A", {}},
                                split("b", "A", "P", "Q"),
                                {"c", ElementKind::ParUnit, "P", {}},
                                {"d", ElementKind::ParUnit, "Q", {}}},
                               {{EqTag::Psi0, {"a", "b", "c", "d"}}}};
  CHECK(rels(monoidal_contour(psi0)) ==
        std::vector<std::string>{"a_0 = (b_0 ; c_0)", "id[I] = (c_1 ; b_1 ; d_0)", "a_1 = (d_1 ; b_2)"});

  PromonoidalPresentation units{{"A", "B"},
                                {{"u", ElementKind::SeqUnit, "A", {}}, {"v", ElementKind::SeqUnit, "B", {}}},
                                {}};
  CategoryPresentation cu = monoidal_contour(units);
  CHECK(cu.generators.size() == 2);
  for (const auto& g : cu.generators) CHECK(g.name.substr(g.name.size() - 2) == "_0");
}

TEST_CASE("generator counts per element kind") {
  PromonoidalPresentation p{{"A", "B", "C"},
                            {{"u", ElementKind::SeqUnit, "A", {}},
                             {"m", ElementKind::Morph, "A", {"B"}},
                             split("s", "A", "B", "C"),
                             {"p", ElementKind::ParSplit, "A", {"B", "C"}},
                             {"q", ElementKind::ParUnit, "A", {}}},
                            {}};
  CategoryPresentation c = monoidal_contour(p);
  CHECK(c.generators.size() == 1 + 2 + 3 + 2 + 2);
  CHECK(c.generators[6].cod == ObjectList{"B^L", "C^L"});
}

TEST_CASE("renaming commutes with contour") {
  PromonoidalPresentation p{{"A", "X", "Y", "Z", "U", "V"},
                            {split("a", "A", "X", "U"), split("b", "U", "Y", "Z"), split("c", "A", "V", "Z"),
                             split("d", "V", "X", "Y")},
                            {{EqTag::Alpha, {"a", "b", "c", "d"}}}};
  auto f = [](const std::string& s) { return "n" + s; };
  CHECK(contour(renamed(p, f)).str() == renamed(contour(p), f).str());
}

TEST_CASE("concrete instances satisfy every contour relation") {
  Theory t = finfn();
  Rng rng(17);
  auto r = [&](const ObjectList& a, const ObjectList& b) { return t.random(rng, a, b); };
  SampleBuilder sb(t);
  NHoleSplice outer({r(T, B), r(B, B), r(T, T)}), inner({r(B, I), r(B, T), r(B, T)});
  sb.add_alpha({outer, inner, 1});
  sb.add_psi2(ParSplit::make(r(T, tensor(B, B)), r(tensor(B, B), T), {B, B}, {B, B}),
              NHoleSplice({r(B, B), r(T, T), r(B, B)}), NHoleSplice({r(B, I), r(B, B), r(B, B)}));
  sb.add_phi0(ParUnit::make(r(B, I), r(I, T)));
  CounitReport rep = check_counit(t, sb.sample());
  CHECK(rep.ok());
  CHECK(rep.relations_checked == 4 + 3 + 1);
  // a sample with a wrong component is caught
  ConcreteSample broken = sb.sample();
  auto& comps = broken.components.begin()->second;
  comps[0] = t.function(comps[0].dom(), comps[0].cod(), [&](std::size_t x) { return (comps[0].table()[x] + 1) % 2; });
  CHECK_FALSE(check_counit(t, broken).ok());
}
