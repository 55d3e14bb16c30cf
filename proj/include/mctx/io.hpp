#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mctx/session.hpp"

namespace mctx {

using json = nlohmann::ordered_json;

json object_to_json(const ObjectList& o);
ObjectList object_from_json(const json& j);

json term_to_json(const TermPtr& t);
TermPtr term_from_json(const json& j);

// {"dom": [...], "cod": [...], and one of "table" | "matrix" | "term"}.
json morphism_to_json(const Morphism& m);
// Terms over a finite theory are evaluated with generators taken from `named`.
Morphism morphism_from_json(const Theory& t, const json& j, const std::map<std::string, Morphism>& named = {});

struct Refactoring {
  std::string name;
  Party a, b;
};

struct Protocol {
  explicit Protocol(Theory t) : theory(std::move(t)) {}

  Theory theory;
  std::map<std::string, ObjectList> aliases;
  std::map<std::string, Morphism> morphisms;
  std::vector<Party> parties;
  std::vector<std::string> channels;  // per stage: "noise", "id" or a morphism name
  Rational noise = 0;
  std::vector<Refactoring> refactorings;
  std::string success;  // optional state label marking the success outcome

  ObjectList resolve(const std::string& name) const;
};

// Malformed documents raise ParseError; unresolved names and boundary
// mismatches raise TypeError.
Protocol load_protocol(const json& j);
Protocol load_protocol_file(const std::string& path);
json read_json_file(const std::string& path);

struct Composite {
  LensSplit combined;
  Morphism closed;
};

// Type-checks and interleaves every party, then fills the channels.
Composite compose_protocol(const Protocol& p, std::optional<Rational> noise = std::nullopt);

// "client=0,server=10": per party, a state label or a carrier index.
std::size_t initial_index(const Protocol& p, const std::string& spec);

}  // namespace mctx

#include "mctx/contour.hpp"

namespace mctx {

// {"objects": [...], "elements": [{"name", "kind", "outer", "holes"}],
//  "equations": [{"tag", "elements"}]}
PromonoidalPresentation presentation_from_json(const json& j);
json presentation_to_json(const PromonoidalPresentation& p);
json category_to_json(const CategoryPresentation& c);

}  // namespace mctx
