#include "mctx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mctx {

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

json object_to_json(const ObjectList& o) { return json(o.atoms()); }

ObjectList object_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("object must be an array of atom names");
  std::vector<std::string> atoms;
  for (const auto& a : j) {
    if (!a.is_string()) throw ParseError("atom names must be strings");
    atoms.push_back(a.get<std::string>());
  }
  return ObjectList(atoms);
}

json term_to_json(const TermPtr& t) {
  switch (t->kind()) {
    case FreeTerm::Kind::Generator:
      return {{"gen", t->name()}, {"dom", object_to_json(t->dom())}, {"cod", object_to_json(t->cod())}};
    case FreeTerm::Kind::Identity: return {{"id", object_to_json(t->dom())}};
    case FreeTerm::Kind::Compose: return {{"seq", json::array({term_to_json(t->lhs()), term_to_json(t->rhs())})}};
    case FreeTerm::Kind::Tensor: return {{"par", json::array({term_to_json(t->lhs()), term_to_json(t->rhs())})}};
    case FreeTerm::Kind::Symmetry:
      return {{"swap", json::array({object_to_json(t->sym_a()), object_to_json(t->sym_b())})}};
  }
  throw ParseError("unknown term kind");
}

TermPtr term_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("term must be an object");
  if (j.contains("gen"))
    return FreeTerm::generator(need_string(j, "gen", "term"), object_from_json(need(j, "dom", "term")),
                               object_from_json(need(j, "cod", "term")));
  if (j.contains("id")) return FreeTerm::identity(object_from_json(j.at("id")));
  for (const char* k : {"seq", "par"}) {
    if (!j.contains(k)) continue;
    const json& parts = j.at(k);
    if (!parts.is_array() || parts.empty()) throw ParseError(std::string("term \"") + k + "\" needs a non-empty array");
    TermPtr acc = term_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      TermPtr next = term_from_json(parts[i]);
      if (std::string(k) == "seq") {
        if (acc->cod() != next->dom())
          throw TypeError("term composite " + acc->cod().str() + " vs " + next->dom().str());
        acc = FreeTerm::compose(acc, next);
      } else {
        acc = FreeTerm::tensor(acc, next);
      }
    }
    return acc;
  }
  if (j.contains("swap")) {
    const json& s = j.at("swap");
    if (!s.is_array() || s.size() != 2) throw ParseError("term \"swap\" needs two objects");
    return FreeTerm::symmetry(object_from_json(s[0]), object_from_json(s[1]));
  }
  throw ParseError("term needs one of gen, id, seq, par, swap");
}

json morphism_to_json(const Morphism& m) {
  json j;
  j["dom"] = object_to_json(m.dom());
  j["cod"] = object_to_json(m.cod());
  switch (m.backend()) {
    case Backend::FinFn: j["table"] = m.table(); break;
    case Backend::FinStoch: {
      const auto& mx = m.matrix();
      json rows = json::array();
      for (std::size_t r = 0; r < mx.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mx.cols; ++c) row.push_back(to_string(mx.at(r, c)));
        rows.push_back(row);
      }
      j["matrix"] = rows;
      break;
    }
    case Backend::Free: j["term"] = term_to_json(m.term()); break;
  }
  return j;
}

namespace {

Morphism eval_named_term(const Theory& t, const TermPtr& term, const std::map<std::string, Morphism>& named) {
  switch (term->kind()) {
    case FreeTerm::Kind::Generator: {
      auto it = named.find(term->name());
      if (it == named.end()) throw TypeError("term mentions unknown morphism '" + term->name() + "'");
      if (it->second.dom() != term->dom() || it->second.cod() != term->cod())
        throw TypeError("term uses '" + term->name() + "' at the wrong type");
      return t.adopt(it->second);
    }
    case FreeTerm::Kind::Identity: return t.identity(term->dom());
    case FreeTerm::Kind::Compose:
      return t.compose(eval_named_term(t, term->lhs(), named), eval_named_term(t, term->rhs(), named));
    case FreeTerm::Kind::Tensor:
      return t.tensor(eval_named_term(t, term->lhs(), named), eval_named_term(t, term->rhs(), named));
    case FreeTerm::Kind::Symmetry: return t.symmetry(term->sym_a(), term->sym_b());
  }
  throw TypeError("unknown term kind");
}

void check_atoms(const Theory& t, const ObjectList& o) {
  if (!t.finite()) return;
  for (const auto& a : o.atoms())
    if (!t.signature().has(a)) throw TypeError("unknown object '" + a + "'");
}

}  // namespace

Morphism morphism_from_json(const Theory& t, const json& j, const std::map<std::string, Morphism>& named) {
  if (!j.is_object()) throw ParseError("morphism must be an object");
  if (j.contains("term")) {
    TermPtr term = term_from_json(j.at("term"));
    if (t.kind() == TheoryKind::Free) return Morphism(term);
    return eval_named_term(t, term, named);
  }
  ObjectList dom = object_from_json(need(j, "dom", "morphism")), cod = object_from_json(need(j, "cod", "morphism"));
  check_atoms(t, dom);
  check_atoms(t, cod);
  if (j.contains("table")) {
    std::vector<std::uint32_t> tab;
    try {
      tab = j.at("table").get<std::vector<std::uint32_t>>();
    } catch (const json::exception&) {
      throw ParseError("table must be an array of non-negative integers");
    }
    if (!t.finite()) throw TypeError("tables need a finite theory");
    return t.table(dom, cod, std::move(tab));
  }
  if (j.contains("matrix")) {
    if (t.kind() != TheoryKind::FinStoch) throw TypeError("matrices need a finstoch theory");
    const json& rows = j.at("matrix");
    if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
    StochMatrix m{rows.size(), rows.empty() ? 0 : rows[0].size(), {}};
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != m.cols) throw ParseError("matrix rows must have equal length");
      for (const auto& v : row) m.data.push_back(parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
    }
    return t.matrix(dom, cod, std::move(m));
  }
  throw ParseError("morphism needs one of table, matrix, term");
}

ObjectList Protocol::resolve(const std::string& name) const {
  if (name == "I") return {};
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  if (theory.finite() && !theory.signature().has(name)) throw TypeError("unknown object '" + name + "'");
  return ObjectList{name};
}

namespace {

Theory theory_from_json(const json& j) {
  std::string tag = need_string(j, "theory", "protocol");
  if (tag == "free") return Theory::free(true);
  if (tag != "finfn" && tag != "finstoch") throw ParseError("unknown theory '" + tag + "'");
  Signature sig;
  const json& objs = need(j, "objects", "protocol");
  if (!objs.is_object()) throw ParseError("\"objects\" must map atom names to carriers");
  for (const auto& [name, spec] : objs.items()) {
    if (spec.is_number_unsigned()) {
      sig.declare(name, spec.get<std::size_t>());
      continue;
    }
    std::size_t size = 0;
    std::vector<std::string> labels;
    try {
      size = need(spec, "size", "object " + name).get<std::size_t>();
      if (spec.contains("labels")) labels = spec.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw ParseError("object " + name + ": size must be a count and labels strings");
    }
    sig.declare(name, size, labels);
  }
  return tag == "finfn" ? Theory::fin_fn(sig) : Theory::fin_stoch(sig);
}

ObjectList resolve_list(const Protocol& p, const json& j, const std::string& where) {
  if (j.is_string()) return p.resolve(j.get<std::string>());
  if (!j.is_array()) throw ParseError(where + ": object must be a name or a list of names");
  ObjectList out;
  for (const auto& a : j) {
    if (!a.is_string()) throw ParseError(where + ": object names must be strings");
    out = tensor(out, p.resolve(a.get<std::string>()));
  }
  return out;
}

Morphism step_from_json(const Protocol& p, const json& s, const std::string& where) {
  if (s.is_object()) return morphism_from_json(p.theory, s, p.morphisms);
  if (!s.is_string()) throw ParseError(where + ": a step is a morphism name, \"id:<objects>\" or an inline morphism");
  std::string name = s.get<std::string>();
  if (name.rfind("id:", 0) == 0) {
    ObjectList o;
    std::stringstream ss(name.substr(3));
    std::string atom;
    while (std::getline(ss, atom, ',')) o = tensor(o, p.resolve(atom));
    return p.theory.identity(o);
  }
  auto it = p.morphisms.find(name);
  if (it == p.morphisms.end()) throw TypeError(where + ": unknown morphism '" + name + "'");
  return it->second;
}

Party party_from_json(const Protocol& p, const json& j) {
  Party party;
  party.name = need_string(j, "name", "party");
  std::string where = "party '" + party.name + "'";
  party.state_in = resolve_list(p, need(j, "state_in", where), where);
  party.state_out = j.contains("state_out") ? resolve_list(p, j.at("state_out"), where) : party.state_in;
  party.session =
      SessionType::parse(need_string(j, "session", where), [&](const std::string& n) { return p.resolve(n); });
  const json& steps = need(j, "steps", where);
  if (!steps.is_array()) throw ParseError(where + ": steps must be an array");
  for (std::size_t i = 0; i < steps.size(); ++i)
    party.steps.push_back(step_from_json(p, steps[i], where + ", step " + std::to_string(i)));
  return party;
}

}  // namespace

Protocol load_protocol(const json& j) {
  if (!j.is_object()) throw ParseError("protocol must be a JSON object");
  if (need_string(j, "schema", "protocol") != "mctx/1") throw ParseError("unsupported schema (expected mctx/1)");
  Protocol p{theory_from_json(j)};
  if (j.contains("aliases")) {
    for (const auto& [name, objs] : j.at("aliases").items()) p.aliases[name] = resolve_list(p, objs, "alias " + name);
  }
  if (j.contains("morphisms")) {
    // Declared in file order so terms can mention earlier entries.
    for (const auto& [name, spec] : j.at("morphisms").items())
      p.morphisms.emplace(name, morphism_from_json(p.theory, spec, p.morphisms));
  }
  if (j.contains("parties")) {
    if (!j.at("parties").is_array()) throw ParseError("\"parties\" must be an array");
    for (const auto& pj : j.at("parties")) p.parties.push_back(party_from_json(p, pj));
  }
  if (j.contains("channels")) {
    try {
      p.channels = j.at("channels").get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw ParseError("\"channels\" must be an array of strings");
    }
  }
  if (j.contains("noise")) {
    const json& n = j.at("noise");
    p.noise = parse_rational(n.is_string() ? n.get<std::string>() : n.dump());
  }
  if (j.contains("success")) p.success = j.at("success").get<std::string>();
  if (j.contains("refactorings")) {
    for (const auto& r : j.at("refactorings"))
      p.refactorings.push_back(
          {need_string(r, "name", "refactoring"), party_from_json(p, need(r, "a", "refactoring")),
           party_from_json(p, need(r, "b", "refactoring"))});
  }
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Protocol load_protocol_file(const std::string& path) { return load_protocol(read_json_file(path)); }

Composite compose_protocol(const Protocol& p, std::optional<Rational> noise) {
  const Theory& t = p.theory;
  if (p.parties.empty()) throw TypeError("no parties");
  LensSplit combined = type_check(t, p.parties[0]);
  for (std::size_t i = 1; i < p.parties.size(); ++i) combined = interleave(t, combined, type_check(t, p.parties[i]));
  std::vector<Morphism> channels;
  for (std::size_t k = 0; k < combined.arity(); ++k) {
    std::string spec = k < p.channels.size() ? p.channels[k] : "id";
    const Hole& h = combined.holes[k];
    if (spec == "noise" || spec == "id") {
      if (h.x != h.y)
        throw TypeError("stage " + std::to_string(k + 1) + ": hole " + h.str() + " cannot take a " + spec +
                        " channel");
      channels.push_back(spec == "id" ? t.identity(h.x) : noise_channel(t, h.x, noise.value_or(p.noise)));
    } else {
      auto it = p.morphisms.find(spec);
      if (it == p.morphisms.end()) throw TypeError("stage " + std::to_string(k + 1) + ": unknown channel '" + spec + "'");
      channels.push_back(t.finite() ? t.adopt(it->second) : it->second);
    }
  }
  Morphism closed = fill_channels(t, combined, channels);
  return {combined, closed};
}

std::size_t initial_index(const Protocol& p, const std::string& spec) {
  std::map<std::string, std::string> given;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--initial entries look like party=value");
    given[item.substr(0, eq)] = item.substr(eq + 1);
  }
  const Signature& sig = p.theory.signature();
  std::size_t index = 0;
  for (const auto& party : p.parties) {
    std::size_t c = sig.carrier(party.state_in), v = 0;
    auto it = given.find(party.name);
    if (it != given.end()) {
      bool found = false;
      for (std::size_t i = 0; i < c && !found; ++i)
        if (sig.label(party.state_in, i) == it->second || (party.state_in.size() == 1 &&
                                                          sig.label(party.state_in, i) ==
                                                              party.state_in[0] + "=" + it->second)) {
          v = i;
          found = true;
        }
      if (!found) {
        try {
          std::size_t pos = 0;
          v = std::stoul(it->second, &pos);
          if (pos != it->second.size() || v >= c) throw std::out_of_range("index");
        } catch (const std::exception&) {
          throw ParseError("--initial: '" + it->second + "' is not a state of party '" + party.name + "'");
        }
      }
      given.erase(it);
    }
    index = index * c + v;
  }
  if (!given.empty()) throw ParseError("--initial: unknown party '" + given.begin()->first + "'");
  return index;
}

}  // namespace mctx

namespace mctx {

namespace {

const std::vector<std::pair<ElementKind, std::string>> kKinds = {{ElementKind::SeqUnit, "unit"},
                                                                 {ElementKind::Morph, "morphism"},
                                                                 {ElementKind::SeqSplit, "split"},
                                                                 {ElementKind::ParSplit, "par-split"},
                                                                 {ElementKind::ParUnit, "par-unit"}};
const std::vector<EqTag> kTags = {EqTag::Alpha,  EqTag::Lambda, EqTag::Rho,  EqTag::ParAlpha, EqTag::ParLambda,
                                  EqTag::ParRho, EqTag::Psi2,   EqTag::Psi0, EqTag::Phi2,     EqTag::Phi0};

json path_to_json(const PathExpr& p) {
  switch (p.kind) {
    case PathExpr::Kind::Gen: return p.gen;
    case PathExpr::Kind::Id: return {{"id", object_to_json(p.obj)}};
    case PathExpr::Kind::Seq:
    case PathExpr::Kind::Par: {
      json parts = json::array();
      for (const auto& q : p.parts) parts.push_back(path_to_json(q));
      return {{p.kind == PathExpr::Kind::Seq ? "seq" : "par", parts}};
    }
  }
  return nullptr;
}

}  // namespace

PromonoidalPresentation presentation_from_json(const json& j) {
  PromonoidalPresentation p;
  try {
    p.objects = need(j, "objects", "presentation").get<std::vector<std::string>>();
    if (j.contains("elements")) {
      for (const auto& e : j.at("elements")) {
        std::string kind = need_string(e, "kind", "element");
        auto it = std::find_if(kKinds.begin(), kKinds.end(), [&](const auto& k) { return k.second == kind; });
        if (it == kKinds.end()) throw ParseError("unknown element kind '" + kind + "'");
        p.elements.push_back({need_string(e, "name", "element"), it->first, need_string(e, "outer", "element"),
                              e.value("holes", std::vector<std::string>{})});
      }
    }
    if (j.contains("equations")) {
      for (const auto& q : j.at("equations")) {
        std::string tag = need_string(q, "tag", "equation");
        auto it = std::find_if(kTags.begin(), kTags.end(), [&](EqTag t) { return tag_name(t) == tag; });
        if (it == kTags.end()) throw ParseError("unknown equation tag '" + tag + "'");
        p.equations.push_back({*it, need(q, "elements", "equation").get<std::vector<std::string>>()});
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("presentation: ") + e.what());
  }
  return p;
}

json presentation_to_json(const PromonoidalPresentation& p) {
  json j;
  j["objects"] = p.objects;
  j["elements"] = json::array();
  for (const auto& e : p.elements) {
    auto it = std::find_if(kKinds.begin(), kKinds.end(), [&](const auto& k) { return k.first == e.kind; });
    j["elements"].push_back({{"name", e.name}, {"kind", it->second}, {"outer", e.outer}, {"holes", e.holes}});
  }
  j["equations"] = json::array();
  for (const auto& q : p.equations) j["equations"].push_back({{"tag", tag_name(q.tag)}, {"elements", q.elements}});
  return j;
}

json category_to_json(const CategoryPresentation& c) {
  json j;
  j["monoidal"] = c.monoidal;
  j["objects"] = c.objects;
  j["generators"] = json::array();
  for (const auto& g : c.generators)
    j["generators"].push_back({{"name", g.name}, {"dom", object_to_json(g.dom)}, {"cod", object_to_json(g.cod)}});
  j["relations"] = json::array();
  for (const auto& r : c.relations)
    j["relations"].push_back({{"tag", r.tag}, {"lhs", path_to_json(r.lhs)}, {"rhs", path_to_json(r.rhs)}});
  return j;
}

}  // namespace mctx
