#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mctx/io.hpp"
#include "mctx/laws.hpp"

using namespace mctx;

namespace {

enum Exit { kOk = 0, kTypeError = 1, kLawFailure = 2, kParseError = 3 };

int cmd_check(const std::string& file, bool as_json) {
  Protocol p = load_protocol_file(file);
  if (p.parties.empty()) throw TypeError("no parties");
  json out;
  out["file"] = file;
  out["parties"] = json::array();
  std::vector<LensSplit> lenses;
  for (const auto& party : p.parties) {
    lenses.push_back(type_check(p.theory, party));
    out["parties"].push_back({{"name", party.name}, {"session", party.session.str()}});
  }
  SessionType combined = p.parties[0].session;
  for (std::size_t i = 1; i < p.parties.size(); ++i) combined = interleave_types(combined, p.parties[i].session);
  out["combined"] = combined.str();
  out["warnings"] = pairing_warnings(combined);
  out["refactorings"] = json::array();
  bool refactor_ok = true;
  for (const auto& r : p.refactorings) {
    FillVerdict v = dinaturality_refactor_check(p.theory, r.a, r.b);
    refactor_ok = refactor_ok && v.equal;
    out["refactorings"].push_back({{"name", r.name}, {"equivalent", v.equal}, {"witness", v.witness}});
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& party : p.parties) std::cout << "party " << party.name << ": " << party.session.str() << "\n";
    std::cout << "combined: " << combined.str() << "\n";
    for (const auto& w : out["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
    for (const auto& r : out["refactorings"])
      std::cout << "refactoring '" << r["name"].get<std::string>() << "': "
                << (r["equivalent"].get<bool>() ? "equivalent" : "NOT equivalent (" + r["witness"].get<std::string>() + ")")
                << "\n";
    std::cout << (refactor_ok ? "ok" : "refactoring check failed") << "\n";
  }
  return refactor_ok ? kOk : kTypeError;
}

std::optional<Rational> noise_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_rational(s);
}

int cmd_compose(const std::string& file, const std::string& out_path, const std::string& noise) {
  Protocol p = load_protocol_file(file);
  Composite c = compose_protocol(p, noise_flag(noise));
  std::string text = morphism_to_json(c.closed).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
    std::cout << "wrote " << out_path << ": " << c.closed.dom().str() << " -> " << c.closed.cod().str() << "\n";
  }
  return kOk;
}

int cmd_eval(const std::string& file, const std::string& initial, const std::string& noise, bool as_json) {
  Protocol p = load_protocol_file(file);
  if (!p.theory.finite()) throw TheoryError("eval needs a finite theory");
  Composite c = compose_protocol(p, noise_flag(noise));
  auto rows = outcome_distribution(p.theory, c.closed, initial_index(p, initial));
  const Signature& sig = p.theory.signature();
  Rational total = 0, success = 0;
  json j;
  j["outcomes"] = json::array();
  for (const auto& r : rows) {
    std::string label = sig.label(c.closed.cod(), r.state);
    total += r.probability;
    if (label == p.success) success += r.probability;
    j["outcomes"].push_back({{"state", label}, {"index", r.state}, {"probability", to_string(r.probability)}});
  }
  j["total"] = to_string(total);
  if (!p.success.empty()) j["success"] = {{"state", p.success}, {"probability", to_string(success)}};
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::size_t width = 5;
  for (const auto& o : j["outcomes"]) width = std::max(width, o["state"].get<std::string>().size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "state" << "probability\n";
  for (const auto& o : j["outcomes"])
    std::cout << std::setw(static_cast<int>(width) + 2) << o["state"].get<std::string>()
              << o["probability"].get<std::string>() << "\n";
  std::cout << "total: " << to_string(total) << "\n";
  if (!p.success.empty()) std::cout << "success (" << p.success << "): " << to_string(success) << "\n";
  return kOk;
}

int cmd_laws(LawOptions opt, const std::string& theory, bool as_json) {
  if (theory == "finfn") {
    opt.theory = TheoryKind::FinFn;
  } else if (theory == "finstoch") {
    opt.theory = TheoryKind::FinStoch;
  } else {
    throw ParseError("--theory must be finfn or finstoch");
  }
  LawReport rep = run_laws(opt);
  std::cout << (as_json ? rep.json() : rep.text());
  return rep.ok() ? kOk : kLawFailure;
}

int cmd_contour(const std::string& file, bool monoidal, bool as_json) {
  PromonoidalPresentation p = presentation_from_json(read_json_file(file));
  CategoryPresentation c = monoidal ? monoidal_contour(p) : contour(p);
  std::cout << (as_json ? category_to_json(c).dump(2) + "\n" : c.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mctx: monoidal contexts and lenses over finite theories"};
  app.require_subcommand(1);
  std::string file, out, initial, noise, theory = "finfn";
  bool as_json = false, monoidal = false;
  LawOptions lopt;

  auto* check = app.add_subcommand("check", "type-check a protocol file");
  check->add_option("file", file, "protocol JSON")->required();
  check->add_flag("--json", as_json, "machine-readable output");

  auto* compose = app.add_subcommand("compose", "compose a protocol into a closed morphism");
  compose->add_option("file", file, "protocol JSON")->required();
  compose->add_option("--out", out, "write the morphism here");
  compose->add_option("--noise", noise, "channel noise, exact rational");

  auto* eval = app.add_subcommand("eval", "outcome distribution of a protocol");
  eval->add_option("file", file, "protocol JSON")->required();
  eval->add_option("--initial", initial, "initial states, e.g. client=0,server=0");
  eval->add_option("--noise", noise, "channel noise, exact rational");
  eval->add_flag("--json", as_json, "machine-readable output");

  auto* laws = app.add_subcommand("laws", "run the law suites");
  laws->add_option("--theory", theory, "finfn or finstoch");
  laws->add_option("--max-carrier", lopt.max_carrier, "largest atom carrier");
  laws->add_option("--cases", lopt.cases, "cases per family");
  laws->add_option("--seed", lopt.seed, "random seed");
  laws->add_option("--family", lopt.families, "restrict to these families");
  laws->add_flag("--json", as_json, "machine-readable output");

  auto* cont = app.add_subcommand("contour", "emit the contour presentation");
  cont->add_option("file", file, "presentation JSON")->required();
  cont->add_flag("--monoidal", monoidal, "produoidal input");
  cont->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }
  try {
    if (*check) return cmd_check(file, as_json);
    if (*compose) return cmd_compose(file, out, noise);
    if (*eval) return cmd_eval(file, initial, noise, as_json);
    if (*laws) return cmd_laws(lopt, theory, as_json);
    if (*cont) return cmd_contour(file, monoidal, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kTypeError;
  } catch (const TheoryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTypeError;
  }
  return kOk;
}
