#include "mctx/session.hpp"

#include <cctype>

namespace mctx {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string stage_str(const std::vector<Polarized>& stage) {
  std::string out;
  for (std::size_t i = 0; i < stage.size(); ++i) {
    if (i) out += " ⊗ ";
    out += stage[i].pol == Polarized::Pol::Send ? "!" : "?";
    out += stage[i].label.empty() ? stage[i].obj.str() : stage[i].label;
  }
  return out;
}

}  // namespace

SessionType SessionType::parse(const std::string& text,
                               const std::function<ObjectList(const std::string&)>& resolve) {
  SessionType st;
  for (const auto& raw_stage : split(text, '<')) {
    std::vector<Polarized> stage;
    for (const auto& raw : split(raw_stage, '*')) {
      std::string item = trim(raw);
      if (item.size() < 2 || (item[0] != '!' && item[0] != '?'))
        throw ParseError("session type '" + text + "': expected !Name or ?Name, got '" + item + "'");
      std::string name = trim(item.substr(1));
      ObjectList obj = name == "I" ? ObjectList{} : resolve(name);
      stage.push_back({item[0] == '!' ? Polarized::Pol::Send : Polarized::Pol::Get, obj, name});
    }
    st.stages.push_back(std::move(stage));
  }
  return st;
}

Hole SessionType::stage_hole(std::size_t k) const {
  Hole h;
  for (const auto& p : stages.at(k)) {
    Hole d = p.denote();
    h.x = tensor(h.x, d.x);
    h.y = tensor(h.y, d.y);
  }
  return h;
}

std::string SessionType::str() const {
  std::string out;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (k) out += " ◁ ";
    bool wrap = stages.size() > 1 && stages[k].size() > 1;
    out += wrap ? "(" + stage_str(stages[k]) + ")" : stage_str(stages[k]);
  }
  return out;
}

SessionType interleave_types(const SessionType& a, const SessionType& b) {
  if (a.stages.size() != b.stages.size()) throw TypeError("interleave: stage counts differ");
  SessionType out;
  for (std::size_t k = 0; k < a.stages.size(); ++k) {
    auto stage = a.stages[k];
    stage.insert(stage.end(), b.stages[k].begin(), b.stages[k].end());
    out.stages.push_back(std::move(stage));
  }
  return out;
}

std::vector<std::string> pairing_warnings(const SessionType& combined) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < combined.stages.size(); ++k) {
    bool paired = false;
    for (const auto& s : combined.stages[k])
      for (const auto& g : combined.stages[k])
        paired = paired || (s.pol == Polarized::Pol::Send && g.pol == Polarized::Pol::Get && s.obj == g.obj);
    if (!paired) out.push_back("stage " + std::to_string(k + 1) + " has no send/get pairing");
  }
  return out;
}

LensSplit type_check(const Theory& t, const Party& p) {
  const auto& st = p.session;
  std::size_t n = st.stages.size();
  auto where = [&](std::size_t stage) { return "party '" + p.name + "', stage " + std::to_string(stage); };
  if (n == 0) throw TypeError("party '" + p.name + "': empty session type");
  if (p.steps.size() != n + 1)
    throw TypeError("party '" + p.name + "': " + std::to_string(n) + " stages need " + std::to_string(n + 1) +
                    " steps, got " + std::to_string(p.steps.size()));
  std::vector<ObjectList> res;
  std::vector<Hole> holes;
  for (std::size_t k = 0; k < n; ++k) holes.push_back(st.stage_hole(k));
  if (p.steps[0].dom() != p.state_in)
    throw TypeError(where(1) + ": first step starts at " + p.steps[0].dom().str() + ", state is " + p.state_in.str());
  for (std::size_t k = 0; k < n; ++k) {
    const Morphism& out = p.steps[k];
    if (!out.cod().has_suffix(holes[k].x))
      throw TypeError(where(k + 1) + ": step " + std::to_string(k) + " produces " + out.cod().str() +
                      ", which does not end in the sent " + holes[k].x.str());
    res.push_back(out.cod().slice(0, out.cod().size() - holes[k].x.size()));
    ObjectList want = tensor(res.back(), holes[k].y);
    if (p.steps[k + 1].dom() != want)
      throw TypeError(where(k + 1) + ": step " + std::to_string(k + 1) + " takes " + p.steps[k + 1].dom().str() +
                      ", but residual and received message give " + want.str());
  }
  if (p.steps[n].cod() != p.state_out)
    throw TypeError(where(n) + ": last step yields " + p.steps[n].cod().str() + ", final state is " +
                    p.state_out.str());
  std::vector<Morphism> steps;
  for (const auto& s : p.steps) steps.push_back(t.adopt(s));
  return LensSplit::make(steps, res, holes);
}

LensSplit interleave(const Theory& t, const LensSplit& a, const LensSplit& b) {
  if (a.arity() != b.arity())
    throw TypeError("interleave: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()) + " stages");
  Lens1 outer = lens_identity(t, tensor(a.outer().x, b.outer().x), tensor(a.outer().y, b.outer().y));
  return lens_laxator(t, LensParSplit::make(outer, a.outer(), b.outer()), a, b);
}

Morphism fill_channels(const Theory& t, const LensSplit& combined, const std::vector<Morphism>& channels) {
  if (channels.size() != combined.arity())
    throw TypeError("fill_channels: " + std::to_string(combined.arity()) + " stages, " +
                    std::to_string(channels.size()) + " channels");
  for (std::size_t k = 0; k < channels.size(); ++k)
    if (!(channels[k].type() == combined.holes[k]))
      throw TypeError("channel " + std::to_string(k + 1) + " has type " + channels[k].type().str() + ", stage needs " +
                      combined.holes[k].str());
  return fill(t, combined.word(), channels);
}

std::vector<Outcome> outcome_distribution(const Theory& t, const Morphism& m, const std::vector<Rational>& initial) {
  Morphism mm = t.adopt(m);
  std::size_t rows = t.carrier(m.dom()), cols = t.carrier(m.cod());
  if (initial.size() != rows) throw TypeError("initial distribution has the wrong length");
  std::vector<Rational> out(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (initial[r] == 0) continue;
    if (mm.backend() == Backend::FinFn) {
      out[mm.table()[r]] += initial[r];
    } else {
      for (std::size_t c = 0; c < cols; ++c) out[c] += initial[r] * mm.matrix().at(r, c);
    }
  }
  std::vector<Outcome> res;
  for (std::size_t c = 0; c < cols; ++c)
    if (out[c] != 0) res.push_back({c, out[c]});
  return res;
}

std::vector<Outcome> outcome_distribution(const Theory& t, const Morphism& m, std::size_t initial_state) {
  std::vector<Rational> init(t.carrier(m.dom()));
  init.at(initial_state) = 1;
  return outcome_distribution(t, m, init);
}

FillVerdict dinaturality_refactor_check(const Theory& t, const Party& a, const Party& b) {
  LensSplit la = type_check(t, a), lb = type_check(t, b);
  return fill_equal(t, la.word(), lb.word());
}

Morphism noise_channel(const Theory& t, const ObjectList& msg, const Rational& p) {
  if (p < 0 || p > 1) throw TypeError("noise probability must lie in [0, 1]");
  std::size_t c = t.carrier(msg);
  if (t.kind() == TheoryKind::FinFn) {
    if (p == 0) return t.identity(msg);
    if (p == 1) return t.function(msg, msg, [](std::size_t) { return 0; });
    throw TheoryError("fractional noise needs a finstoch theory");
  }
  StochMatrix m{c, c, std::vector<Rational>(c * c)};
  for (std::size_t r = 0; r < c; ++r) {
    m.at(r, 0) += p;
    m.at(r, r) += 1 - p;
  }
  return t.matrix(msg, msg, std::move(m));
}

}  // namespace mctx
