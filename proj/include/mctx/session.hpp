#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mctx/lens.hpp"

namespace mctx {

struct SessionType {
  std::vector<std::vector<Polarized>> stages;

  // "!Msg < ?Msg < !Msg": stages split by '<', tensor within a stage by '*'.
  // `resolve` maps a name to its object (an atom or an alias).
  static SessionType parse(const std::string& text, const std::function<ObjectList(const std::string&)>& resolve);
  Hole stage_hole(std::size_t k) const;
  std::string str() const;  // "!Msg ◁ ?Msg ◁ !Msg"
};

// Stagewise tensor, the type reached after the laxators.
SessionType interleave_types(const SessionType& a, const SessionType& b);
// Stages whose fused hole has no matching send/get pair.
std::vector<std::string> pairing_warnings(const SessionType& combined);

struct Party {
  std::string name;
  ObjectList state_in, state_out;
  SessionType session;
  std::vector<Morphism> steps;  // stages + 1 of them
};

// Infers the residuals and assembles the n-stage lens; errors name the stage.
LensSplit type_check(const Theory& t, const Party& p);
LensSplit interleave(const Theory& t, const LensSplit& a, const LensSplit& b);
Morphism fill_channels(const Theory& t, const LensSplit& combined, const std::vector<Morphism>& channels);

struct Outcome {
  std::size_t state;
  Rational probability;
};
std::vector<Outcome> outcome_distribution(const Theory& t, const Morphism& m, const std::vector<Rational>& initial);
std::vector<Outcome> outcome_distribution(const Theory& t, const Morphism& m, std::size_t initial_state);

FillVerdict dinaturality_refactor_check(const Theory& t, const Party& a, const Party& b);

// "!p ∗ ?p" noise: with probability p the message is replaced by all zeros.
Morphism noise_channel(const Theory& t, const ObjectList& msg, const Rational& p);

}  // namespace mctx
