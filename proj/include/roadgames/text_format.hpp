#pragma once

#include <string>
#include <string_view>

#include "roadgames/bayesian.hpp"
#include "roadgames/normal_form.hpp"

namespace roadgames {

// Line-oriented game description format. '#' starts a comment, blank lines
// are ignored. Payoff entries are integers or fractions "a/b".
//
//   rows Y W C
//   cols G S
//   payoffs
//   8,15 6,1
//   -400,-400 15,7
//   -500,-200 20,7
//
// Serialization is canonical, so parse(serialize(parse(text))) equals
// parse(text) exactly.
NormalFormGame parse_normal_form(std::string_view text);
std::string serialize_normal_form(const NormalFormGame& game);

// Bayesian games add a header before one embedded block per type:
//
//   types AV HUMAN
//   prior 1/2 1/2
//   observed both
//   type AV
//   <normal-form block>
//   type HUMAN
//   <normal-form block>
//
// `observed` is one of none|row|col|both.
BayesianGame parse_bayesian_game(std::string_view text);
std::string serialize_bayesian_game(const BayesianGame& game);

std::string read_text_file(const std::string& path);  // ParseError when unreadable

}  // namespace roadgames
