#pragma once

#include "bettikit/betti.hpp"
#include "bettikit/bounds.hpp"
#include "bettikit/hilbert.hpp"

#include <json.hpp>

#include <string>

namespace bettikit {

// Line-oriented ideal file:
//   ring: vars=u1,u2,v1,v2 char=0
//   gens:
//   u1*v1
//   u1*v2 - u2*v1
// Coefficients are integers; char is 0 or an odd prime. Errors carry
// line/column positions.
Ideal parse_ideal(const std::string& text);

// Canonical form: generators primitive (integer coefficients, positive
// leading coefficient over QQ; monic residues over GF(p)), terms in
// degrevlex. print . parse . print is the identity.
std::string print_ideal(const Ideal& I);
std::string print_polynomial(const Polynomial& p);

// "qq", "gf<p>" (e.g. gf32003); BadCharacteristic otherwise.
FieldSpec parse_field_name(const std::string& name);

nlohmann::json betti_table_json(const BettiTable& t);
// Staircase layout: rows are j - i, columns are i.
std::string betti_table_text(const BettiTable& t);
nlohmann::json bound_report_json(const BoundReport& r);
nlohmann::json hilbert_json(const HilbertData& h);

} // namespace bettikit
