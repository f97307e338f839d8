#pragma once

#include "svp/heights.hpp"
#include "svp/report.hpp"
#include "svp/svcore.hpp"

namespace svp {

/// Parsers for the CLI input schema. All throw Error(invalid_input) with a
/// location hint on malformed data.
cplx parse_complex_json(const ordered_json& j);
ProjPoint parse_point_json(const ordered_json& j);
Rat parse_rat_json(const ordered_json& j);
LogForm1 parse_logform1_json(const ordered_json& j);
Piece parse_piece_json(const ordered_json& j);
Chain parse_chain_json(const ordered_json& j);
DivisorDeg0 parse_divisor_json(const ordered_json& j);
Configuration parse_configuration_json(const ordered_json& j);

ordered_json logform1_to_json(const LogForm1& f);
ordered_json chain_to_json(const Chain& c);
ordered_json divisor_to_json(const DivisorDeg0& d);

/// Command-line complex literals: "2", "-0.5", "i", "1+2i", "0.3-1e-2i".
cplx parse_complex_literal(const std::string& s);

}  // namespace svp
