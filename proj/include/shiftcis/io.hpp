#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "shiftcis/exactset.hpp"
#include "shiftcis/poly.hpp"
#include "shiftcis/splinekernel.hpp"

namespace shiftcis {

using json = nlohmann::json;

// Throws ParseError with "line L, column C" on malformed text.
json parse_json_text(std::string_view text, const std::string& source = "<input>");
std::string read_file(const std::string& path);

// {"intervals":[{"lo":"-1/2","hi":"1/2","lo_closed":true,"hi_closed":false}, ...]}
std::vector<IntervalQ> intervals_from_json(const json& j);
json intervals_to_json(const std::vector<IntervalQ>& ivs);

json interval_to_json(const IntervalQ& iv);
json region_to_json(const AlphaRegion& r);
AlphaRegion region_from_json(const json& j);
json congruence_to_json(const CongruenceData& cd);

json poly_to_json(const PolyR& p);
PolyR poly_from_json(const json& j);
json zero_split_to_json(const ZeroSplit& z);

// FNV-1a, 64 bit, as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace shiftcis
