#include "shiftcis/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shiftcis/errors.hpp"

namespace shiftcis {

json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": malformed JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(std::string("field '") + key + "' must be a \"p/q\" string or an integer");
}

bool flag_field(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ParseError(std::string("field '") + key + "' must be boolean");
  return j.at(key).get<bool>();
}

}  // namespace

std::vector<IntervalQ> intervals_from_json(const json& j) {
  if (!j.is_object() || !j.contains("intervals") || !j.at("intervals").is_array())
    throw ParseError("expected an object with an \"intervals\" array");
  std::vector<IntervalQ> out;
  std::size_t i = 0;
  for (const auto& e : j.at("intervals")) {
    if (!e.is_object()) throw ParseError("intervals[" + std::to_string(i) + "] is not an object");
    try {
      out.push_back(IntervalQ{rational_field(e, "lo"), rational_field(e, "hi"), flag_field(e, "lo_closed", true),
                              flag_field(e, "hi_closed", false)});
    } catch (const ParseError& err) {
      throw ParseError("intervals[" + std::to_string(i) + "]: " + err.what());
    }
    ++i;
  }
  return out;
}

json interval_to_json(const IntervalQ& iv) {
  return json{{"lo", format_rational(iv.lo)},
              {"hi", format_rational(iv.hi)},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}};
}

json intervals_to_json(const std::vector<IntervalQ>& ivs) {
  json arr = json::array();
  for (const auto& iv : ivs) arr.push_back(interval_to_json(iv));
  return json{{"intervals", arr}};
}

json region_to_json(const AlphaRegion& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json e = interval_to_json(c.interval);
    e["index"] = c.index;
    cells.push_back(e);
  }
  json excluded = json::array();
  for (const auto& x : r.excluded) excluded.push_back(format_rational(x));
  return json{{"cells", cells}, {"excluded", excluded}, {"A", r.A}};
}

AlphaRegion region_from_json(const json& j) {
  AlphaRegion r;
  for (const auto& c : j.at("cells")) {
    IntervalQ iv{rational_field(c, "lo"), rational_field(c, "hi"), flag_field(c, "lo_closed", true),
                 flag_field(c, "hi_closed", false)};
    r.cells.push_back({iv, c.at("index").get<long long>()});
  }
  for (const auto& x : j.at("excluded")) r.excluded.push_back(parse_rational(x.get<std::string>()));
  if (j.contains("A")) r.A = j.at("A").get<std::vector<long long>>();
  return r;
}

json congruence_to_json(const CongruenceData& cd) {
  json F = json::array();
  for (const auto& f : cd.F) F.push_back(interval_to_json(f));
  json E = json::array();
  for (const auto& e : cd.E) E.push_back(interval_to_json(e));
  json a = json::array(), s = json::array();
  for (const auto& x : cd.a) a.push_back(format_rational(x));
  for (const auto& x : cd.s) s.push_back(format_rational(x));
  json G = json::array();
  for (long long d : cd.g_denominators) G.push_back({{"denominator", d}});
  return json{{"L", cd.L},   {"E", E},     {"F", F},         {"a", a},     {"lambda", cd.lambda},
              {"mu", cd.mu}, {"omega", cd.omega}, {"rho", cd.rho}, {"nu", cd.nu}, {"lambda01", cd.lambda01},
              {"s", s},      {"G", G}};
}

json poly_to_json(const PolyR& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(format_rational(x));
  return json{{"coeffs", c}};
}

PolyR poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("expected an object with a \"coeffs\" array");
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_string())
      c.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      c.push_back(Rational(x.get<long long>()));
    else
      throw ParseError("polynomial coefficients must be \"p/q\" strings or integers");
  }
  return PolyR(std::move(c));
}

json zero_split_to_json(const ZeroSplit& z) {
  json roots = json::array();
  for (auto r : z.roots) roots.push_back({r.real(), r.imag()});
  return json{{"inside", z.inside},
              {"on_circle", z.on_circle},
              {"outside", z.outside},
              {"exact", z.exact},
              {"roots", roots}};
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace shiftcis
