#include "denthex/specio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace denthex {

namespace {

using nlohmann::json;

Side side_from_tag(const std::string& tag, DentKind kind) {
  if (kind == DentKind::Alpha) {
    if (tag == "S") return Side::Bottom;
    if (tag == "NE") return Side::NorthEast;
    if (tag == "NW") return Side::NorthWest;
    throw Error(Errc::InvalidDent, "alpha side must be one of S, NE, NW: got " + tag);
  }
  if (tag == "N") return Side::Top;
  if (tag == "SE") return Side::SouthEast;
  if (tag == "SW") return Side::SouthWest;
  throw Error(Errc::InvalidDent, "beta side must be one of N, SE, SW: got " + tag);
}

std::string tag_from_side(Side s) {
  switch (s) {
    case Side::Bottom: return "S";
    case Side::NorthEast: return "NE";
    case Side::NorthWest: return "NW";
    case Side::Top: return "N";
    case Side::SouthEast: return "SE";
    case Side::SouthWest: return "SW";
  }
  throw Error(Errc::InvalidParams, "bad side");
}

long get_nonneg(const json& j, const char* key, long dflt, bool required) {
  if (!j.contains(key)) {
    if (required) throw Error(Errc::ParseError, std::string("missing field ") + key);
    return dflt;
  }
  if (!j[key].is_number_integer() || j[key].get<long>() < 0)
    throw Error(Errc::ParseError, std::string(key) + " must be a non-negative integer");
  return j[key].get<long>();
}

void read_dents(const json& j, const char* key, DentKind kind, std::vector<DentSpec>& out) {
  if (!j.contains(key)) return;
  if (!j[key].is_array()) throw Error(Errc::ParseError, std::string(key) + " must be an array");
  for (const auto& e : j[key]) {
    if (!e.is_object() || !e.contains("side") || !e.contains("pos"))
      throw Error(Errc::ParseError, "dent entries need side and pos");
    if (!e["side"].is_string() || !e["pos"].is_number_integer())
      throw Error(Errc::ParseError, "dent side must be a string, pos an integer");
    out.push_back(
        {side_from_tag(e["side"].get<std::string>(), kind), e["pos"].get<int>(), kind});
  }
}

}  // namespace

HexDentSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::ParseError, "spec must be a JSON object");
  HexDentSpec spec;
  spec.a = get_nonneg(j, "a", 0, true);
  spec.b = get_nonneg(j, "b", 0, true);
  spec.c = get_nonneg(j, "c", 0, true);
  spec.k = get_nonneg(j, "k", 0, false);
  read_dents(j, "alpha", DentKind::Alpha, spec.alphas);
  read_dents(j, "beta", DentKind::Beta, spec.betas);
  validate(spec);
  return spec;
}

HexDentSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open spec file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string spec_to_json(const HexDentSpec& spec) {
  json j;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["c"] = spec.c;
  j["k"] = spec.k;
  j["alpha"] = json::array();
  for (const auto& d : spec.alphas)
    j["alpha"].push_back({{"side", tag_from_side(d.side)}, {"pos", d.pos}});
  j["beta"] = json::array();
  for (const auto& d : spec.betas)
    j["beta"].push_back({{"side", tag_from_side(d.side)}, {"pos", d.pos}});
  return j.dump();
}

}  // namespace denthex
