#include "reeblab/profile.hpp"

#include <json.hpp>

#include "reeblab/error.hpp"

namespace reeblab {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

const char* kind_name(PrimeSummand::Kind k) {
  switch (k) {
    case PrimeSummand::Kind::s2xs1: return "s2xs1";
    case PrimeSummand::Kind::lens: return "lens";
    case PrimeSummand::Kind::other: return "other";
  }
  return "other";
}

}  // namespace

std::string to_string(const PrimeSummand& s) {
  switch (s.kind) {
    case PrimeSummand::Kind::s2xs1: return "S2xS1";
    case PrimeSummand::Kind::lens: return "L(" + std::to_string(s.p) + ",q)";
    case PrimeSummand::Kind::other: return s.label.empty() ? "other" : s.label;
  }
  return "?";
}

void validate(const ManifoldProfile& p) {
  auto fail = [&](const std::string& why) { throw Error("profile '" + p.name + "': " + why); };
  if (p.dim < 2) fail("dimension must be at least 2");
  if (p.pi1_rank && *p.pi1_rank < 0) fail("negative rank");
  if (p.pi1_corank && *p.pi1_corank < 0) fail("negative corank");
  if (p.pi1_rank && p.pi1_corank && *p.pi1_corank > *p.pi1_rank) fail("corank exceeds rank");
  if (p.dim == 3 && p.orientable && p.euler_char != 0)
    fail("a closed orientable 3-manifold has Euler characteristic 0");
  if (p.heegaard_genus) {
    if (p.dim != 3) fail("Heegaard genus is only defined in dimension 3");
    if (*p.heegaard_genus < 0) fail("negative Heegaard genus");
    if (p.pi1_rank && *p.heegaard_genus < *p.pi1_rank) fail("Heegaard genus below rank");
  }
  for (const auto& [ring, ranks] : p.homology_ranks) {
    if (ranks.size() != static_cast<std::size_t>(p.dim - 1))
      fail("homology over " + ring + " needs " + std::to_string(p.dim - 1) + " ranks");
    for (long r : ranks)
      if (r < 0) fail("negative homology rank over " + ring);
  }
  if (p.ls_category && *p.ls_category < 1) fail("category must be positive");
  if (p.omega_lower && *p.omega_lower < 1) fail("omega lower bound must be positive");
  if (p.prime_summands)
    for (const auto& s : *p.prime_summands)
      if (s.kind == PrimeSummand::Kind::lens && s.p < 2) fail("lens summand needs p >= 2");
}

std::string to_json(const ManifoldProfile& p) {
  json j;
  j["name"] = p.name;
  j["dim"] = p.dim;
  j["orientable"] = p.orientable;
  j["euler_char"] = p.euler_char;
  j["pi1_rank"] = opt(p.pi1_rank);
  j["pi1_corank"] = opt(p.pi1_corank);
  j["homology_ranks"] = p.homology_ranks;
  j["ls_category"] = opt(p.ls_category);
  j["heegaard_genus"] = opt(p.heegaard_genus);
  j["omega_lower"] = opt(p.omega_lower);
  j["pi1_traits"] = {{"torsion_free", opt(p.pi1.torsion_free)},
                     {"trivial", opt(p.pi1.trivial)},
                     {"free", opt(p.pi1.free)}};
  if (p.prime_summands) {
    j["prime_summands"] = json::array();
    for (const auto& s : *p.prime_summands) {
      json e{{"kind", kind_name(s.kind)}};
      if (s.kind == PrimeSummand::Kind::lens) e["p"] = s.p;
      if (s.kind == PrimeSummand::Kind::other) e["label"] = s.label;
      j["prime_summands"].push_back(e);
    }
  } else {
    j["prime_summands"] = nullptr;
  }
  j["delta2_upper"] = opt(p.delta2_upper);
  j["delta2_lower"] = opt(p.delta2_lower);
  j["witness"] = opt(p.witness);
  j["provenance"] = p.provenance;
  return j.dump(2);
}

ManifoldProfile profile_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid profile JSON: ") + e.what(), e.byte);
  }
  ManifoldProfile p;
  try {
    p.name = j.value("name", std::string("unnamed"));
    p.dim = j.at("dim").get<int>();
    p.orientable = j.value("orientable", true);
    p.euler_char = j.value("euler_char", 0L);
    p.pi1_rank = get_opt<long>(j, "pi1_rank");
    p.pi1_corank = get_opt<long>(j, "pi1_corank");
    if (j.contains("homology_ranks") && !j["homology_ranks"].is_null())
      p.homology_ranks = j["homology_ranks"].get<std::map<std::string, std::vector<long>>>();
    p.ls_category = get_opt<long>(j, "ls_category");
    p.heegaard_genus = get_opt<long>(j, "heegaard_genus");
    p.omega_lower = get_opt<long>(j, "omega_lower");
    if (j.contains("pi1_traits") && !j["pi1_traits"].is_null()) {
      const auto& t = j["pi1_traits"];
      p.pi1.torsion_free = get_opt<bool>(t, "torsion_free");
      p.pi1.trivial = get_opt<bool>(t, "trivial");
      p.pi1.free = get_opt<bool>(t, "free");
    }
    if (j.contains("prime_summands") && !j["prime_summands"].is_null()) {
      std::vector<PrimeSummand> ss;
      for (const auto& e : j["prime_summands"]) {
        const auto kind = e.at("kind").get<std::string>();
        if (kind == "s2xs1")
          ss.push_back(PrimeSummand::s2xs1());
        else if (kind == "lens")
          ss.push_back(PrimeSummand::lens(e.at("p").get<int>()));
        else if (kind == "other")
          ss.push_back(PrimeSummand::other(e.value("label", std::string("other"))));
        else
          throw Error("unknown summand kind '" + kind + "'");
      }
      p.prime_summands = std::move(ss);
    }
    p.delta2_upper = get_opt<long>(j, "delta2_upper");
    p.delta2_lower = get_opt<long>(j, "delta2_lower");
    p.witness = get_opt<std::string>(j, "witness");
    if (j.contains("provenance") && !j["provenance"].is_null())
      p.provenance = j["provenance"].get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed profile document: ") + e.what());
  }
  validate(p);
  return p;
}

}  // namespace reeblab
