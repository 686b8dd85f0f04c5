#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reeblab {

/// One summand of a prime decomposition. Lens spaces are L(p,q) with
/// p >= 2; S^3 and S^2 x S^1 are not counted as lens spaces.
struct PrimeSummand {
  enum class Kind { s2xs1, lens, other };
  Kind kind = Kind::other;
  int p = 0;          // lens order
  std::string label;  // free text for `other`

  static PrimeSummand s2xs1() { return {Kind::s2xs1, 0, "S2xS1"}; }
  static PrimeSummand lens(int p) { return {Kind::lens, p, "L" + std::to_string(p)}; }
  static PrimeSummand other(std::string label) { return {Kind::other, 0, std::move(label)}; }

  friend bool operator==(const PrimeSummand&, const PrimeSummand&) = default;
};

/// Properties of the fundamental group, each possibly unknown.
struct GroupTraits {
  std::optional<bool> torsion_free;
  std::optional<bool> trivial;
  std::optional<bool> free;

  friend bool operator==(const GroupTraits&, const GroupTraits&) = default;
};

/// Invariants of a closed manifold. Unknown values are empty optionals;
/// corank, category and Heegaard genus are inputs and never computed.
struct ManifoldProfile {
  std::string name;
  int dim = 3;
  bool orientable = true;
  long euler_char = 0;
  std::optional<long> pi1_rank;
  std::optional<long> pi1_corank;
  /// ring name (`Z`, `Q`, `F2`, ...) -> rank of H_i for i = 1 .. dim-1.
  std::map<std::string, std::vector<long>> homology_ranks;
  std::optional<long> ls_category;
  std::optional<long> heegaard_genus;
  std::optional<long> omega_lower;
  GroupTraits pi1;
  std::optional<std::vector<PrimeSummand>> prime_summands;

  /// Upper bound for Delta_2 backed by a known function, and a lower bound
  /// established externally (e.g. additivity under connected sum).
  std::optional<long> delta2_upper;
  std::optional<long> delta2_lower;
  /// Handle-sequence builder realising the construction, e.g.
  /// `circle-bundle:1,1` or `ordered:2 # s2xs1`.
  std::optional<std::string> witness;

  /// field name -> provenance tag (`literature`, `torsion-free rule`,
  /// `presentation-computed`, `construction`, `additivity`, `input`, ...).
  std::map<std::string, std::string> provenance;

  friend bool operator==(const ManifoldProfile&, const ManifoldProfile&) = default;
};

/// Checks corank <= rank, euler_char == 0 for closed orientable
/// 3-manifolds, genus >= rank, homology vectors of length dim-1, and
/// lens orders >= 2. Throws Error on the first violation.
void validate(const ManifoldProfile& p);

std::string to_json(const ManifoldProfile& p);
/// Throws ParseError on malformed JSON, Error on invalid content.
ManifoldProfile profile_from_json(std::string_view text);

std::string to_string(const PrimeSummand& s);

}  // namespace reeblab
