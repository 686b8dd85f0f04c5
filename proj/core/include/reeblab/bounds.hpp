#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeblab/profile.hpp"

namespace reeblab {

/// Value of one bound, or the reason it does not apply.
struct BoundValue {
  std::string id;
  std::optional<long> value;
  std::string note;
};

/// max(0, 2(rank - corank)); dim >= 3.
BoundValue bound_rank_corank(const ManifoldProfile& p);
/// max(0, sum_{i=1}^{dim-1} rank_R H_i - 2 corank) for one ring; dim >= 3.
BoundValue bound_homology(const ManifoldProfile& p, const std::string& ring);
/// max(0, cat - 2 corank - 2); dim >= 3.
BoundValue bound_category(const ManifoldProfile& p);
/// max(0, 2(g - corank)); closed orientable 3-manifolds.
BoundValue bound_heegaard(const ManifoldProfile& p);
/// 2 g, an upper bound from an ordered function; closed orientable
/// 3-manifolds.
BoundValue upper_heegaard(const ManifoldProfile& p);
/// 2 * omega lower bound; closed orientable 3-manifolds with non-free
/// fundamental group. Uses effective_omega_lower.
BoundValue bound_omega(const ManifoldProfile& p);

/// The profile's omega lower bound, raised to 2 when the fundamental group
/// is known to be torsion-free, non-trivial and non-free.
std::optional<long> effective_omega_lower(const ManifoldProfile& p);

struct Delta2Estimate {
  struct Entry {
    std::string id;
    long value = 0;
    bool upper = false;
    std::string note;
  };

  long lower = 0;
  std::optional<long> upper;
  bool exact = false;
  /// Every bound that applied, lower and upper, in evaluation order.
  std::vector<Entry> provenance;
  /// Bounds that were skipped and why.
  std::vector<std::string> skipped;
};

/// Combines every applicable bound and classification. Lower bounds are
/// raised to the parity of the Euler characteristic; `ring` restricts the
/// homology bound to one coefficient ring when non-empty.
///
/// Throws Error when the profile is invalid or the bounds contradict each
/// other.
Delta2Estimate estimate(const ManifoldProfile& p, const std::string& ring = {});

/// Profile of the connected sum. Rank, corank, genus and homology ranks
/// add; the Euler characteristic follows chi(M1) + chi(M2) - chi(S^n);
/// category becomes unknown. The Delta_2 upper bounds add, and the lower
/// bounds add when both summands attain a common one of the rank/corank,
/// Heegaard or integral homology bounds.
///
/// Throws Error on a dimension mismatch.
ManifoldProfile connected_sum(const ManifoldProfile& p, const ManifoldProfile& q);

std::string to_string(const Delta2Estimate& e);

}  // namespace reeblab
