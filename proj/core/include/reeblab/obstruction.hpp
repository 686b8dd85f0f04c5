#pragma once

#include <string>
#include <vector>

#include "reeblab/profile.hpp"
#include "reeblab/reeb_graph.hpp"

namespace reeblab {

struct ObstructionVerdict {
  enum class Kind { obstructed, not_obstructed, insufficient_data };
  Kind kind = Kind::insufficient_data;
  /// Checks that fired (obstructed) or passed.
  std::vector<std::string> reasons;
  /// Profile fields needed for checks that could not run.
  std::vector<std::string> missing;
};

/// Decides whether `g` can be the Reeb graph of a simple Morse function on
/// a manifold with profile `p`, as far as the known invariants tell. It is
/// obstructed when its degree-2 count is below the certified lower bound,
/// its cycle rank exceeds the corank, or its degree-2 count has the wrong
/// parity. A graph that passes every check is not claimed to be realizable.
///
/// Throws Error when the graph has a vertex of degree above 3 or a
/// different dimension than the profile.
ObstructionVerdict realization_obstruction(const ReebGraph& g, const ManifoldProfile& p);

std::string to_string(ObstructionVerdict::Kind k);

}  // namespace reeblab
