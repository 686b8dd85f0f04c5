#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reeblab/presentation.hpp"

namespace reeblab {

/// The least Omega >= 1 such that relator i (1-based) is a word in the first
/// Omega + i - 1 generators for every i <= min(n - Omega, m), computed for
/// the presentation's own generator and relator order. Support is taken of
/// the freely reduced relator.
///
/// Throws Error for a presentation without relators.
std::size_t omega_fixed(const Presentation& p);

struct OmegaSearchOptions {
  /// Search nodes allowed for the exact search before falling back to
  /// seeded random restarts.
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0x5eed'0f'0e'9a;
  std::size_t restarts = 2000;
};

struct OmegaSearchResult {
  std::size_t omega = 0;
  /// True when `omega` is proven minimal over all generator and relator
  /// orders.
  bool certified = false;
  /// Proven lower bound (equals omega when certified).
  std::size_t lower_bound = 0;
  /// Witness: new position k holds old generator / relator index.
  std::vector<std::size_t> generator_order;
  std::vector<std::size_t> relator_order;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::string note;
};

/// Minimises omega_fixed over reorderings of generators and relators.
///
/// For a fixed generator order the best relator order sorts relators by
/// the position of their last generator, so only generator orders are
/// searched. Feasibility of a candidate Omega depends only on the set of
/// already placed generators, which makes a memoised subset search exact;
/// it runs within `budget` nodes, after which random restarts give a
/// non-certified upper bound.
OmegaSearchResult omega_search(const Presentation& p, const OmegaSearchOptions& options = {});

}  // namespace reeblab
