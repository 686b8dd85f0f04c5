#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reeblab/presentation.hpp"
#include "reeblab/smith.hpp"

namespace reeblab {

/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every d >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// m x n matrix of relator exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants abelianize(const Presentation& p);

/// `Z^2 + Z/6`; the trivial group prints as `0`.
std::string to_string(const AbelianInvariants& a);

}  // namespace reeblab
