#pragma once

#include <cstddef>

#include "reeblab/conjugates.hpp"
#include "reeblab/presentation.hpp"

namespace reeblab {

/// Relator `relator` must be a single letter x^{+-1}. Returns the
/// presentation with x and that relator deleted and x set to the identity
/// in every other relator. Throws Error otherwise.
Presentation remove_trivial_generator(const Presentation& p, std::size_t relator);

/// Certificate that swapping relator i for a replacement preserves the
/// normal closure.
struct ReplacementWitness {
  /// Expresses the replacement through the relators of the original
  /// presentation.
  ConjugateProduct forward;
  /// Expresses the old relator through the relators after replacement.
  ConjugateProduct backward;
};

/// Replaces relator i by `replacement` after evaluating both sides of the
/// witness exactly. A failed check throws Error and leaves `p` untouched.
Presentation replace_relator(const Presentation& p, std::size_t i, const Word& replacement,
                             const ReplacementWitness& witness);

}  // namespace reeblab
