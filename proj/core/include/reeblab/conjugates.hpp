#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "reeblab/word.hpp"

namespace reeblab {

/// One factor t * r^exp * t^-1 of a product of conjugates, where r is the
/// relator at index `relator` of some relator list.
struct ConjugateFactor {
  std::size_t relator = 0;
  int exp = 1;  // +1 or -1
  Word conjugator;

  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

/// A product of conjugates of relators: a certificate that its value lies
/// in the normal closure of those relators.
using ConjugateProduct = std::vector<ConjugateFactor>;

/// Exact free-group value of the product. Throws Error on an out-of-range
/// relator index or an exponent other than +-1.
Word evaluate(const ConjugateProduct& product, std::span<const Word> relators);

std::string to_string(const ConjugateProduct& product, const Alphabet& alphabet);

}  // namespace reeblab
