#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reeblab/word.hpp"

namespace reeblab {

/// Finite presentation <x_1..x_n | r_1..r_m>. Relators are stored freely
/// reduced; both the generator order and the relator order matter.
class Presentation {
 public:
  Presentation() = default;
  /// Throws Error when a relator uses a generator outside the alphabet.
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const Word& relator(std::size_t i) const { return relators_.at(i); }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

/// n - m.
long deficiency(const Presentation& p);

/// Reorders generators (new position k holds old generator gen_order[k])
/// and relators (new position k holds old relator rel_order[k]).
Presentation reorder(const Presentation& p, const std::vector<std::size_t>& gen_order,
                     const std::vector<std::size_t>& rel_order);

/// True when both presentations have the same generators and, position by
/// position, relators that are conjugate (cyclic permutations of each
/// other after cyclic reduction).
bool relators_equivalent(const Presentation& a, const Presentation& b);

/// Text form `gens: a, b, h ; rels: [a,h], [b,h], [a,b] h^-1`.
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

}  // namespace reeblab
