#include "reeblab/tietze.hpp"

#include "reeblab/error.hpp"

namespace reeblab {

Presentation remove_trivial_generator(const Presentation& p, std::size_t relator) {
  if (relator >= p.relator_count()) throw Error("relator index out of range");
  const auto& r = p.relator(relator);
  if (r.size() != 1)
    throw Error("relator " + std::to_string(relator + 1) + " is not a single generator letter");
  const auto dead = r[0].gen;

  std::vector<std::string> names;
  for (std::size_t g = 0; g < p.rank(); ++g)
    if (g != dead) names.push_back(p.alphabet().name(g));

  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i == relator) continue;
    std::vector<Letter> ls;
    for (auto l : p.relator(i)) {
      if (l.gen == dead) continue;
      ls.push_back(Letter{l.gen > dead ? l.gen - 1 : l.gen, l.exp});
    }
    rels.emplace_back(std::move(ls));
  }
  return Presentation(Alphabet(std::move(names)), std::move(rels));
}

Presentation replace_relator(const Presentation& p, std::size_t i, const Word& replacement,
                             const ReplacementWitness& witness) {
  if (i >= p.relator_count()) throw Error("relator index out of range");
  auto target = reduce(replacement);
  if (target.min_rank() > p.rank()) throw Error("replacement uses a generator outside the alphabet");

  if (evaluate(witness.forward, p.relators()) != target)
    throw Error("witness rejected: forward product does not evaluate to the replacement");

  auto rels = p.relators();
  rels[i] = target;
  if (evaluate(witness.backward, rels) != p.relator(i))
    throw Error("witness rejected: backward product does not evaluate to the old relator");

  return Presentation(p.alphabet(), std::move(rels));
}

}  // namespace reeblab
