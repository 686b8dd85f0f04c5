#include "reeblab/presentation_builders.hpp"

#include "reeblab/error.hpp"
#include "reeblab/word_parse.hpp"

namespace reeblab {
namespace {

Alphabet symplectic_alphabet(int g, bool with_h) {
  Alphabet a;
  for (int i = 1; i <= g; ++i) {
    a.add("a" + std::to_string(i));
    a.add("b" + std::to_string(i));
  }
  if (with_h) a.add("h");
  return a;
}

Word product_of_commutators(int g) {
  Word h;
  for (int i = 0; i < g; ++i)
    h = h * commutator(Word::generator(2 * static_cast<std::size_t>(i)),
                       Word::generator(2 * static_cast<std::size_t>(i) + 1));
  return h;
}

void require_genus(int g) {
  if (g < 1) throw Error("genus must be at least 1");
}

}  // namespace

Presentation surface_group(int g) {
  require_genus(g);
  return Presentation(symplectic_alphabet(g, false), {product_of_commutators(g)});
}

Presentation circle_bundle(int g, int e) {
  require_genus(g);
  auto alphabet = symplectic_alphabet(g, true);
  auto h = Word::generator(2 * static_cast<std::size_t>(g));
  std::vector<Word> rels;
  for (int i = 0; i < 2 * g; ++i) rels.push_back(commutator(Word::generator(static_cast<std::size_t>(i)), h));
  rels.push_back(product_of_commutators(g) * power(h, -e));
  return Presentation(std::move(alphabet), std::move(rels));
}

Presentation circle_bundle_rank2g(int g, int e) {
  require_genus(g);
  if (e != 1 && e != -1) throw Error("the rank-2g presentation needs e = +1 or -1");
  auto he = power(product_of_commutators(g), e);
  std::vector<Word> rels;
  for (int i = 0; i < 2 * g; ++i) rels.push_back(commutator(Word::generator(static_cast<std::size_t>(i)), he));
  return Presentation(symplectic_alphabet(g, false), std::move(rels));
}

Presentation lens(int p) {
  if (p < 0) throw Error("lens(p) needs p >= 0");
  return Presentation(Alphabet({"x"}), {Word::generator(0, p)});
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  Alphabet alphabet = p.alphabet();
  for (const auto& name : q.alphabet().names()) {
    std::string candidate = name;
    for (int k = 2; alphabet.find(candidate); ++k) candidate = name + "_" + std::to_string(k);
    alphabet.add(candidate);
  }
  auto shift = static_cast<std::uint32_t>(p.rank());
  std::vector<Word> rels = p.relators();
  for (const auto& r : q.relators()) {
    std::vector<Letter> ls;
    for (auto l : r) ls.push_back(Letter{l.gen + shift, l.exp});
    rels.emplace_back(std::move(ls));
  }
  return Presentation(std::move(alphabet), std::move(rels));
}

Presentation heegaard_presentation(int genus, const std::vector<std::string>& attaching_words,
                                   std::vector<std::string> generator_names) {
  if (genus < 0) throw Error("genus must be non-negative");
  if (generator_names.empty())
    generator_names = Alphabet::numbered("x", static_cast<std::size_t>(genus)).names();
  if (generator_names.size() != static_cast<std::size_t>(genus))
    throw Error("need one generator name per handle");
  Alphabet alphabet(std::move(generator_names));
  std::vector<Word> rels;
  for (const auto& w : attaching_words) rels.push_back(parse_word(w, alphabet));
  return Presentation(std::move(alphabet), std::move(rels));
}

CircleBundleDiagram circle_bundle_diagram(int g, int e) {
  require_genus(g);
  CircleBundleDiagram d;
  std::string prod;
  for (int i = 1; i <= g; ++i) {
    auto a = "a" + std::to_string(i);
    auto b = "b" + std::to_string(i);
    d.generators.push_back(a);
    d.generators.push_back(b);
    d.alpha.push_back("[" + a + ",h]");
    d.beta.push_back("[" + b + ",h]");
    prod += " [" + a + "," + b + "]";
  }
  d.generators.push_back("h");
  d.gamma = "h^" + std::to_string(-e) + prod;
  return d;
}

Presentation circle_bundle_handle_ordered(int g, int e) {
  auto d = circle_bundle_diagram(g, e);
  std::vector<std::string> names{"h"};
  for (int i = 1; i <= g; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= g; ++i) names.push_back("b" + std::to_string(i));
  std::vector<std::string> words = d.alpha;
  words.push_back(d.gamma);
  words.insert(words.end(), d.beta.begin(), d.beta.end());
  return heegaard_presentation(2 * g + 1, words, std::move(names));
}

}  // namespace reeblab
