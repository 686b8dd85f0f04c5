#include "oracles.hpp"
#include "reeblab/error.hpp"
#include "test_util.hpp"

using namespace reeblab;
using test::s;
using test::w;

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(Word{{0, 1}, {0, -1}}).empty());
  CHECK(s(reduce(Word{{0, 1}, {1, 1}, {1, -1}, {0, 1}})) == "a^2");
  const Word comm{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
  CHECK(reduce(comm) == comm);
}

TEST_CASE("cyclic_reduce splits off the conjugating layer") {
  auto cr = cyclic_reduce(w("a b a^-1"));
  CHECK(s(cr.conjugator) == "a");
  CHECK(s(cr.core) == "b");

  cr = cyclic_reduce(w("a b a b"));
  CHECK(cr.conjugator.empty());
  CHECK(s(cr.core) == "a b a b");

  cr = cyclic_reduce(w("a^-1 [a,b] a"));
  CHECK(cr.conjugator.empty());
  CHECK(cr.core == w("b a^-1 b^-1 a"));
  CHECK(is_cyclically_reduced(cr.core));

  CHECK(cyclic_reduce(w("a b b^-1 a^-1")).core.empty());
}

TEST_CASE("support of the reduced form") {
  CHECK(support(w("[a,b]")) == std::set<std::size_t>{0, 1});
  CHECK(support(Word{{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == std::set<std::size_t>{0});
  CHECK(support(Word{}).empty());
}

TEST_CASE("compose, commutators and inverses") {
  CHECK(s(commutator(w("a"), w("b"))) == "a b a^-1 b^-1");
  CHECK(s(inverse(w("a b"))) == "b^-1 a^-1");
  const Word h = commutator(w("a"), w("b")) * commutator(w("c"), w("d"));
  CHECK(h.size() == 8);
  const std::vector<Word> parts{w("a b"), w("b^-1 c")};
  CHECK(compose(test::abc(), parts) == w("a c"));
  const std::vector<Word> foreign{Word::generator(7)};
  CHECK_THROWS_AS(compose(test::abc(), foreign), Error);
}

TEST_CASE("parser covers the word grammar") {
  Alphabet a;
  CHECK(s(parse_word("(a b)^2", a, UnknownGenerators::append)) == "a b a b");
  CHECK(a.names() == std::vector<std::string>{"a", "b"});
  CHECK(parse_word("h^-3", a, UnknownGenerators::append).size() == 3);
  CHECK(parse_word("[a1,h]", a, UnknownGenerators::append).size() == 4);
  CHECK(parse_word("1", a).empty());
  CHECK_THROWS_AS(parse_word("a ^", a), ParseError);
  CHECK_THROWS_AS(parse_word("[a,b", a), ParseError);
  CHECK_THROWS_AS(parse_word("zz", test::abc()), Error);
}

TEST_CASE("reduce agrees with a stack-based reduction", "[property]") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Word x = test::random_word(rng, 3, 20);
    const Word r = reduce(x);
    REQUIRE(oracle::encode(r) == oracle::free_reduce(oracle::encode(x)));
    REQUIRE(reduce(r) == r);
    REQUIRE(r.size() <= x.size());
    const auto cr = cyclic_reduce(x);
    REQUIRE(is_cyclically_reduced(cr.core));
    REQUIRE(conjugate(cr.core, cr.conjugator) == r);
    for (auto g : support(cr.core)) REQUIRE(support(r).contains(g));
  }
}

TEST_CASE("group axioms on random triples", "[property]") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const Word u = reduce(test::random_word(rng, 3, 8));
    const Word v = reduce(test::random_word(rng, 3, 8));
    const Word x = reduce(test::random_word(rng, 3, 8));
    REQUIRE((u * v) * x == u * (v * x));
    REQUIRE((u * inverse(u)).empty());
    REQUIRE(inverse(inverse(u)) == u);
    REQUIRE(inverse(commutator(u, v)) == commutator(v, u));
    REQUIRE(power(u, 3) == u * u * u);
    REQUIRE(power(u, -2) == inverse(u * u));
  }
}

TEST_CASE("shortlex order and hashing") {
  CHECK(w("a") < w("a^-1"));
  CHECK(w("a^-1") < w("b"));
  CHECK(w("b") < w("a a"));
  CHECK(std::hash<Word>{}(w("a b")) == std::hash<Word>{}(reduce(Word{{0, 1}, {2, 1}, {2, -1}, {1, 1}})));
}

TEST_CASE("conjugacy in the free group") {
  CHECK(are_conjugate(w("a b"), w("b a")));
  CHECK(are_conjugate(w("[a,b]"), w("b [a,b] b^-1")));
  CHECK_FALSE(are_conjugate(w("a b"), w("a b^-1")));
}
