#include "oracles.hpp"
#include "reeblab/error.hpp"
#include "reeblab/nielsen.hpp"
#include "test_util.hpp"

using namespace reeblab;
using test::w;

namespace {

WordTuple T(std::size_t rank, std::initializer_list<const char*> words) {
  WordTuple t{rank, {}};
  for (auto x : words) t.entries.push_back(w(x));
  return t;
}

std::size_t total(const WordTuple& t) {
  std::size_t n = 0;
  for (const auto& e : t.entries) n += e.size();
  return n;
}

NielsenMove random_move(std::mt19937_64& rng, std::size_t n) {
  NielsenMove m;
  m.kind = static_cast<NielsenMove::Kind>(rng() % 4);
  m.target = rng() % n;
  do m.other = rng() % n;
  while (m.other == m.target);
  m.exp = rng() % 2 ? 1 : -1;
  return m;
}

WordTuple identity_tuple(std::size_t n) {
  WordTuple t{n, {}};
  for (std::size_t i = 0; i < n; ++i) t.entries.push_back(Word::generator(i));
  return t;
}

}  // namespace

TEST_CASE("Nielsen reduction examples") {
  CHECK(nielsen_reduce(T(2, {"a", "a b"})).reduced == T(2, {"a", "b"}));
  const auto r = nielsen_reduce(T(2, {"a b a^-1", "a"})).reduced;
  CHECK(total(r) == 2);
  CHECK(std::is_permutation(r.entries.begin(), r.entries.end(), T(2, {"a", "b"}).entries.begin()));
  CHECK(nielsen_reduce(T(2, {"a^2", "b"})).reduced == T(2, {"a^2", "b"}));
}

TEST_CASE("is_basis examples") {
  CHECK(is_basis(T(2, {"a", "a b"})));
  CHECK_FALSE(is_basis(T(2, {"a^2", "b"})));
  CHECK_FALSE(is_basis(T(2, {"a", "a"})));
  CHECK_THROWS_AS(is_basis(T(2, {"a"})), Error);
  std::mt19937_64 rng(5);
  auto t = identity_tuple(2);
  for (int i = 0; i < 5; ++i) t = apply_move(t, random_move(rng, 2));
  CHECK(is_basis(t));
}

TEST_CASE("the move log replays to the reduced tuple", "[property]") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 3;
    WordTuple t{n, {}};
    for (std::size_t k = 0; k < n; ++k) t.entries.push_back(reduce(test::random_word(rng, n, 6)));
    const auto r = nielsen_reduce(t);
    REQUIRE(apply_moves(t, r.log) == r.reduced);
    REQUIRE(total(r.reduced) <= total(t));
    // Both tuples generate the same subgroup.
    const oracle::StallingsGraph before(n, t.entries), after(n, r.reduced.entries);
    for (const auto& e : t.entries) REQUIRE(after.contains(e));
    for (const auto& e : r.reduced.entries) REQUIRE(before.contains(e));
    REQUIRE(nielsen_reduce(r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("is_basis is invariant under moves and agrees with folding", "[property]") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 3;
    WordTuple t{n, {}};
    for (std::size_t k = 0; k < n; ++k) t.entries.push_back(reduce(test::random_word(rng, n, 4)));
    const bool b = is_basis(t);
    REQUIRE(b == oracle::StallingsGraph(n, t.entries).is_everything());
    auto moved = t;
    for (int k = 0; k < 4; ++k) moved = apply_move(moved, random_move(rng, n));
    REQUIRE(is_basis(moved) == b);
    std::reverse(moved.entries.begin(), moved.entries.end());
    REQUIRE(is_basis(moved) == b);
  }
}

TEST_CASE("tuple text") {
  const auto t = parse_tuple("a; a b; [a,b]", test::abc());
  CHECK(t.entries.size() == 3);
  CHECK(t.rank == 4);
  CHECK(to_string(t, test::abc()) == "(a, a b, a b a^-1 b^-1)");
}
