#include "oracles.hpp"
#include "reeblab/abelian.hpp"
#include "reeblab/closure.hpp"
#include "reeblab/error.hpp"
#include "reeblab/presentation_builders.hpp"
#include "test_util.hpp"

using namespace reeblab;
using test::w;
using Status = ClosureVerdict::Status;
using Cert = ClosureVerdict::Certificate;

TEST_CASE("closure membership examples") {
  const std::vector<Word> rel{w("[a,b]")};

  auto v = member_bounded({rel, w("a")});
  CHECK(v.status == Status::not_member);
  CHECK(v.certificate == Cert::abelianization);

  v = member_bounded({rel, w("[a,b]^3")});
  REQUIRE(v.status == Status::member);
  CHECK(v.witness.size() == 3);
  CHECK(evaluate(v.witness, rel) == w("[a,b]^3"));

  v = member_bounded({rel, w("[a^2,b]"), 2, 4});
  REQUIRE(v.status == Status::member);
  CHECK(evaluate(v.witness, rel) == w("[a^2,b]"));
  CHECK(v.witness.size() == 2);

  v = member_bounded({rel, Word{}});
  CHECK(v.status == Status::member);
  CHECK(v.witness.empty());
}

TEST_CASE("closure verdict edge cases") {
  CHECK(member_bounded({{Word{}}, w("[a,b]")}).status == Status::not_member);
  CHECK(member_bounded({{Word{}}, w("[a,b]")}).certificate == Cert::exhaustive);
  const auto limited = member_bounded({{w("[a,b]")}, w("[a,[a,b]] [b,a]"), 2, 3, 5});
  CHECK(limited.status == Status::unknown);
  CHECK_FALSE(limited.note.empty());
  CHECK_THROWS_AS(member_bounded({{w("a")}, w("a"), 2, 0}), Error);
  CHECK(to_string(Status::member) == "Member");
  CHECK(to_string(Status::not_member) == "NotMember");
  CHECK(to_string(Status::unknown) == "Unknown");
}

TEST_CASE("words_up_to lists reduced words in shortlex order") {
  const auto ws = words_up_to(2, 2);
  CHECK(ws.size() == 17);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  CHECK(words_up_to(3, 0).size() == 1);
}

TEST_CASE("closure agrees with enumeration on two relators", "[property]") {
  const std::vector<Word> rel{w("a^2"), w("a b a^-1 b")};
  const auto brute = oracle::closure_products(rel, 2, 1, 2);
  for (const auto& l : oracle::all_words(2, 4)) {
    std::vector<Letter> letters;
    for (int x : l) letters.push_back({static_cast<std::uint32_t>(std::abs(x) - 1), static_cast<std::int8_t>(x > 0 ? 1 : -1)});
    const Word t(letters);
    const auto v = member_bounded({rel, t, 1, 2});
    REQUIRE((v.status == Status::member) == brute.contains(l));
  }
}

TEST_CASE("verdicts are monotone in the bounds", "[property]") {
  std::mt19937_64 rng(31);
  const std::vector<Word> rel{w("a b a^-1 b^-1")};
  for (int i = 0; i < 150; ++i) {
    const Word t = reduce(test::random_word(rng, 2, 8));
    const auto small = member_bounded({rel, t, 1, 2});
    const auto large = member_bounded({rel, t, 2, 3});
    if (small.status == Status::member) REQUIRE(large.status == Status::member);
    if (small.status == Status::not_member) REQUIRE(large.status == Status::not_member);
    if (large.status == Status::member) REQUIRE(evaluate(large.witness, rel) == t);
  }
}

TEST_CASE("abelianization certificate matches the presentation", "[property]") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> rel{reduce(test::random_word(rng, 3, 5)), reduce(test::random_word(rng, 3, 5))};
    const Presentation p(Alphabet::numbered("x", 3), rel);
    const Word t = reduce(test::random_word(rng, 3, 6));
    const auto v = member_bounded({rel, t, 1, 2, 20000});
    const bool in_lattice = lattice_contains(exponent_matrix(p), exponent_vector(t, 3));
    REQUIRE((v.status == Status::not_member && v.certificate == Cert::abelianization) == !in_lattice);
  }
}

TEST_CASE("Freiheitssatz probes") {
  ProbeOptions o;
  o.samples = 1000;
  auto rep = freiheitssatz_probe(w("a^2 b^2"), 1, o);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.seed == o.seed);
  CHECK(rep.samples == 1000);

  const auto r2g = circle_bundle_rank2g(1, 1).relator(0);
  CHECK(freiheitssatz_probe(r2g, 1, o).counterexamples.empty());

  rep = freiheitssatz_probe(w("a"), 0, o);
  CHECK(rep.counterexamples.empty());

  CHECK_THROWS_AS(freiheitssatz_probe(w("a^2"), 1, o), Error);
  CHECK_THROWS_AS(freiheitssatz_probe(w("b a b^-1"), 1, o), Error);

  o.check_precondition = false;
  o.rank = 3;
  rep = freiheitssatz_probe(w("a^2 b^2"), 2, o);
  CHECK_FALSE(rep.counterexamples.empty());
  CHECK(rep.counterexamples.size() + rep.trivial_skipped <= rep.samples);
  for (const auto& c : rep.counterexamples) {
    CHECK_FALSE(c.empty());
    CHECK_FALSE(support(c).contains(2));
  }

  o.seed = 99;
  CHECK(freiheitssatz_probe(w("a^2 b^2"), 2, o).counterexamples ==
        freiheitssatz_probe(w("a^2 b^2"), 2, o).counterexamples);
}
