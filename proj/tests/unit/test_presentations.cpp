#include <numeric>

#include "reeblab/abelian.hpp"
#include "reeblab/error.hpp"
#include "reeblab/omega.hpp"
#include "reeblab/presentation.hpp"
#include "reeblab/presentation_builders.hpp"
#include "reeblab/smith.hpp"
#include "reeblab/tietze.hpp"
#include "test_util.hpp"

using namespace reeblab;

namespace {

Presentation P(std::string_view text) { return parse_presentation(text); }

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of elementary unimodular matrices.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < 6; ++k) {
    const auto i = pick(rng), j = pick(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = coef(rng);
    u = e * u;
  }
  return u;
}

}  // namespace

TEST_CASE("deficiency") {
  CHECK(deficiency(circle_bundle(1, 2)) == 0);
  CHECK(deficiency(P("gens: a, b ; rels:")) == 2);
  CHECK(deficiency(P("gens: x ; rels: x^2")) == 0);
}

TEST_CASE("omega_fixed on fixed orders") {
  CHECK(omega_fixed(circle_bundle_rank2g(1, 1)) == 2);
  CHECK(omega_fixed(P("gens: x, y ; rels: x^3, y^2")) == 1);
  for (int g = 1; g <= 3; ++g)
    for (int e : {-2, 0, 1, 3}) CHECK(omega_fixed(circle_bundle(g, e)) == static_cast<std::size_t>(2 * g + 1));
  CHECK_THROWS_WITH(omega_fixed(P("gens: a, b ; rels:")), Catch::Matchers::ContainsSubstring("free"));
}

TEST_CASE("omega_search minimises over orders") {
  const auto cb = circle_bundle(1, 1);
  const auto r = omega_search(cb);
  CHECK(r.omega == 2);
  CHECK(r.certified);
  const auto best = reorder(cb, r.generator_order, r.relator_order);
  CHECK(omega_fixed(best) == 2);
  CHECK(support(best.relator(0)).size() <= 2);

  CHECK(omega_search(P("gens: x, y ; rels: x^3, y^2")).omega == 1);
  CHECK(omega_search(P("gens: a, b ; rels: [a,b]")).omega == 2);
  CHECK(omega_search(P("gens: a, b ; rels: [a,[a,b]], [b,[a,b]]")).omega == 2);
}

TEST_CASE("omega invariants", "[property]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 4, m = 1 + rng() % 4;
    std::vector<Word> rels;
    for (std::size_t k = 0; k < m; ++k) rels.push_back(reduce(test::random_word(rng, n, 5)));
    const Presentation p(Alphabet::numbered("x", n), rels);
    const auto fixed = omega_fixed(p);
    REQUIRE(fixed >= 1);
    REQUIRE(fixed <= n);
    const auto best = omega_search(p);
    REQUIRE(best.certified);
    REQUIRE(best.omega <= fixed);
    REQUIRE(omega_fixed(reorder(p, best.generator_order, best.relator_order)) == best.omega);

    // Adding y with relator y never increases the optimum.
    auto a = p.alphabet();
    const auto y = a.add("y");
    auto more = rels;
    more.push_back(Word::generator(y));
    REQUIRE(omega_search(Presentation(a, more)).omega <= best.omega);

    // Abelianization ignores the order.
    std::vector<std::size_t> gperm(n), rperm(m);
    std::iota(gperm.begin(), gperm.end(), 0);
    std::iota(rperm.begin(), rperm.end(), 0);
    std::shuffle(gperm.begin(), gperm.end(), rng);
    std::shuffle(rperm.begin(), rperm.end(), rng);
    REQUIRE(abelianize(reorder(p, gperm, rperm)) == abelianize(p));
  }
}

TEST_CASE("omega_search falls back beyond the budget") {
  OmegaSearchOptions o;
  o.budget = 3;
  o.restarts = 50;
  // the optimum sits far above the minimum-support lower bound of 1
  const auto p = P("gens: a, b, c, d, e, f ; rels: a, a b c d e f");
  const auto exact = omega_search(p);
  REQUIRE(exact.certified);
  const auto r = omega_search(p, o);
  CHECK_FALSE(r.certified);
  CHECK(r.omega == exact.omega);
  CHECK(r.lower_bound < r.omega);
  CHECK_FALSE(r.note.empty());
  CHECK(omega_search(p, o).generator_order == r.generator_order);

  const auto cb = omega_search(circle_bundle(3, 2), o);
  CHECK(cb.omega >= cb.lower_bound);
  CHECK(cb.omega <= omega_fixed(circle_bundle(3, 2)));
}

TEST_CASE("Smith normal form examples") {
  auto f = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(f.factors == std::vector<std::int64_t>{1, 6});
  f = smith_normal_form(IntMatrix(1, 3));
  CHECK(f.factors == std::vector<std::int64_t>{0});
  CHECK(f.cokernel_free_rank() == 3);
  f = smith_normal_form(IntMatrix::identity(2));
  CHECK(f.factors == std::vector<std::int64_t>{1, 1});
  CHECK(f.cokernel_free_rank() == 0);
  CHECK(smith_normal_form(IntMatrix(0, 0)).factors.empty());
}

TEST_CASE("Smith form against determinantal divisors", "[property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto m = random_matrix(rng, 2, 3, -6, 6);
    const auto f = smith_normal_form(m);
    std::vector<std::int64_t> entries, minors;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c) entries.push_back(m(r, c));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) minors.push_back(m(0, a) * m(1, b) - m(0, b) * m(1, a));
    REQUIRE(f.factors.size() == 2);
    REQUIRE(f.factors[0] == gcd_all(entries));
    REQUIRE(f.factors[0] * f.factors[1] == gcd_all(minors));
    if (f.factors[1] != 0) REQUIRE(f.factors[1] % f.factors[0] == 0);
    const auto d = f.left * m * f.right;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c) REQUIRE(d(r, c) == (r == c ? f.factors[r] : 0));
  }
}

TEST_CASE("Smith form is invariant under unimodular changes", "[property]") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto m = random_matrix(rng, r, c, -5, 5);
    const auto changed = random_unimodular(rng, r) * m * random_unimodular(rng, c);
    REQUIRE(smith_normal_form(changed).factors == smith_normal_form(m).factors);
  }
}

TEST_CASE("lattice membership") {
  const IntMatrix rows{{2, 0}, {0, 3}};
  CHECK(lattice_contains(rows, std::vector<std::int64_t>{4, -3}));
  CHECK_FALSE(lattice_contains(rows, std::vector<std::int64_t>{1, 0}));
  CHECK(lattice_contains(IntMatrix(0, 2), std::vector<std::int64_t>{0, 0}));
}

TEST_CASE("abelianization of the builders") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(abelianize(circle_bundle(g, 3)) == AbelianInvariants{static_cast<std::size_t>(2 * g), {3}});
    CHECK(abelianize(circle_bundle(g, -1)) == AbelianInvariants{static_cast<std::size_t>(2 * g), {}});
    CHECK(abelianize(circle_bundle(g, 0)) == AbelianInvariants{static_cast<std::size_t>(2 * g + 1), {}});
    CHECK(abelianize(surface_group(g)) == AbelianInvariants{static_cast<std::size_t>(2 * g), {}});
  }
  CHECK(abelianize(free_product(lens(2), lens(3))) == AbelianInvariants{0, {6}});
  CHECK(abelianize(free_product(lens(4), lens(6))) == AbelianInvariants{0, {2, 12}});
  CHECK(abelianize(circle_bundle(1, 0)) == AbelianInvariants{3, {}});
  CHECK(to_string(abelianize(circle_bundle(2, 6))) == "Z^4 + Z/6");
  CHECK(to_string(abelianize(lens(1))) == "0");
}

TEST_CASE("builders") {
  const auto fp = free_product(lens(2), lens(3));
  CHECK(fp.rank() == 2);
  CHECK(fp.relator_count() == 2);
  CHECK(deficiency(fp) == 0);

  const auto r2g = circle_bundle_rank2g(2, -1);
  CHECK(r2g.rank() == 4);
  CHECK(r2g.relator_count() == 4);
  CHECK_THROWS_AS(circle_bundle_rank2g(2, 2), Error);
  CHECK_THROWS_AS(circle_bundle(0, 1), Error);

  const auto d = circle_bundle_diagram(1, -1);
  std::vector<std::string> words = d.alpha;
  words.insert(words.end(), d.beta.begin(), d.beta.end());
  words.push_back(d.gamma);
  CHECK(relators_equivalent(heegaard_presentation(3, words, d.generators), circle_bundle(1, -1)));
  CHECK_THROWS_AS(heegaard_presentation(2, {"x1 x3"}), Error);

  const auto ho = circle_bundle_handle_ordered(2, 1);
  CHECK(ho.rank() == 5);
  CHECK(abelianize(ho) == abelianize(circle_bundle(2, 1)));
}

TEST_CASE("presentation text round trip") {
  const auto p = P("gens: a, b, h ; rels: [a,h], [b,h], [a,b] h^-1");
  CHECK(p.rank() == 3);
  CHECK(p.relator_count() == 3);
  CHECK(parse_presentation(to_string(p)).relators() == p.relators());
  CHECK_THROWS_AS(P("gens: a ; rels: b"), Error);
  CHECK_THROWS_AS(P("rels: a"), Error);
}

TEST_CASE("Tietze: removing a trivial generator") {
  auto q = remove_trivial_generator(P("gens: x, y ; rels: x, [x,y]"), 0);
  CHECK(q.rank() == 1);
  REQUIRE(q.relator_count() == 1);
  CHECK(q.relator(0).empty());

  q = remove_trivial_generator(P("gens: a, b, c ; rels: c, a c b"), 0);
  CHECK(to_string(q) == "gens: a, b ; rels: a b");

  q = remove_trivial_generator(P("gens: x ; rels: x"), 0);
  CHECK(q.rank() == 0);
  CHECK(q.relator_count() == 0);

  CHECK_THROWS_AS(remove_trivial_generator(P("gens: x ; rels: x^2"), 0), Error);
}

TEST_CASE("Tietze: replacing a relator needs an exact witness") {
  const auto x = Word::generator(0), y = Word::generator(1);

  const auto p1 = P("gens: x ; rels: x^2");
  CHECK_THROWS_AS(replace_relator(p1, 0, x, {{{0, 1, {}}}, {{0, 1, {}}, {0, 1, {}}}}), Error);
  CHECK_FALSE(lattice_contains(exponent_matrix(p1), std::vector<std::int64_t>{1}));

  const auto p2 = P("gens: x, y ; rels: [x,y]");
  const auto conj = conjugate(commutator(x, y), y);
  const auto q2 = replace_relator(p2, 0, conj, {{{0, 1, y}}, {{0, 1, inverse(y)}}});
  CHECK(q2.relator(0) == conj);
  CHECK(abelianize(q2) == abelianize(p2));

  const auto p3 = P("gens: x ; rels: x^2, x^3");
  const auto q3 = replace_relator(p3, 0, x, {{{1, 1, {}}, {0, -1, {}}}, {{0, 1, {}}, {0, 1, {}}}});
  CHECK(q3.relator(0) == x);
  CHECK(abelianize(q3) == abelianize(p3));

  // A forward witness that evaluates correctly is not enough.
  CHECK_THROWS_AS(replace_relator(p3, 0, x, {{{1, 1, {}}, {0, -1, {}}}, {}}), Error);
}
