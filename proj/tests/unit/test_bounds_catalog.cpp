#include "reeblab/bounds.hpp"
#include "reeblab/catalog.hpp"
#include "reeblab/error.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/profile.hpp"
#include "reeblab/reeb_graph.hpp"
#include "test_util.hpp"

using namespace reeblab;

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

}  // namespace

TEST_CASE("individual bounds") {
  CHECK(*bound_rank_corank(lens_sum_profile(2, 3)).value == 4);
  CHECK(*bound_homology(torus_profile(3), "Z").value == 4);
  CHECK(*bound_homology(torus_profile(4), "Z").value == 12);
  CHECK_FALSE(bound_homology(torus_profile(4), "Q").value);
  CHECK(*bound_category(real_projective_profile(5)).value == 4);
  CHECK_FALSE(bound_category(real_projective_profile(2)).value);
  CHECK_FALSE(bound_category(circle_bundle_profile(2, 0)).value);
  CHECK(*bound_heegaard(circle_bundle_profile(2, 0)).value == 6);
  CHECK(*upper_heegaard(circle_bundle_profile(2, 0)).value == 10);
  CHECK(*bound_omega(heisenberg_profile()).value == 4);
  CHECK_FALSE(bound_omega(sphere_profile(3)).value);
  CHECK_FALSE(bound_heegaard(torus_profile(4)).value);
  CHECK_FALSE(bound_heegaard(torus_profile(4)).note.empty());
  CHECK(effective_omega_lower(heisenberg_profile()) == 2);
}

TEST_CASE("estimate intervals") {
  auto e = estimate(sphere_profile(3));
  CHECK(e.lower == 0);
  CHECK(e.upper == 0);
  CHECK(e.exact);

  e = estimate(circle_bundle_profile(2, 1));
  CHECK(e.lower == 4);
  CHECK(e.upper == 6);
  CHECK_FALSE(e.exact);
  CHECK_FALSE(e.provenance.empty());

  e = estimate(s2xs1_sum_lens_profile(2, 3));
  CHECK(e.lower == 2);
  CHECK(e.upper == 2);

  CHECK(estimate(lens_sum_profile(2, 3)).lower >= 4);
  CHECK_FALSE(to_string(estimate(heisenberg_profile())).empty());

  auto bad = sphere_profile(3);
  bad.pi1_corank = 3;
  CHECK_THROWS_AS(estimate(bad), Error);
  auto clash = heisenberg_profile();
  clash.delta2_upper = 2;
  CHECK_THROWS_AS(estimate(clash), Error);
}

TEST_CASE("profile connected sums") {
  const auto s = connected_sum(circle_bundle_profile(1, 0), lens_profile(5));
  CHECK(s.pi1_rank == 4);
  CHECK(s.heegaard_genus == 4);
  CHECK_FALSE(s.ls_category);
  CHECK(s.euler_char == 0);
  REQUIRE(s.prime_summands);
  CHECK(s.prime_summands->size() == 2);
  CHECK(connected_sum(torus_profile(4), torus_profile(4)).prime_summands == std::nullopt);
  CHECK(connected_sum(sphere_profile(4), sphere_profile(4)).euler_char == 2);
  CHECK_THROWS_AS(connected_sum(sphere_profile(3), sphere_profile(4)), Error);

  const auto ss = connected_sum(s2xs1_sum_profile(1), s2xs1_sum_profile(2));
  CHECK(ss.witness.has_value());
  CHECK(estimate(ss).upper == 0);
}

TEST_CASE("catalog intervals are consistent") {
  for (const auto& p : catalog()) {
    INFO(p.name);
    const auto e = estimate(p);
    REQUIRE(e.lower >= 0);
    REQUIRE(mod2(e.lower) == mod2(p.euler_char));
    if (e.upper) {
      REQUIRE(e.lower <= *e.upper);
      REQUIRE(mod2(*e.upper) == mod2(p.euler_char));
    }
    if (p.witness) {
      const auto r = run(build_witness(*p.witness));
      REQUIRE(r.closed);
      REQUIRE(e.upper);
      REQUIRE(static_cast<long>(r.census.delta(2)) >= *e.upper);
      REQUIRE(static_cast<long>(r.census.delta(2)) >= e.lower);
      REQUIRE(static_cast<long>(r.graph.indices().size()) >= 2);
    }
    REQUIRE(profile_from_json(to_json(p)) == p);
  }
}

TEST_CASE("random connected sums keep intervals consistent", "[property]") {
  std::vector<ManifoldProfile> pool;
  for (const auto& p : catalog())
    if (p.dim == 3) pool.push_back(p);
  REQUIRE(pool.size() > 5);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 120; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto s = connected_sum(a, b);
    const auto ea = estimate(a), eb = estimate(b), es = estimate(s);
    INFO(a.name << " # " << b.name);
    if (es.upper) REQUIRE(es.lower <= *es.upper);
    if (ea.upper && eb.upper) {
      REQUIRE(es.upper);
      REQUIRE(*es.upper <= *ea.upper + *eb.upper);
    }
    REQUIRE(es.lower >= std::max(ea.lower, eb.lower) - 2);
    REQUIRE(s.pi1_rank == (a.pi1_rank && b.pi1_rank ? std::optional<long>(*a.pi1_rank + *b.pi1_rank)
                                                    : std::nullopt));
  }
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_profile("sphere:3") == sphere_profile(3));
  CHECK(catalog_profile("circle-bundle:2,-1") == circle_bundle_profile(2, -1));
  CHECK(catalog_profile("heisenberg") == heisenberg_profile());
  CHECK(catalog_profile("lens-sum:2,3") == lens_sum_profile(2, 3));
  CHECK_THROWS_AS(catalog_profile("klein:3"), Error);
  CHECK_THROWS_AS(catalog_profile("lens:1"), Error);
  CHECK_THROWS_AS(catalog_profile("homology-sphere:1"), Error);
  CHECK_THROWS_AS(catalog_profile("circle-bundle:0,1"), Error);
  CHECK_THROWS_AS(catalog_profile("sphere:x"), Error);
  CHECK(catalog_patterns().size() == 12);
}

TEST_CASE("witness specs") {
  CHECK(build_witness("ordered:2") == ordered(2));
  CHECK(build_witness("circle-bundle:2,1") == circle_bundle_seq(2, 1));
  CHECK(build_witness("s2xs1 # s2xs1") == connected_sum(s2xs1(), s2xs1()));
  CHECK(run(build_witness("canonical:3,1 # ordered:1")).census.delta(2) == 6);
  CHECK_THROWS_AS(build_witness("ordered"), Error);
  CHECK_THROWS_AS(build_witness("mystery:1"), Error);
}

TEST_CASE("JSON round trip and validation") {
  auto p = s2xs1_sum_lens_profile(2, 7);
  p.provenance["omega_lower"] = "input";
  CHECK(profile_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(profile_from_json("{"), ParseError);
  CHECK_THROWS_AS(profile_from_json(R"({"name": "x", "dim": 3, "euler_char": 2})"), Error);
  auto bad = torus_profile(3);
  bad.homology_ranks["Z"].push_back(1);
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("experiments") {
  const std::vector<ManifoldProfile> ps{s2xs1_sum_profile(1), homology_sphere_profile(2), circle_bundle_profile(1, 1),
                                        torus_profile(4)};
  const auto rows = additivity_experiment(ps);
  // self-sums included, dimensions never mixed
  CHECK(rows.size() == 7);
  for (const auto& r : rows) CHECK((r.first == "T^4") == (r.second == "T^4"));
  const auto gap = genus_gap_experiment(ps);
  CHECK(gap.size() == 3);
  for (const auto& r : gap)
    if (r.high) CHECK(r.low <= *r.high);
}
