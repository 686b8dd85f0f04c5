#include "oracles.hpp"
#include "reeblab/catalog.hpp"
#include "reeblab/error.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/obstruction.hpp"
#include "reeblab/reeb_graph.hpp"
#include "test_util.hpp"

using namespace reeblab;

namespace {

ReebGraph sphere_graph() { return ReebGraph(3, {0, 3}, {{0, 1}}); }

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(sphere_graph()) == 0);
  CHECK(cycle_rank(run(ordered(3)).graph) == 0);
  CHECK(cycle_rank(run(s2xs1()).graph) == 1);
  CHECK(cycle_rank(run(circle_bundle_seq(2, 1)).graph) == 2);
  CHECK_THROWS_AS(cycle_rank(ReebGraph(3, {0, 3, 0, 3}, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("construction and validity table") {
  CHECK_NOTHROW(validate(sphere_graph()));
  CHECK_THROWS_AS(ReebGraph(3, {0, 4}, {{0, 1}}), Error);
  CHECK_THROWS_AS(ReebGraph(3, {0, 3}, {{1, 0}}), Error);
  // degree 4 in dimension 3
  CHECK_THROWS_AS(ReebGraph(3, {0, 0, 1, 2, 3}, {{0, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 4}}), Error);
  // degree-2 vertex labelled as an extremum
  CHECK_THROWS_AS(validate(ReebGraph(3, {0, 0, 3}, {{0, 1}, {1, 2}})), Error);
  // merge with the wrong index
  CHECK_THROWS_AS(validate(ReebGraph(3, {0, 0, 2, 3}, {{0, 2}, {1, 2}, {2, 3}})), Error);
  // split with the wrong index
  CHECK_THROWS_AS(validate(ReebGraph(3, {0, 1, 3, 3}, {{0, 1}, {1, 2}, {1, 3}})), Error);
  // source labelled as a maximum
  CHECK_THROWS_AS(validate(ReebGraph(3, {3, 3}, {{0, 1}})), Error);
  // surfaces: saddles are index 1 for both merges and splits
  CHECK_NOTHROW(validate(ReebGraph(2, {0, 1, 1, 2}, {{0, 1}, {1, 2}, {1, 2}, {2, 3}})));
}

TEST_CASE("degree census") {
  auto c = degree_census(run(ordered(3)).graph);
  CHECK(c.delta(2) == 6);
  CHECK(c.delta(3) == 0);
  c = degree_census(run(circle_bundle_seq(3, 2)).graph);
  CHECK(c.delta(2) == 8);
  CHECK(c.delta(3) == 6);
  c = degree_census(sphere_graph());
  CHECK(c.delta(1) == 2);
  CHECK(c.delta(2) == 0);
  CHECK(c.k(0) == 1);
  CHECK(c.k(3) == 1);
  CHECK(c.max_degree == 1);
}

TEST_CASE("cycle rank identity and parity") {
  for (int g = 1; g <= 5; ++g) {
    const auto b = betti_identity_check(run(circle_bundle_seq(g, 0)).graph);
    CHECK(b.pass);
    CHECK(b.cycle_rank == g);
  }
  const auto t = betti_identity_check(run(ordered(2)).graph);
  CHECK(t.pass);
  CHECK(t.twice_formula == 0);
  CHECK(parity_check(sphere_graph(), 0));
  CHECK_FALSE(parity_check(sphere_graph(), 1));
}

TEST_CASE("reduce_extrema") {
  // two sources, a genus increment on the second, merge, decrement, sink
  const ReebGraph g(3, {0, 0, 1, 1, 2, 3}, {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  validate(g);
  const auto r = reduce_extrema(g);
  CHECK(r.indices() == std::vector<int>{0, 1, 2, 3});
  CHECK(degree_census(r).delta(2) == degree_census(g).delta(2));
  CHECK(cycle_rank(r) == cycle_rank(g));
  CHECK(reduce_extrema(r) == r);

  const auto bundle = run(circle_bundle_seq(2, 1)).graph;
  CHECK(reduce_extrema(bundle) == bundle);

  // neither source sits directly below the merge
  const ReebGraph stuck(3, {0, 0, 1, 1, 1, 2, 2, 3},
                        {{0, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  validate(stuck);
  CHECK_THROWS_AS(reduce_extrema(stuck), Error);
}

TEST_CASE("canonical form") {
  const auto g = run(ordered(3)).graph;
  CHECK(canonical_form(g) == g);
  const auto k = canonical_form(run(canonical_sequence(4, 2)).graph);
  CHECK(k.indices() == std::vector<int>{0, 1, 1, 2, 1, 2, 1, 2, 2, 3});
  CHECK(canonical_form(k) == k);
  CHECK_THROWS_AS(canonical_form(ReebGraph(3, {0, 0, 1, 3}, {{0, 2}, {1, 2}, {2, 3}})), Error);
  CHECK_THROWS_AS(canonical_form(ReebGraph(2, {0, 2}, {{0, 1}})), Error);
}

TEST_CASE("DOT export") {
  const auto dot = to_dot(sphere_graph());
  CHECK(count(dot, "->") == 1);
  CHECK(count(dot, "label=") == 2);
  CHECK(dot.find("v0: idx=0 deg=1") != std::string::npos);
  const auto loop = run(s2xs1()).graph;
  const auto d2 = to_dot(loop);
  CHECK(count(d2, "->") == 4);
  CHECK(count(d2, "v1 -> v2") == 2);
  CHECK(to_dot(loop) == d2);
}

TEST_CASE("JSON interchange") {
  const auto g = run(circle_bundle_seq(2, -1)).graph;
  CHECK(reeb_from_json(to_json(g)) == g);
  CHECK_THROWS_AS(reeb_from_json("{"), ParseError);
  CHECK_THROWS_AS(reeb_from_json(R"({"dim": 3, "vertices": [{"index": 0}], "edges": [[0, 5]]})"), Error);
}

TEST_CASE("graph invariants on simulator output", "[property]") {
  std::size_t reduced = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto r = run(random_closed_sequence(seed, seed % 2 ? 12 : 30));
    const auto& g = r.graph;
    REQUIRE(cycle_rank(g) == oracle::spanning_tree_cycle_rank(g));
    REQUIRE(betti_identity_check(g).pass);
    REQUIRE(parity_check(g, 0));
    const auto c = degree_census(g);
    try {
      const auto h = reduce_extrema(g);
      ++reduced;
      const auto hc = degree_census(h);
      REQUIRE(hc.k(0) == 1);
      REQUIRE(hc.k(3) == 1);
      REQUIRE(hc.delta(2) == c.delta(2));
      REQUIRE(cycle_rank(h) == cycle_rank(g));
      REQUIRE(reduce_extrema(h) == h);
      const auto k = canonical_form(h);
      REQUIRE(canonical_form(k) == k);
      REQUIRE(cycle_rank(k) == cycle_rank(h));
      REQUIRE(degree_census(k).delta(2) == hc.delta(2));
      REQUIRE(degree_census(k).delta(3) == hc.delta(3));
    } catch (const Error&) {
      REQUIRE(c.k(0) + c.k(3) > 2);
    }
  }
  CHECK(reduced > 100);
}

TEST_CASE("realization obstruction") {
  using K = ObstructionVerdict::Kind;
  CHECK(realization_obstruction(run(ordered(0)).graph, heisenberg_profile()).kind == K::obstructed);
  CHECK(realization_obstruction(run(canonical_sequence(3, 3)).graph, circle_bundle_profile(2, 3)).kind ==
        K::obstructed);
  CHECK(realization_obstruction(run(circle_bundle_seq(2, 3)).graph, circle_bundle_profile(2, 3)).kind ==
        K::not_obstructed);
  ManifoldProfile bare;
  bare.name = "bare";
  const auto v = realization_obstruction(run(s2xs1()).graph, bare);
  CHECK(v.kind == K::insufficient_data);
  CHECK_FALSE(v.missing.empty());
  CHECK(to_string(K::obstructed) == "OBSTRUCTED");
  CHECK(to_string(K::not_obstructed) == "NOT-OBSTRUCTED");
}
