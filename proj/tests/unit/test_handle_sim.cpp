#include "reeblab/error.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/omega.hpp"
#include "reeblab/presentation_builders.hpp"
#include "test_util.hpp"

using namespace reeblab;
using E = HandleEvent;

namespace {

SurfaceState state_of(std::initializer_list<HandleEvent> events) {
  SurfaceState s;
  for (const auto& e : events) s = apply_event(s, e).state;
  return s;
}

std::map<std::size_t, int> genera(const SurfaceState& s) {
  std::map<std::size_t, int> out;
  for (const auto& [id, c] : s.components()) out[id] = c.genus;
  return out;
}

}  // namespace

TEST_CASE("apply_event bookkeeping") {
  auto r = apply_event(state_of({E::h0(), E::up(1)}), E::h0());
  CHECK(genera(r.state) == std::map<std::size_t, int>{{1, 1}, {2, 0}});
  CHECK(r.vertex.index == 0);
  CHECK(r.vertex.below.empty());

  r = apply_event(state_of({E::h0(), E::up(1), E::h0()}), E::merge_of(1, 2));
  CHECK(genera(r.state) == std::map<std::size_t, int>{{3, 1}});
  CHECK(r.vertex.index == 1);
  CHECK(r.vertex.below.size() == 2);

  r = apply_event(state_of({E::h0(), E::up(1), E::up(1)}), E::split_of(1, 1, 1));
  CHECK(genera(r.state) == std::map<std::size_t, int>{{2, 1}, {3, 1}});
  CHECK(r.vertex.index == 2);
  CHECK(r.vertex.below.size() == 1);

  r = apply_event(state_of({E::h0(), E::up(1)}), E::down(1));
  CHECK(genera(r.state) == std::map<std::size_t, int>{{1, 0}});
  CHECK(r.state.total_genus() == 0);
  CHECK(r.state.to_string() == "{c1: 0}");
}

TEST_CASE("apply_event rejects invalid events") {
  const auto s = state_of({E::h0(), E::h0()});
  CHECK_THROWS_AS(apply_event(s, E::up(7)), Error);
  CHECK_THROWS_AS(apply_event(s, E::down(1)), Error);
  CHECK_THROWS_AS(apply_event(s, E::merge_of(1, 1)), Error);
  CHECK_THROWS_AS(apply_event(s, E::split_of(1, 1, 0)), Error);
  CHECK_THROWS_AS(apply_event(state_of({E::h0(), E::up(1)}), E::h3(1)), Error);
  CHECK_THROWS_AS(apply_event(state_of({E::h0(), E::up(1)}), E::split_of(1, -1, 2)), Error);
}

TEST_CASE("run on the builders") {
  auto r = run(ordered(3));
  CHECK(r.closed);
  CHECK(cycle_rank(r.graph) == 0);
  CHECK(r.census.delta(2) == 6);

  r = run(s2xs1());
  CHECK(cycle_rank(r.graph) == 1);
  CHECK(r.census.delta(2) == 0);
  CHECK(r.graph.indices() == std::vector<int>{0, 2, 1, 3});

  for (int g = 1; g <= 6; ++g) {
    r = run(circle_bundle_seq(g, -2));
    CHECK(r.k == std::array<std::size_t, 4>{1, std::size_t(2 * g + 1), std::size_t(2 * g + 1), 1});
    CHECK(r.census.delta(3) == std::size_t(2 * g));
    CHECK(r.census.delta(2) == std::size_t(2 * g + 2));
    CHECK(cycle_rank(r.graph) == g);
  }
  for (int e : {-1, 1}) {
    r = run(circle_bundle_seq(1, e));
    CHECK(cycle_rank(r.graph) == 1);
    CHECK(r.census.delta(2) == 4);
    CHECK(r.k[1] == 3);
  }
  CHECK_THROWS_AS(circle_bundle_seq(0, 1), Error);
  CHECK_THROWS_AS(canonical_sequence(2, 3), Error);
}

TEST_CASE("run reports errors and open sequences") {
  HandleSequence open{{E::h0(), E::up(1)}};
  const auto r = run(open);
  CHECK_FALSE(r.closed);
  CHECK(r.final_state.to_string() == "{c1: 1}");

  HandleSequence after{{E::h0(), E::h3(1), E::h0()}};
  CHECK_THROWS_AS(run(after), Error);
  HandleSequence bad{{E::h0(), E::down(1)}};
  CHECK_THROWS_WITH(run(bad), Catch::Matchers::ContainsSubstring("{c1: 0}"));
}

TEST_CASE("canonical sequences") {
  for (int k1 = 0; k1 <= 6; ++k1)
    for (int r = 0; r <= k1; ++r) {
      const auto res = run(canonical_sequence(k1, r));
      REQUIRE(res.census.delta(2) == std::size_t(2 * (k1 - r)));
      REQUIRE(cycle_rank(res.graph) == r);
      REQUIRE(canonical_form(res.graph) == res.graph);
    }
}

TEST_CASE("connected sums of sequences") {
  auto r = run(connected_sum(s2xs1(), s2xs1()));
  CHECK(cycle_rank(r.graph) == 2);
  CHECK(r.census.delta(2) == 0);
  CHECK_THROWS_AS(connected_sum(HandleSequence{{E::h0()}}, s2xs1()), Error);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_closed_sequence(rng(), 20);
    const auto b = random_closed_sequence(rng(), 20);
    const auto ra = run(a), rb = run(b), rs = run(connected_sum(a, b));
    REQUIRE(rs.closed);
    REQUIRE(rs.census.delta(2) == ra.census.delta(2) + rb.census.delta(2));
    REQUIRE(rs.census.delta(3) == ra.census.delta(3) + rb.census.delta(3));
    REQUIRE(cycle_rank(rs.graph) == cycle_rank(ra.graph) + cycle_rank(rb.graph));
  }
}

TEST_CASE("closed sequence bookkeeping", "[property]") {
  for (std::uint64_t seed = 100; seed < 600; ++seed) {
    const auto seq = random_closed_sequence(seed, 40);
    REQUIRE(seq.events.size() <= 40);
    const auto r = run(seq);
    REQUIRE(r.closed);
    REQUIRE(long(r.k[0]) - long(r.k[1]) + long(r.k[2]) - long(r.k[3]) == 0);
    std::size_t ups = 0, downs = 0;
    for (const auto& e : seq.events) {
      ups += e.kind == E::Kind::genus_up;
      downs += e.kind == E::Kind::genus_down;
    }
    REQUIRE(ups == downs);
    REQUIRE(r.census.delta(2) + r.census.delta(3) == r.k[1] + r.k[2]);
  }
  CHECK(random_closed_sequence(5, 30) == random_closed_sequence(5, 30));
}

TEST_CASE("script format") {
  const char* text =
      "h0\n"
      "h1 +g @c1   # genus one\n"
      "\n"
      "h2 split @c1 (1,0)\n"
      "h1 merge @c2 @c3\n"
      "h2 -g @c4\n"
      "h3 @c4\n";
  const auto seq = parse_script(text);
  REQUIRE(seq.events.size() == 6);
  CHECK(seq.events[2] == E::split_of(1, 1, 0));
  CHECK(parse_script(to_script(seq)) == seq);
  CHECK(run(seq).closed);
  CHECK(to_string(E::merge_of(2, 3)) == "h1 merge @c2 @c3");
  CHECK_THROWS_AS(parse_script("h4"), ParseError);
  CHECK_THROWS_AS(parse_script("h2 split @c1 (1"), ParseError);
  CHECK_THROWS_AS(parse_script("h1 +g c1"), ParseError);
}

TEST_CASE("Omega bound from the handle order") {
  for (int g = 1; g <= 4; ++g) {
    const auto rep = thm45_omega_consistency(circle_bundle_seq(g, 2), circle_bundle_handle_ordered(g, 2));
    CHECK(rep.pass);
    CHECK(rep.omega <= std::size_t(g + 1));
    CHECK(rep.bound == std::size_t(g + 1));
  }

  for (int g = 1; g <= 4; ++g) {
    std::mt19937_64 rng(g);
    std::vector<Word> rels;
    for (int i = 0; i < g; ++i) rels.push_back(reduce(test::random_word(rng, std::size_t(g), 6)));
    const auto rep = thm45_omega_consistency(ordered(g), Presentation(Alphabet::numbered("x", g), rels));
    CHECK(rep.pass);
    CHECK(rep.beta1 == 0);
  }

  // first relator uses every generator although only k1 - r 1-handles precede it
  const auto seq = canonical_sequence(3, 1);
  const Presentation wide(Alphabet::numbered("x", 3),
                          {test::w("a b c"), Word{}, Word{}});
  const auto rep = thm45_omega_consistency(seq, wide);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.windows);
  CHECK_FALSE(rep.failures.empty());

  CHECK_THROWS_AS(thm45_omega_consistency(seq, circle_bundle(2, 1)), Error);
  CHECK_THROWS_AS(thm45_omega_consistency(HandleSequence{{E::h0(), E::h0(), E::merge_of(1, 2), E::h3(3)}},
                                          Presentation(Alphabet::numbered("x", 1), {})),
                  Error);
}
