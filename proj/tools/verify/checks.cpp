#include "checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "reeblab/abelian.hpp"
#include "reeblab/bounds.hpp"
#include "reeblab/catalog.hpp"
#include "reeblab/closure.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/nielsen.hpp"
#include "reeblab/obstruction.hpp"
#include "reeblab/omega.hpp"
#include "reeblab/presentation_builders.hpp"
#include "reeblab/reeb_graph.hpp"
#include "reeblab/smith.hpp"

namespace reeblab::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Bodies record the first mismatch in `failure`; `note` is shown for
// passing checks.
struct Context {
  std::string failure;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want) && failure.empty()) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      failure = s.str();
    }
  }
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Check run_check(std::string id, std::string title, const std::function<void(Context&)>& body) {
  Check c{std::move(id), std::move(title), false, {}, 0};
  Context ctx;
  const auto t0 = Clock::now();
  try {
    body(ctx);
  } catch (const std::exception& e) {
    if (ctx.failure.empty()) ctx.failure = std::string("exception: ") + e.what();
  }
  c.millis = since(t0);
  c.pass = ctx.failure.empty();
  c.detail = c.pass ? ctx.note : ctx.failure;
  return c;
}

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(long v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

Word gen(std::size_t i, int e = 1) { return Word::generator(i, e); }

Word decode(const oracle::Letters& l) {
  std::vector<Letter> out;
  for (int x : l)
    out.push_back(Letter{static_cast<std::uint32_t>(std::abs(x) - 1),
                         static_cast<std::int8_t>(x > 0 ? 1 : -1)});
  return Word(out);
}

Word random_reduced(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * rank - 1);
  std::vector<Letter> out;
  while (out.size() < len) {
    const auto k = pick(rng);
    Letter l{static_cast<std::uint32_t>(k / 2), static_cast<std::int8_t>(k % 2 ? -1 : 1)};
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return Word(out);
}

struct GraphStats {
  long beta1;
  std::size_t d2, d3;
  std::array<std::size_t, 4> k;
};

GraphStats stats(const HandleSequence& s) {
  const auto r = run(s);
  return {cycle_rank(r.graph), r.census.delta(2), r.census.delta(3), r.k};
}

// Row-lattice membership read off a Smith form D = U M V: v = x M has a
// solution iff w = v V satisfies d_j | w_j on the diagonal and w_j = 0
// elsewhere.
bool snf_lattice_member(const IntMatrix& m, const std::vector<std::int64_t>& v, Context& ctx) {
  const auto sf = smith_normal_form(m);
  const auto d = sf.left * m * sf.right;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const std::int64_t want = i == j && i < sf.factors.size() ? sf.factors[i] : 0;
      ctx.expect(d(i, j) == want, "U M V is not the reported diagonal");
    }
  IntMatrix row(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row(0, j) = v[j];
  const auto w = row * sf.right;
  for (std::size_t j = 0; j < w.cols(); ++j) {
    const std::int64_t dj = j < sf.factors.size() ? sf.factors[j] : 0;
    if (dj == 0 ? w(0, j) != 0 : w(0, j) % dj != 0) return false;
  }
  return true;
}

// Number of 1-handles attached before each 2-handle, read from the events.
std::vector<std::size_t> ones_before_twos(const HandleSequence& s) {
  std::vector<std::size_t> out;
  std::size_t ones = 0;
  for (const auto& e : s.events) {
    if (e.index() == 1) ++ones;
    if (e.index() == 2) out.push_back(ones);
  }
  return out;
}

// x1 x2 ... x_w over k1 generators, one relator per window.
Presentation window_presentation(std::size_t k1, const std::vector<std::size_t>& widths) {
  std::vector<Word> rels;
  for (auto w : widths) {
    std::vector<Letter> l;
    for (std::size_t i = 0; i < w; ++i) l.push_back(Letter{static_cast<std::uint32_t>(i), 1});
    rels.push_back(Word(l));
  }
  return Presentation(Alphabet::numbered("x", k1), rels);
}

// ---------------------------------------------------------------------------
// Reference examples

void presentation_examples(std::vector<Check>& out) {
  out.push_back(run_check("presentations.deficiency", "circle bundle g=1 e=2 has deficiency 0",
                          [](Context& c) { c.expect_eq(deficiency(circle_bundle(1, 2)), 0L, "def"); }));
  out.push_back(run_check(
      "presentations.abelianize-bundle", "H1 of circle bundles is Z^2g + Z/|e|", [](Context& c) {
        for (int g = 1; g <= 3; ++g)
          for (int e : {-3, -1, 0, 1, 2, 4}) {
            const auto a = abelianize(circle_bundle(g, e));
            AbelianInvariants want{static_cast<std::size_t>(2 * g + (e == 0 ? 1 : 0)), {}};
            if (std::abs(e) >= 2) want.torsion = {std::abs(e)};
            c.expect(a == want, "g=" + str(g) + " e=" + str(e) + " gave " + to_string(a));
          }
      }));
  out.push_back(run_check("presentations.lens-sum", "H1 of L(2,1) # L(3,1) is Z/6", [](Context& c) {
    const auto a = abelianize(free_product(lens(2), lens(3)));
    c.expect(a == AbelianInvariants{0, {6}}, "got " + to_string(a));
  }));
  out.push_back(run_check("presentations.three-torus", "e=0, g=1 abelianizes to Z^3", [](Context& c) {
    const auto a = abelianize(circle_bundle(1, 0));
    c.expect(a == AbelianInvariants{3, {}}, "got " + to_string(a));
  }));
  out.push_back(run_check(
      "presentations.heegaard-diagram", "genus-3 diagram words give the bundle presentation",
      [](Context& c) {
        const auto d = circle_bundle_diagram(1, -1);
        std::vector<std::string> words = d.alpha;
        words.insert(words.end(), d.beta.begin(), d.beta.end());
        words.push_back(d.gamma);
        const auto p = heegaard_presentation(3, words, d.generators);
        c.expect(relators_equivalent(p, circle_bundle(1, -1)), "presentations differ: " + to_string(p));
      }));
}

void reeb_examples(std::vector<Check>& out) {
  out.push_back(run_check("reeb.cycle-rank-s2xs1", "S2xS1 graph has cycle rank 1", [](Context& c) {
    c.expect_eq(stats(s2xs1()).beta1, 1L, "beta1");
  }));
  out.push_back(run_check("reeb.cycle-rank-bundle", "bundle graph for g=2 has cycle rank 2",
                          [](Context& c) { c.expect_eq(stats(circle_bundle_seq(2, 3)).beta1, 2L, "beta1"); }));
  out.push_back(run_check("reeb.ordered-tree", "ordered genus-g graph is a tree with 2g degree-2 vertices",
                          [](Context& c) {
                            for (int g = 0; g <= 5; ++g) {
                              const auto s = stats(ordered(g));
                              c.expect_eq(s.beta1, 0L, "beta1 g=" + str(g));
                              c.expect_eq(s.d2, static_cast<std::size_t>(2 * g), "delta2 g=" + str(g));
                            }
                          }));
  out.push_back(run_check("reeb.bundle-census", "bundle graph has 2g+2 degree-2 and 2g degree-3 vertices",
                          [](Context& c) {
                            for (int g = 1; g <= 4; ++g) {
                              const auto s = stats(circle_bundle_seq(g, -1));
                              c.expect_eq(s.d2, static_cast<std::size_t>(2 * g + 2), "delta2 g=" + str(g));
                              c.expect_eq(s.d3, static_cast<std::size_t>(2 * g), "delta3 g=" + str(g));
                            }
                          }));
  out.push_back(run_check("reeb.betti-identity", "one minimum, one maximum, 2g merges/splits give beta1 = g",
                          [](Context& c) {
                            for (int g = 1; g <= 4; ++g) {
                              const auto r = run(circle_bundle_seq(g, 1));
                              const auto b = betti_identity_check(r.graph);
                              c.expect(b.pass, "identity failed g=" + str(g));
                              c.expect_eq(b.twice_formula, 2L * g, "formula g=" + str(g));
                            }
                          }));
  out.push_back(run_check("reeb.parity", "closed 3-manifold graphs have an even degree-2 count",
                          [](Context& c) {
                            for (const auto& s : {ordered(3), s2xs1(), circle_bundle_seq(3, 2),
                                                  canonical_sequence(5, 2)})
                              c.expect(parity_check(run(s).graph, 0), "odd delta2");
                          }));
  out.push_back(run_check("reeb.surface-rule", "surfaces: Delta_2 = chi mod 2", [](Context& c) {
    for (const auto& p : {sphere_profile(2), real_projective_profile(2), torus_profile(2)}) {
      const auto e = estimate(p);
      const long want = ((p.euler_char % 2) + 2) % 2;
      c.expect(e.exact && e.lower == want, p.name + ": " + to_string(e));
    }
  }));
  out.push_back(run_check(
      "reeb.canonical-pattern", "canonical form lists indices 0,1..1,(2,1)..,2..2,3", [](Context& c) {
        // Scrambled k1 = 3, r = 1 function: a genus increment above the split.
        HandleSequence s{{HandleEvent::h0(), HandleEvent::up(1), HandleEvent::split_of(1, 1, 0),
                          HandleEvent::up(3), HandleEvent::merge_of(2, 3), HandleEvent::down(4),
                          HandleEvent::down(4), HandleEvent::h3(4)}};
        const auto g = run(s).graph;
        const auto cf = canonical_form(g);
        c.expect(cf.indices() == std::vector<int>{0, 1, 1, 2, 1, 2, 2, 3}, "scrambled input");
        c.expect_eq(cycle_rank(cf), cycle_rank(g), "beta1");
        c.expect_eq(degree_census(cf).delta(2), degree_census(g).delta(2), "delta2");
        for (int k1 = 1; k1 <= 5; ++k1)
          for (int r = 0; r <= k1; ++r) {
            std::vector<int> want{0};
            want.insert(want.end(), static_cast<std::size_t>(k1 - r), 1);
            for (int i = 0; i < r; ++i) {
              want.push_back(2);
              want.push_back(1);
            }
            want.insert(want.end(), static_cast<std::size_t>(k1 - r), 2);
            want.push_back(3);
            const auto h = canonical_form(run(canonical_sequence(k1, r)).graph);
            c.expect(h.indices() == want, "k1=" + str(k1) + " r=" + str(r));
          }
      }));
  out.push_back(run_check("reeb.obstruction", "realization obstructions for bundle profiles", [](Context& c) {
    const auto tree = run(ordered(0)).graph;
    c.expect(realization_obstruction(tree, heisenberg_profile()).kind ==
                 ObstructionVerdict::Kind::obstructed,
             "tree vs Heisenberg not obstructed");
    for (int g = 1; g <= 3; ++g) {
      const auto me = circle_bundle_profile(g, 2);
      const auto wide = run(canonical_sequence(g + 1, g + 1)).graph;
      c.expect(realization_obstruction(wide, me).kind == ObstructionVerdict::Kind::obstructed,
               "beta1 = g+1 not obstructed, g=" + str(g));
      const auto own = run(circle_bundle_seq(g, 2)).graph;
      c.expect(realization_obstruction(own, me).kind == ObstructionVerdict::Kind::not_obstructed,
               "construction graph obstructed, g=" + str(g));
    }
  }));
}

void simulator_examples(std::vector<Check>& out) {
  out.push_back(run_check("handles.s2xs1", "split below merge gives beta1 = 1, Delta_2 = 0", [](Context& c) {
    const auto s = stats(s2xs1());
    c.expect_eq(s.beta1, 1L, "beta1");
    c.expect_eq(s.d2, std::size_t{0}, "delta2");
  }));
  out.push_back(run_check("handles.bundle", "bundle construction counts", [](Context& c) {
    for (int g = 1; g <= 4; ++g)
      for (int e : {-1, 0, 1, 3}) {
        const auto s = stats(circle_bundle_seq(g, e));
        const std::string at = " g=" + str(g) + " e=" + str(e);
        c.expect_eq(s.k[1], static_cast<std::size_t>(2 * g + 1), "k1" + at);
        c.expect_eq(s.k[2], static_cast<std::size_t>(2 * g + 1), "k2" + at);
        c.expect_eq(s.d3, static_cast<std::size_t>(2 * g), "delta3" + at);
        c.expect_eq(s.d2, static_cast<std::size_t>(2 * g + 2), "delta2" + at);
        c.expect_eq(s.beta1, static_cast<long>(g), "beta1" + at);
      }
  }));
  out.push_back(run_check("handles.canonical", "canonical sequence has Delta_2 = 2(k1 - r)", [](Context& c) {
    for (int k1 = 0; k1 <= 6; ++k1)
      for (int r = 0; r <= k1; ++r) {
        const auto s = stats(canonical_sequence(k1, r));
        c.expect_eq(s.d2, static_cast<std::size_t>(2 * (k1 - r)), "k1=" + str(k1) + " r=" + str(r));
        c.expect_eq(s.beta1, static_cast<long>(r), "beta1 k1=" + str(k1) + " r=" + str(r));
      }
  }));
  out.push_back(run_check("handles.connected-sum", "S2xS1 # S2xS1 gives beta1 = 2, Delta_2 = 0", [](Context& c) {
    const auto s = stats(connected_sum(s2xs1(), s2xs1()));
    c.expect_eq(s.beta1, 2L, "beta1");
    c.expect_eq(s.d2, std::size_t{0}, "delta2");
  }));
  out.push_back(run_check("handles.bundle-g1", "g=1, e=+-1: beta1 = 1, Delta_2 = 4, k1 = 3", [](Context& c) {
    for (int e : {-1, 1}) {
      const auto s = stats(circle_bundle_seq(1, e));
      c.expect_eq(s.beta1, 1L, "beta1");
      c.expect_eq(s.d2, std::size_t{4}, "delta2");
      c.expect_eq(s.k[1], std::size_t{3}, "k1");
    }
  }));
  out.push_back(run_check("cli.simulate-dot", "DOT export for the g=2, e=-1 construction", [](Context& c) {
    const auto r = run(circle_bundle_seq(2, -1));
    const auto dot = to_dot(r.graph);
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
      if (line.find("label=") != std::string::npos && line.find("->") == std::string::npos) ++nodes;
      if (line.find("->") != std::string::npos) ++edges;
    }
    c.expect_eq(nodes, r.graph.vertex_count(), "node lines");
    c.expect_eq(edges, r.graph.edge_count(), "edge lines");
    c.expect_eq(cycle_rank(r.graph), 2L, "beta1");
    c.expect_eq(r.census.delta(2), std::size_t{6}, "delta2");
    c.expect(dot == to_dot(r.graph), "DOT output not deterministic");
  }));
}

void expect_estimate(Context& c, const ManifoldProfile& p, long lower, std::optional<long> upper) {
  const auto e = estimate(p);
  c.expect(e.lower == lower && e.upper == upper,
           p.name + ": expected [" + str(lower) + ", " + (upper ? str(*upper) : "?") + "], got " +
               "[" + str(e.lower) + ", " + (e.upper ? str(*e.upper) : "?") + "]");
  c.expect(!upper || e.exact == (lower == *upper), p.name + ": exact flag");
}

void bounds_examples(std::vector<Check>& out) {
  out.push_back(run_check("bounds.rank-corank", "2(rank - corank) for lens sums and Sigma_g x S^k",
                          [](Context& c) {
                            c.expect_eq(*bound_rank_corank(lens_sum_profile(2, 3)).value, 4L, "L2#L3");
                            for (int g = 1; g <= 3; ++g)
                              for (int n = 3; n <= 5; ++n)
                                c.expect(*bound_rank_corank(surface_times_sphere_profile(g, n)).value >= 2 * g,
                                         "Sigma_g x S^k g=" + str(g));
                            c.expect_eq(*bound_rank_corank(sphere_profile(4)).value, 0L, "S^4");
                          }));
  out.push_back(run_check("bounds.homology", "homology bound for tori and homology spheres", [](Context& c) {
    for (int n = 3; n <= 6; ++n)
      c.expect_eq(*bound_homology(torus_profile(n), "Z").value, (1L << n) - 4, "T^" + str(n));
    c.expect_eq(*bound_homology(homology_sphere_profile(3), "Z").value, 0L, "homology sphere");
  }));
  out.push_back(run_check("bounds.category", "cat - 2 corank - 2", [](Context& c) {
    c.expect(!bound_category(real_projective_profile(2)).value, "surfaces must be skipped");
    for (int n = 3; n <= 8; ++n) {
      c.expect_eq(*bound_category(real_projective_profile(n)).value, static_cast<long>(n - 1), "RP^" + str(n));
      c.expect_eq(*bound_category(complex_projective_profile(n)).value, static_cast<long>(n - 1),
                  "CP^" + str(n));
    }
    c.expect(*bound_category(homology_sphere_profile(2)).value >= 2, "homology sphere");
  }));
  out.push_back(run_check("bounds.heegaard", "Heegaard bounds for bundles, homology spheres, S2xS1 sums",
                          [](Context& c) {
                            for (int g = 1; g <= 4; ++g) {
                              const auto p = circle_bundle_profile(g, 2);
                              c.expect_eq(*bound_heegaard(p).value, 2L * g + 2, "M_2 lower g=" + str(g));
                              c.expect_eq(*upper_heegaard(p).value, 2L * (2 * g + 1), "M_2 upper g=" + str(g));
                            }
                            for (int g = 2; g <= 5; ++g) expect_estimate(c, homology_sphere_profile(g), 2L * g, 2L * g);
                            for (int r = 1; r <= 4; ++r)
                              c.expect_eq(*bound_heegaard(s2xs1_sum_profile(r)).value, 0L, "#S2xS1");
                          }));
  out.push_back(run_check("bounds.omega", "2 Omega for the Heisenberg manifold and M_{+-1}", [](Context& c) {
    c.expect_eq(*bound_omega(heisenberg_profile()).value, 4L, "Heisenberg");
    for (int g = 1; g <= 4; ++g)
      for (int e : {-1, 1}) c.expect_eq(*bound_omega(circle_bundle_profile(g, e)).value, 4L, "M_+-1");
    c.expect(!bound_omega(s2xs1_sum_profile(2)).value, "free group must be skipped");
  }));
  out.push_back(run_check("bounds.estimate", "intervals for M_{+-1} and S2xS1 sums with a lens", [](Context& c) {
    expect_estimate(c, heisenberg_profile(), 4, 4);
    for (int g = 2; g <= 4; ++g)
      for (int e : {-1, 1}) expect_estimate(c, circle_bundle_profile(g, e), 2L * g, 2L * g + 2);
    expect_estimate(c, s2xs1_sum_lens_profile(3, 5), 2, 2);
  }));
  out.push_back(run_check("bounds.connected-sum", "Delta_2 under connected sum", [](Context& c) {
    expect_estimate(c, connected_sum(s2xs1_sum_profile(1), s2xs1_sum_profile(1)), 0, 0);
    for (int g1 = 2; g1 <= 3; ++g1)
      for (int g2 = 2; g2 <= 3; ++g2)
        expect_estimate(c, connected_sum(homology_sphere_profile(g1), homology_sphere_profile(g2)),
                        2L * (g1 + g2), 2L * (g1 + g2));
    for (int g = 1; g <= 3; ++g)
      expect_estimate(c, connected_sum(circle_bundle_profile(g, 2), s2xs1_sum_profile(1)), 2L * g + 2,
                      2L * g + 2);
  }));
  out.push_back(run_check("catalog.table", "catalog ranks, coranks and genera", [](Context& c) {
    for (int g = 1; g <= 4; ++g) {
      for (int e : {-2, 0, 2, 3}) {
        const auto p = circle_bundle_profile(g, e);
        c.expect(p.pi1_rank == 2L * g + 1 && p.pi1_corank == g && p.heegaard_genus == 2L * g + 1, p.name);
      }
      for (int e : {-1, 1}) {
        const auto p = circle_bundle_profile(g, e);
        c.expect(p.pi1_rank == 2L * g && p.heegaard_genus == 2L * g, p.name);
      }
    }
    for (int n = 2; n <= 6; ++n) {
      const auto p = torus_profile(n);
      c.expect(p.pi1_corank == 1, p.name + " corank");
      long binom = 1;
      for (int k = 1; k <= n - 1; ++k) {
        binom = binom * (n - k + 1) / k;
        c.expect_eq(p.homology_ranks.at("Z")[static_cast<std::size_t>(k - 1)], binom, p.name + " H" + str(k));
      }
    }
  }));
}

// ---------------------------------------------------------------------------
// Acceptance criteria

void criterion1(Context& c) {
  const auto t0 = Clock::now();
  for (int g = 1; g <= 3; ++g)
    for (int e : {-1, 1}) {
      const auto p = circle_bundle_rank2g(g, e);
      c.expect_eq(omega_fixed(p), static_cast<std::size_t>(2 * g), "omega_fixed rank-2g g=" + str(g));
      for (const auto& r : p.relators())
        c.expect_eq(support(r).size(), static_cast<std::size_t>(2 * g), "relator support g=" + str(g));
    }
  const double ms = since(t0);
  c.expect(ms < 1000, "omega_fixed took " + ms_text(ms));
  for (int g = 1; g <= 2; ++g)
    for (int e : {-1, 1}) {
      const auto s = omega_search(circle_bundle(g, e));
      c.expect_eq(s.omega, std::size_t{2}, "omega_search g=" + str(g) + " e=" + str(e));
      c.expect(s.certified, "omega_search not certified g=" + str(g));
      c.expect(omega_fixed(reorder(circle_bundle(g, e), s.generator_order, s.relator_order)) == s.omega,
               "witness order does not attain omega");
    }
  c.note = "omega_fixed in " + ms_text(ms);
}

void criterion2(Context& c) {
  for (int g = 1; g <= 4; ++g)
    for (int e = -5; e <= 5; ++e) {
      const auto a = abelianize(circle_bundle(g, e));
      AbelianInvariants want{static_cast<std::size_t>(2 * g + (e == 0 ? 1 : 0)), {}};
      if (std::abs(e) >= 2) want.torsion = {std::abs(e)};
      c.expect(a == want, "g=" + str(g) + " e=" + str(e) + ": " + to_string(a));
    }
}

void criterion3(Context& c) {
  const auto t0 = Clock::now();
  for (int g = 1; g <= 6; ++g)
    for (int e : {-2, -1, 0, 1, 5}) {
      const auto s = stats(circle_bundle_seq(g, e));
      const std::string at = " g=" + str(g) + " e=" + str(e);
      c.expect_eq(s.beta1, static_cast<long>(g), "beta1" + at);
      c.expect_eq(s.d2, static_cast<std::size_t>(2 * g + 2), "delta2" + at);
      c.expect_eq(s.d3, static_cast<std::size_t>(2 * g), "delta3" + at);
      c.expect_eq(s.k[1], static_cast<std::size_t>(2 * g + 1), "k1" + at);
      c.expect_eq(s.k[2], static_cast<std::size_t>(2 * g + 1), "k2" + at);
    }
  const double ms = since(t0);
  c.expect(ms < 1000, "took " + ms_text(ms));
  c.note = ms_text(ms);
}

void criterion4(Context& c) {
  const auto t0 = Clock::now();
  constexpr std::uint64_t base_seed = 20240917;
  std::size_t longest = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto seq = random_closed_sequence(base_seed + i, 40);
    longest = std::max(longest, seq.events.size());
    c.expect(seq.events.size() <= 40, "too many events");
    const auto r = run(seq);
    const std::string at = " (seed " + std::to_string(base_seed + i) + ")";
    c.expect(r.closed, "not closed" + at);
    const auto b = betti_identity_check(r.graph);
    c.expect(b.pass, "cycle rank identity" + at);
    c.expect_eq(b.cycle_rank, oracle::spanning_tree_cycle_rank(r.graph), "spanning tree" + at);
    c.expect_eq(r.census.delta(2) + r.census.delta(3), r.k[1] + r.k[2], "degree sum" + at);
    c.expect_eq(static_cast<long>(r.k[0]) - static_cast<long>(r.k[1]) + static_cast<long>(r.k[2]) -
                    static_cast<long>(r.k[3]),
                0L, "alternating sum" + at);
    c.expect(r.census.delta(2) % 2 == 0, "odd delta2" + at);
  }
  const double ms = since(t0);
  c.expect(ms < 10000, "took " + ms_text(ms));
  c.note = "500 sequences, longest " + str(longest) + " events, " + ms_text(ms);
}

void criterion5(Context& c) {
  for (int n = 3; n <= 8; ++n) {
    c.expect_eq(estimate(real_projective_profile(n)).lower, static_cast<long>(n - 1), "RP^" + str(n));
    c.expect_eq(estimate(complex_projective_profile(n)).lower, static_cast<long>(n - 1), "CP^" + str(n));
  }
  for (int n = 3; n <= 6; ++n)
    c.expect_eq(estimate(torus_profile(n)).lower, (1L << n) - 4, "T^" + str(n));
  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{2, 7}, std::pair{4, 9}})
    c.expect_eq(estimate(lens_sum_profile(a, b)).lower, 4L, "L_p # L_q");
  for (int g = 1; g <= 4; ++g)
    for (int e : {-3, -2, 0, 2, 5}) expect_estimate(c, circle_bundle_profile(g, e), 2L * g + 2, 2L * g + 2);
  for (int g = 2; g <= 5; ++g) expect_estimate(c, homology_sphere_profile(g), 2L * g, 2L * g);
  expect_estimate(c, heisenberg_profile(), 4, 4);
  for (int g = 1; g <= 4; ++g)
    for (int e : {-1, 1})
      expect_estimate(c, circle_bundle_profile(g, e), std::max(2L * g, 4L), 2L * g + 2);
}

void criterion6(Context& c) {
  // Pool entries: (profile, kind) with kind 0 = S2xS1 or S^3, 1 = lens,
  // 2 = anything else.
  std::vector<std::pair<ManifoldProfile, int>> pool{
      {s2xs1_sum_profile(1), 0}, {sphere_profile(3), 0},      {lens_profile(2), 1},
      {lens_profile(3), 1},      {lens_profile(5), 1},        {lens_profile(7), 1},
      {heisenberg_profile(), 2}, {torus_profile(3), 2},       {circle_bundle_profile(1, 2), 2},
      {circle_bundle_profile(2, 0), 2}, {circle_bundle_profile(1, -3), 2}};
  std::mt19937_64 rng(6061);
  auto pick_kind = [&](int kind) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pool[i].second == kind) idx.push_back(i);
    return idx[std::uniform_int_distribution<std::size_t>(0, idx.size() - 1)(rng)];
  };
  std::size_t zeros = 0, twos = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<std::size_t> parts;
    for (std::size_t j = 0; j < n; ++j) {
      if (i % 3 == 0)
        parts.push_back(pick_kind(0));
      else if (i % 3 == 1)
        parts.push_back(j == 0 ? pick_kind(1) : pick_kind(0));
      else
        parts.push_back(std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng));
    }
    std::shuffle(parts.begin(), parts.end(), rng);
    ManifoldProfile p = pool[parts[0]].first;
    int lenses = pool[parts[0]].second == 1, others = pool[parts[0]].second == 2;
    for (std::size_t j = 1; j < parts.size(); ++j) {
      p = connected_sum(p, pool[parts[j]].first);
      lenses += pool[parts[j]].second == 1;
      others += pool[parts[j]].second == 2;
    }
    const bool want0 = lenses == 0 && others == 0;
    const bool want2 = lenses == 1 && others == 0;
    zeros += want0;
    twos += want2;
    const auto e = estimate(p);
    c.expect_eq(e.exact && e.lower == 0, want0, p.name + " exact 0");
    c.expect_eq(e.exact && e.lower == 2, want2, p.name + " exact 2");
  }
  c.note = "50 sums: " + str(zeros) + " exact 0, " + str(twos) + " exact 2, " + str(50 - zeros - twos) +
           " other";
}

void criterion7(Context& c) {
  const std::vector<Word> rel{commutator(gen(0), gen(1))};
  const auto brute = oracle::closure_products(rel, 2, 2, 3);
  IntMatrix m(1, 2);
  const auto ev = exponent_vector(rel[0], 2);
  for (std::size_t j = 0; j < 2; ++j) m(0, j) = ev[j];
  std::size_t members = 0, abel = 0, unknown = 0, targets = 0;
  for (const auto& l : oracle::all_words(2, 6)) {
    ++targets;
    const Word t = decode(l);
    const auto v = member_bounded({rel, t, 2, 3});
    const bool in_brute = brute.contains(l);
    const std::string w = to_string(t, Alphabet::numbered("x", 2));
    using S = ClosureVerdict::Status;
    if (in_brute) {
      c.expect(v.status == S::member, w + " is a product but verdict is " + to_string(v.status));
      c.expect(evaluate(v.witness, rel) == t, w + " witness does not evaluate");
      ++members;
    } else {
      c.expect(v.status != S::member, w + " reported member");
    }
    if (v.status == S::not_member) {
      c.expect(v.certificate == ClosureVerdict::Certificate::abelianization, w + " exhaustive certificate");
      c.expect(!snf_lattice_member(m, exponent_vector(t, 2), c), w + " lies in the relator lattice");
      ++abel;
    } else {
      c.expect(snf_lattice_member(m, exponent_vector(t, 2), c), w + " outside lattice yet not rejected");
    }
    unknown += v.status == S::unknown;
  }
  c.note = str(targets) + " targets: " + str(members) + " member, " + str(abel) + " abelianization, " +
           str(unknown) + " unknown";
}

void criterion8(Context& c) {
  std::mt19937_64 rng(88);
  std::size_t trivial = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t rank = i % 2 ? 3 : 2;
    Word r;
    do {
      r = random_reduced(rng, rank, std::uniform_int_distribution<std::size_t>(1, 8)(rng));
    } while (!is_cyclically_reduced(r));
    const auto sup = support(r);
    auto it = sup.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, sup.size() - 1)(rng));
    ProbeOptions o;
    o.rank = rank;
    o.samples = 1000;
    o.seed = 1000 + static_cast<std::uint64_t>(i);
    const auto rep = freiheitssatz_probe(r, *it, o);
    trivial += rep.trivial_skipped;
    c.expect(rep.counterexamples.empty(), "counterexample for relator " +
                                              to_string(r, Alphabet::numbered("x", rank)));
  }
  ProbeOptions bad;
  bad.rank = 3;
  bad.check_precondition = false;
  const auto rep = freiheitssatz_probe(commutator(gen(0), gen(1)) * gen(0, 1), 2, bad);
  c.expect(!rep.counterexamples.empty(), "corrupted probe found nothing");
  c.note = "20 probes clean (" + str(trivial) + " trivial products skipped); corrupted probe: " +
           str(rep.counterexamples.size()) + " counterexamples";
}

void criterion9(Context& c) {
  std::mt19937_64 rng(99);
  auto scramble = [&](std::size_t rank, std::size_t moves) {
    WordTuple t{rank, {}};
    for (std::size_t i = 0; i < rank; ++i) t.entries.push_back(gen(i));
    for (std::size_t k = 0; k < moves; ++k) {
      NielsenMove m;
      m.kind = static_cast<NielsenMove::Kind>(std::uniform_int_distribution<int>(0, 3)(rng));
      m.target = std::uniform_int_distribution<std::size_t>(0, rank - 1)(rng);
      do m.other = std::uniform_int_distribution<std::size_t>(0, rank - 1)(rng);
      while (m.other == m.target);
      m.exp = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      t = apply_move(t, m);
    }
    return t;
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t rank = 2 + static_cast<std::size_t>(i % 3);
    const auto t = scramble(rank, std::uniform_int_distribution<std::size_t>(1, 12)(rng));
    c.expect(is_basis(t), "scrambled basis rejected: " + to_string(t, Alphabet::numbered("x", rank)));
  }
  c.expect(!is_basis({2, {gen(0) * gen(0), gen(1)}}), "(a^2, b) accepted");
  c.expect(!is_basis({2, {gen(0), gen(0)}}), "(a, a) accepted");

  const auto f2 = Alphabet::numbered("x", 2);
  std::size_t bases = 0;
  for (int i = 0; i < 20; ++i) {
    WordTuple t = i % 2 ? scramble(2, std::uniform_int_distribution<std::size_t>(1, 3)(rng))
                        : WordTuple{2, {random_reduced(rng, 2, 2 + static_cast<std::size_t>(i % 3)),
                                        random_reduced(rng, 2, 1 + static_cast<std::size_t>(i % 4))}};
    const oracle::StallingsGraph sg(2, t.entries);
    const bool basis = is_basis(t);
    c.expect_eq(basis, sg.is_everything(), "Stallings disagrees on " + to_string(t, f2));
    const auto ball = oracle::subgroup_ball(t.entries, 8, 16);
    for (const auto& l : ball) c.expect(sg.contains(decode(l)), "ball escapes the subgroup");
    for (const auto& u : nielsen_reduce(t).reduced.entries)
      c.expect(sg.contains(u), "reduced entry outside the subgroup");
    if (basis) {
      ++bases;
      c.expect(ball.contains({1}) && ball.contains({2}), "generators not reached for " + to_string(t, f2));
    } else {
      c.expect(!sg.contains(gen(0)) || !sg.contains(gen(1)), "non-basis contains both generators");
    }
  }
  c.note = "200 scrambles; oracle cases: " + str(bases) + " bases, " + str(20 - bases) + " non-bases";
}

void criterion10(Context& c) {
  std::size_t violations = 0;
  for (std::size_t k1 = 1; k1 <= 6; ++k1)
    for (std::size_t r = 1; r <= k1; ++r) {
      const auto seq = canonical_sequence(static_cast<int>(k1), static_cast<int>(r));
      const auto widths = ones_before_twos(seq);
      const std::string at = " k1=" + str(k1) + " r=" + str(r);
      const auto rep = thm45_omega_consistency(seq, window_presentation(k1, widths));
      c.expect(rep.pass, "windowed presentation fails" + at);
      c.expect(rep.omega <= std::max<std::size_t>(1, k1 - r), "omega above bound" + at);
      for (std::size_t i = 0; i < widths.size(); ++i) {
        if (widths[i] >= k1) continue;
        auto bad = widths;
        ++bad[i];
        ++violations;
        c.expect(!thm45_omega_consistency(seq, window_presentation(k1, bad)).pass,
                 "violation of relator " + str(i + 1) + " accepted" + at);
      }
    }
  c.note = "21 sequences, " + str(violations) + " single-generator violations rejected";
}

struct Criterion {
  const char* title;
  void (*body)(Context&);
};

const Criterion criteria[] = {
    {"Omega of rank-2g presentations and reordered circle bundles", criterion1},
    {"abelianization of circle bundles", criterion2},
    {"simulator counts for the circle-bundle construction", criterion3},
    {"identities on 500 random closed sequences", criterion4},
    {"bounds table", criterion5},
    {"exact 0 / exact 2 classification over 50 connected sums", criterion6},
    {"closure oracle against brute force", criterion7},
    {"Freiheitssatz probes", criterion8},
    {"Nielsen basis detection", criterion9},
    {"Omega bound from the handle order", criterion10},
};

}  // namespace

std::vector<Check> reference_checks() {
  std::vector<Check> out;
  presentation_examples(out);
  reeb_examples(out);
  simulator_examples(out);
  bounds_examples(out);
  return out;
}

Check acceptance_check(int k) {
  if (k < 1 || k > 10) throw std::out_of_range("criterion number must be 1..10");
  const auto& cr = criteria[k - 1];
  return run_check("criterion." + std::to_string(k), cr.title, cr.body);
}

std::vector<Check> acceptance_checks() {
  std::vector<Check> out;
  for (int k = 1; k <= 10; ++k) out.push_back(acceptance_check(k));
  return out;
}

std::string format_table(const std::vector<Check>& checks) {
  std::size_t id_w = 0, title_w = 0;
  for (const auto& c : checks) {
    id_w = std::max(id_w, c.id.size());
    title_w = std::max(title_w, c.title.size());
  }
  std::ostringstream out;
  for (const auto& c : checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%9.1f ms", c.millis);
    out << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(id_w - c.id.size() + 2, ' ') << c.title
        << std::string(title_w - c.title.size() + 2, ' ') << ms;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace reeblab::verify
