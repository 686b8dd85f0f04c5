#include "reeblab/reeb_graph.hpp"

#include <algorithm>
#include <numeric>

#include "reeblab/error.hpp"

namespace reeblab {

namespace {

std::string vertex_name(std::size_t v) { return "v" + std::to_string(v); }

// Mutable working copy used by the rewriting passes.
struct Draft {
  int dim;
  std::vector<int> indices;
  std::vector<ReebGraph::Edge> edges;
  std::vector<bool> alive;

  explicit Draft(const ReebGraph& g)
      : dim(g.dim()), indices(g.indices()), edges(g.edges()), alive(g.vertex_count(), true) {}

  std::vector<std::size_t> ins(std::size_t v) const {
    std::vector<std::size_t> r;
    for (auto [a, b] : edges)
      if (b == v) r.push_back(a);
    return r;
  }
  std::vector<std::size_t> outs(std::size_t v) const {
    std::vector<std::size_t> r;
    for (auto [a, b] : edges)
      if (a == v) r.push_back(b);
    return r;
  }
  void erase_edge(std::size_t a, std::size_t b) {
    auto it = std::find(edges.begin(), edges.end(), ReebGraph::Edge{a, b});
    edges.erase(it);
  }
  void kill(std::size_t v) {
    alive[v] = false;
    std::erase_if(edges, [v](const auto& e) { return e.first == v || e.second == v; });
  }

  // Rebuilds with vertices laid out in `order` (old ids, alive only).
  ReebGraph build(const std::vector<std::size_t>& order) const {
    std::vector<std::size_t> pos(indices.size(), 0);
    std::vector<int> idx;
    for (std::size_t k = 0; k < order.size(); ++k) {
      pos[order[k]] = k;
      idx.push_back(indices[order[k]]);
    }
    std::vector<ReebGraph::Edge> e;
    for (auto [a, b] : edges) e.emplace_back(pos[a], pos[b]);
    return ReebGraph(dim, std::move(idx), std::move(e));
  }
  ReebGraph build() const {
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) order.push_back(v);
    return build(order);
  }
};

}  // namespace

ReebGraph::ReebGraph(int dim, std::vector<int> indices, std::vector<Edge> edges)
    : dim_(dim), indices_(std::move(indices)), edges_(std::move(edges)) {
  if (dim_ < 2) throw Error("Reeb graph dimension must be at least 2");
  for (std::size_t v = 0; v < indices_.size(); ++v)
    if (indices_[v] < 0 || indices_[v] > dim_)
      throw Error("vertex " + vertex_name(v) + " has index " + std::to_string(indices_[v]) +
                  " outside [0, " + std::to_string(dim_) + "]");
  in_.assign(indices_.size(), 0);
  out_.assign(indices_.size(), 0);
  for (auto [a, b] : edges_) {
    if (a >= indices_.size() || b >= indices_.size())
      throw Error("edge endpoint out of range");
    if (a >= b)
      throw Error("edge " + vertex_name(a) + " -> " + vertex_name(b) +
                  " does not go upward");
    ++out_[a];
    ++in_[b];
  }
  std::sort(edges_.begin(), edges_.end());
  if (dim_ == 3)
    for (std::size_t v = 0; v < indices_.size(); ++v)
      if (degree(v) > 3)
        throw Error("vertex " + vertex_name(v) + " has degree " + std::to_string(degree(v)) +
                    "; a simple Morse function on a 3-manifold has degree at most 3");
}

bool ReebGraph::connected() const {
  const std::size_t n = indices_.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (auto [a, b] : edges_) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

void validate(const ReebGraph& g) {
  if (!g.connected()) throw Error("Reeb graph is not connected");
  const int n = g.dim();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto in = g.in_degree(v), out = g.out_degree(v);
    const int idx = g.index(v);
    auto bad = [&](const std::string& why) {
      throw Error("vertex " + vertex_name(v) + " (index " + std::to_string(idx) + ", in " +
                  std::to_string(in) + ", out " + std::to_string(out) + "): " + why);
    };
    switch (in + out) {
      case 1:
        if (out == 1 && idx != 0) bad("a source must have index 0");
        if (in == 1 && idx != n) bad("a sink must have index " + std::to_string(n));
        break;
      case 2:
        if (in != 1) bad("a degree-2 vertex needs one edge in and one out");
        if (idx <= 0 || idx >= n) bad("a degree-2 vertex cannot be an extremum");
        break;
      case 3:
        if (in == 2 && out == 1) {
          if (idx != 1) bad("a merge vertex must have index 1");
        } else if (in == 1 && out == 2) {
          if (idx != n - 1) bad("a split vertex must have index " + std::to_string(n - 1));
        } else {
          bad("a degree-3 vertex must be a merge or a split");
        }
        break;
      default:
        bad("unsupported degree " + std::to_string(in + out));
    }
  }
}

long cycle_rank(const ReebGraph& g) {
  if (!g.connected()) throw Error("cycle rank needs a connected graph");
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
}

DegreeCensus degree_census(const ReebGraph& g) {
  DegreeCensus c;
  c.by_index.assign(static_cast<std::size_t>(g.dim()) + 1, 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(v);
    if (d >= c.by_degree.size()) c.by_degree.resize(d + 1, 0);
    ++c.by_degree[d];
    ++c.by_index[static_cast<std::size_t>(g.index(v))];
    c.max_degree = std::max(c.max_degree, d);
  }
  if (g.dim() == 3) {
    if (c.max_degree > 3) throw Error("maximum degree exceeds 3");
    if (c.delta(2) + c.delta(3) != c.k(1) + c.k(2))
      throw Error("degree-2 and degree-3 vertices (" + std::to_string(c.delta(2) + c.delta(3)) +
                  ") do not match index-1 and index-2 critical points (" +
                  std::to_string(c.k(1) + c.k(2)) + ")");
  }
  return c;
}

BettiIdentity betti_identity_check(const ReebGraph& g) {
  BettiIdentity b;
  b.cycle_rank = cycle_rank(g);
  DegreeCensus c;
  c.by_index.assign(static_cast<std::size_t>(g.dim()) + 1, 0);
  std::size_t d3 = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    ++c.by_index[static_cast<std::size_t>(g.index(v))];
    if (g.degree(v) == 3) ++d3;
  }
  const long extrema = static_cast<long>(c.k(0) + c.k(static_cast<std::size_t>(g.dim())));
  b.twice_formula = -extrema + static_cast<long>(d3) + 2;
  b.pass = 2 * b.cycle_rank == b.twice_formula;
  return b;
}

bool parity_check(const ReebGraph& g, long euler_char) {
  std::size_t d2 = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) ++d2;
  return static_cast<long>(d2 % 2) == ((euler_char % 2) + 2) % 2;
}

ReebGraph reduce_extrema(const ReebGraph& g) {
  if (!g.connected()) throw Error("reduce_extrema needs a connected graph");
  Draft d(g);
  const int top = g.dim();
  auto count = [&](int idx) {
    std::size_t k = 0;
    for (std::size_t v = 0; v < d.indices.size(); ++v)
      if (d.alive[v] && d.indices[v] == idx && d.ins(v).size() + d.outs(v).size() == 1) ++k;
    return k;
  };

  // Sources: s -> m with m a merge (u -> m, m -> w) becomes u -> w.
  while (count(0) > 1) {
    bool done = false;
    for (std::size_t s = 0; s < d.indices.size() && !done; ++s) {
      if (!d.alive[s] || d.indices[s] != 0) continue;
      auto so = d.outs(s);
      if (so.size() != 1 || !d.ins(s).empty()) continue;
      const auto m = so[0];
      auto mi = d.ins(m);
      auto mo = d.outs(m);
      if (mi.size() != 2 || mo.size() != 1) continue;
      const auto u = mi[0] == s ? mi[1] : mi[0];
      const auto w = mo[0];
      d.kill(s);
      d.kill(m);
      d.edges.emplace_back(u, w);
      std::sort(d.edges.begin(), d.edges.end());
      done = true;
    }
    if (!done) throw Error("no source is attached to a merge vertex; extrema cannot be reduced");
  }
  // Sinks, dually, highest rank first.
  while (count(top) > 1) {
    bool done = false;
    for (std::size_t t = d.indices.size(); t-- > 0 && !done;) {
      if (!d.alive[t] || d.indices[t] != top) continue;
      auto ti = d.ins(t);
      if (ti.size() != 1 || !d.outs(t).empty()) continue;
      const auto s = ti[0];
      auto si = d.ins(s);
      auto so = d.outs(s);
      if (si.size() != 1 || so.size() != 2) continue;
      const auto w = so[0] == t ? so[1] : so[0];
      const auto u = si[0];
      d.kill(t);
      d.kill(s);
      d.edges.emplace_back(u, w);
      std::sort(d.edges.begin(), d.edges.end());
      done = true;
    }
    if (!done) throw Error("no sink is attached to a split vertex; extrema cannot be reduced");
  }
  return d.build();
}

ReebGraph canonical_form(const ReebGraph& g) {
  if (g.dim() != 3) throw Error("canonical form is defined for dimension 3");
  std::vector<std::size_t> mins, maxs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1 && g.index(v) == 0) mins.push_back(v);
    if (g.degree(v) == 1 && g.index(v) == 3) maxs.push_back(v);
  }
  if (mins.size() != 1 || maxs.size() != 1)
    throw Error("canonical form needs exactly one minimum and one maximum");
  validate(g);
  const auto lo = mins[0], hi = maxs[0];
  if (lo != 0 || hi + 1 != g.vertex_count())
    throw Error("the minimum and maximum must be the first and last vertices");

  Draft d(g);
  std::vector<std::size_t> ups, downs, rest;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == lo || v == hi) continue;
    if (g.degree(v) == 2 && g.index(v) == 1)
      ups.push_back(v);
    else if (g.degree(v) == 2 && g.index(v) == 2)
      downs.push_back(v);
    else
      rest.push_back(v);
  }
  auto splice_out = [&](std::size_t v) {
    const auto u = d.ins(v)[0], w = d.outs(v)[0];
    d.erase_edge(u, v);
    d.erase_edge(v, w);
    d.edges.emplace_back(u, w);
  };
  for (auto v : ups) splice_out(v);
  for (auto v : downs) splice_out(v);

  auto chain = [&](std::size_t from_vertex, bool above, const std::vector<std::size_t>& vs) {
    if (vs.empty()) return;
    if (above) {
      const auto x = d.outs(from_vertex)[0];
      d.erase_edge(from_vertex, x);
      std::size_t prev = from_vertex;
      for (auto v : vs) {
        d.edges.emplace_back(prev, v);
        prev = v;
      }
      d.edges.emplace_back(prev, x);
    } else {
      const auto x = d.ins(from_vertex)[0];
      d.erase_edge(x, from_vertex);
      std::size_t prev = x;
      for (auto v : vs) {
        d.edges.emplace_back(prev, v);
        prev = v;
      }
      d.edges.emplace_back(prev, from_vertex);
    }
  };
  chain(lo, true, ups);
  chain(hi, false, downs);

  std::vector<std::size_t> order{lo};
  order.insert(order.end(), ups.begin(), ups.end());
  order.insert(order.end(), rest.begin(), rest.end());
  order.insert(order.end(), downs.begin(), downs.end());
  order.push_back(hi);
  return d.build(order);
}

}  // namespace reeblab
