#include "oracles.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace reeblab::oracle {

Letters encode(const Word& w) {
  Letters out;
  for (auto l : w) out.push_back(static_cast<int>(l.gen + 1) * l.exp);
  return out;
}

Letters free_reduce(const Letters& w) {
  Letters out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Letters invert(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Letters concat(const Letters& a, const Letters& b) {
  Letters out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::vector<Letters> all_words(std::size_t rank, std::size_t n) {
  std::vector<Letters> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (int g = 1; g <= static_cast<int>(rank); ++g)
      for (int x : {g, -g}) {
        if (!out[i].empty() && out[i].back() == -x) continue;
        Letters w = out[i];
        w.push_back(x);
        out.push_back(w);
      }
  }
  return out;
}

std::set<Letters> closure_products(const std::vector<Word>& relators, std::size_t rank,
                                   std::size_t radius, std::size_t factors) {
  std::vector<Letters> conj;
  for (const auto& r : relators) {
    const Letters rr = free_reduce(encode(r));
    for (const Letters& base : {rr, invert(rr)})
      for (const auto& t : all_words(rank, radius))
        conj.push_back(concat(concat(t, base), invert(t)));
  }
  std::set<Letters> result{{}};
  std::vector<Letters> layer{{}};
  for (std::size_t k = 0; k < factors; ++k) {
    std::vector<Letters> next;
    for (const auto& p : layer)
      for (const auto& c : conj) next.push_back(concat(p, c));
    result.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return result;
}

StallingsGraph::StallingsGraph(std::size_t rank, const std::vector<Word>& words) : rank_(rank) {
  struct E {
    std::size_t u;
    int label;
    std::size_t v;
  };
  std::vector<E> raw;
  std::size_t n = 1;
  for (const auto& w : words) {
    const Letters l = free_reduce(encode(w));
    if (l.empty()) continue;
    std::size_t at = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::size_t to = i + 1 == l.size() ? 0 : n++;
      raw.push_back({at, l[i], to});
      at = to;
    }
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Keep the base point as the representative of its class.
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b == 0) std::swap(a, b);
    parent[b] = a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<std::size_t, int>, std::size_t> out;
    for (const auto& e : raw) {
      for (auto [from, lab, to] : {std::tuple{find(e.u), e.label, find(e.v)},
                                   std::tuple{find(e.v), -e.label, find(e.u)}}) {
        auto [it, fresh] = out.emplace(std::pair{from, lab}, to);
        if (!fresh && find(it->second) != to) {
          unite(it->second, to);
          changed = true;
        }
      }
      if (changed) break;
    }
  }
  std::map<std::size_t, std::size_t> index{{0, 0}};
  for (std::size_t v = 0; v < n; ++v) index.emplace(find(v), index.size());
  vertices_ = index.size();
  edges_.assign(vertices_, {});
  std::set<std::tuple<std::size_t, int, std::size_t>> seen;
  for (const auto& e : raw) {
    auto u = index.at(find(e.u)), v = index.at(find(e.v));
    int label = e.label;
    if (label < 0) {
      std::swap(u, v);
      label = -label;
    }
    if (seen.insert({u, label, v}).second) {
      edges_[u].push_back({label, v});
      edges_[v].push_back({-label, u});
    }
  }
}

bool StallingsGraph::contains(const Word& w) const {
  std::size_t at = 0;
  for (int x : free_reduce(encode(w))) {
    bool moved = false;
    for (auto [lab, to] : edges_[at])
      if (lab == x) {
        at = to;
        moved = true;
        break;
      }
    if (!moved) return false;
  }
  return at == 0;
}

bool StallingsGraph::is_everything() const {
  if (vertices_ != 1) return false;
  for (int g = 1; g <= static_cast<int>(rank_); ++g) {
    bool has = false;
    for (auto [lab, to] : edges_[0]) has = has || lab == g;
    if (!has) return false;
  }
  return true;
}

std::set<Letters> subgroup_ball(const std::vector<Word>& words, std::size_t depth,
                                std::size_t max_len) {
  std::vector<Letters> gens;
  for (const auto& w : words) {
    gens.push_back(free_reduce(encode(w)));
    gens.push_back(invert(gens.back()));
  }
  std::set<Letters> seen{{}};
  std::vector<Letters> frontier{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Letters> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Letters q = concat(p, g);
        if (q.size() <= max_len && seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

long spanning_tree_cycle_rank(const ReebGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge id)
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].push_back({edges[i].second, i});
    adj[edges[i].second].push_back({edges[i].first, i});
  }
  std::vector<bool> seen(n, false), tree(edges.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto [w, id] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        tree[id] = true;
        queue.push_back(w);
      }
  }
  for (bool s : seen)
    if (!s) return -1;
  long extra = 0;
  for (bool t : tree)
    if (!t) ++extra;
  return extra;
}

}  // namespace reeblab::oracle
