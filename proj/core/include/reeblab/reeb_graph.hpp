#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reeblab {

/// Directed multigraph whose vertices are critical points listed by
/// increasing critical value. Each vertex carries a Morse index in
/// [0, dim]; every edge goes from a lower to a higher vertex.
class ReebGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  ReebGraph() = default;
  /// Throws Error on an out-of-range index label, an edge that does not
  /// increase, or (for dim 3) a vertex of degree above 3.
  ReebGraph(int dim, std::vector<int> indices, std::vector<Edge> edges);

  int dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return indices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  int index(std::size_t v) const { return indices_.at(v); }
  const std::vector<int>& indices() const noexcept { return indices_; }
  /// Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t in_degree(std::size_t v) const { return in_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_.at(v); }
  std::size_t degree(std::size_t v) const { return in_.at(v) + out_.at(v); }
  bool connected() const;

  friend bool operator==(const ReebGraph& a, const ReebGraph& b) {
    return a.dim_ == b.dim_ && a.indices_ == b.indices_ && a.edges_ == b.edges_;
  }

 private:
  int dim_ = 3;
  std::vector<int> indices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_;
  std::vector<std::size_t> out_;
};

/// Checks the degree/index table of a complete graph: connected; degree-1
/// vertices are index-0 sources or index-dim sinks; degree-2 vertices have
/// one edge in, one out and an index strictly between; degree-3 vertices
/// are merges (2 in, 1 out, index 1) or splits (1 in, 2 out, index
/// dim-1). Throws Error naming the first offending vertex.
void validate(const ReebGraph& g);

/// |E| - |V| + 1. Throws Error for a disconnected graph.
long cycle_rank(const ReebGraph& g);

struct DegreeCensus {
  std::vector<std::size_t> by_degree;  // by_degree[d] = vertices of degree d
  std::vector<std::size_t> by_index;   // by_index[i] = k_i
  std::size_t max_degree = 0;

  std::size_t delta(std::size_t d) const { return d < by_degree.size() ? by_degree[d] : 0; }
  std::size_t k(std::size_t i) const { return i < by_index.size() ? by_index[i] : 0; }
};

/// Degree and index counts. For dim 3 also checks that the degree-2 and
/// degree-3 counts add up to k1 + k2 and that no degree exceeds 3,
/// throwing Error otherwise.
DegreeCensus degree_census(const ReebGraph& g);

struct BettiIdentity {
  long cycle_rank = 0;
  /// 2 * (-(k_0 + k_dim)/2 + delta_3/2 + 1), kept doubled to stay integral.
  long twice_formula = 0;
  bool pass = false;
};

/// Compares the cycle rank with the value predicted from the extremum and
/// degree-3 counts.
BettiIdentity betti_identity_check(const ReebGraph& g);

/// delta_2 == chi (mod 2).
bool parity_check(const ReebGraph& g, long euler_char);

/// Cancels sources attached to merge vertices (lowest rank first), then
/// sinks attached to split vertices (highest rank first), until a single
/// minimum and maximum remain. Throws Error when extrema remain that cannot
/// be cancelled this way.
ReebGraph reduce_extrema(const ReebGraph& g);

/// Moves every degree-2 index-1 vertex to a chain directly above the
/// minimum and every degree-2 index-2 vertex to a chain directly below the
/// maximum, keeping relative orders. Requires dim 3 and a single minimum
/// and maximum; throws Error otherwise.
ReebGraph canonical_form(const ReebGraph& g);

/// Graphviz text with labels `v{rank}: idx={index} deg={degree}`.
std::string to_dot(const ReebGraph& g, std::string_view name = "reeb");

/// `{"dim": 3, "vertices": [{"index": 0}, ...], "edges": [[0, 1], ...]}`.
std::string to_json(const ReebGraph& g);
/// Throws ParseError on malformed JSON and Error on an invalid graph.
ReebGraph reeb_from_json(std::string_view text);

}  // namespace reeblab
