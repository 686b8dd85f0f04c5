#pragma once

// Reference implementations used to cross-check the library. They share
// no code with it: words are plain integer vectors where letter +k / -k
// stands for generator k-1 and its inverse.

#include <cstddef>
#include <set>
#include <vector>

#include "reeblab/reeb_graph.hpp"
#include "reeblab/word.hpp"

namespace reeblab::oracle {

using Letters = std::vector<int>;

Letters encode(const Word& w);
Letters free_reduce(const Letters& w);
Letters invert(const Letters& w);
Letters concat(const Letters& a, const Letters& b);

/// All reduced words of length <= n over `rank` generators.
std::vector<Letters> all_words(std::size_t rank, std::size_t n);

/// Every value of a product of at most `factors` conjugates t r^{+-1} t^-1
/// with |t| <= radius, by plain enumeration.
std::set<Letters> closure_products(const std::vector<Word>& relators, std::size_t rank,
                                   std::size_t radius, std::size_t factors);

/// Folded subgroup graph of <words> in F_rank.
class StallingsGraph {
 public:
  StallingsGraph(std::size_t rank, const std::vector<Word>& words);
  bool contains(const Word& w) const;
  /// The subgroup is the whole free group.
  bool is_everything() const;
  std::size_t vertex_count() const { return vertices_; }

 private:
  std::size_t rank_;
  std::size_t vertices_ = 1;
  // edges_[v] holds (signed label, target) pairs, one per label after folding.
  std::vector<std::vector<std::pair<int, std::size_t>>> edges_;
};

/// Elements reachable as products of at most `depth` entries^{+-1}, capped
/// at word length `max_len`.
std::set<Letters> subgroup_ball(const std::vector<Word>& words, std::size_t depth,
                                std::size_t max_len);

/// Number of edges outside a breadth-first spanning forest; -1 when the
/// graph is disconnected.
long spanning_tree_cycle_rank(const ReebGraph& g);

}  // namespace reeblab::oracle
