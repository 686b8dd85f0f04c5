#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reeblab/presentation.hpp"
#include "reeblab/reeb_graph.hpp"

namespace reeblab {

/// One handle attachment. Component ids refer to level-set components and
/// are assigned 1, 2, 3, ... in creation order.
struct HandleEvent {
  enum class Kind {
    birth,       // h0: new sphere component
    genus_up,    // h1 +g @a
    merge,       // h1 merge @a @b
    split,       // h2 split @a (g1,g2)
    genus_down,  // h2 -g @a
    death,       // h3 @a
  };
  Kind kind = Kind::birth;
  std::size_t a = 0;
  std::size_t b = 0;
  int g1 = 0;
  int g2 = 0;

  int index() const noexcept;

  static HandleEvent h0() { return {Kind::birth}; }
  static HandleEvent up(std::size_t c) { return {Kind::genus_up, c}; }
  static HandleEvent merge_of(std::size_t c1, std::size_t c2) { return {Kind::merge, c1, c2}; }
  static HandleEvent split_of(std::size_t c, int g1, int g2) {
    return {Kind::split, c, 0, g1, g2};
  }
  static HandleEvent down(std::size_t c) { return {Kind::genus_down, c}; }
  static HandleEvent h3(std::size_t c) { return {Kind::death, c}; }

  friend bool operator==(const HandleEvent&, const HandleEvent&) = default;
};

struct HandleSequence {
  std::vector<HandleEvent> events;
  friend bool operator==(const HandleSequence&, const HandleSequence&) = default;
};

class SurfaceState;
struct StepResult;
StepResult apply_event(const SurfaceState& s, const HandleEvent& e);

/// Live level-set components: id -> genus, plus the Reeb vertex each
/// component currently hangs from.
class SurfaceState {
 public:
  struct Component {
    int genus = 0;
    std::size_t vertex = 0;
  };

  const std::map<std::size_t, Component>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  std::size_t next_id() const noexcept { return next_id_; }
  std::size_t next_vertex() const noexcept { return next_vertex_; }
  int total_genus() const;
  /// `{c1: 1, c3: 0}`
  std::string to_string() const;

 private:
  friend StepResult apply_event(const SurfaceState&, const HandleEvent&);
  std::map<std::size_t, Component> components_;
  std::size_t next_id_ = 1;
  std::size_t next_vertex_ = 0;
};

/// Reeb vertex contributed by one event: its Morse index and the earlier
/// vertices it is joined to from below.
struct VertexSpec {
  int index = 0;
  std::vector<std::size_t> below;
};

struct StepResult {
  SurfaceState state;
  VertexSpec vertex;
};

/// Throws Error for an unknown target, a genus decrement on a sphere, a
/// 3-handle on a component of positive genus, a partition that does not
/// add up, or a merge of a component with itself.
StepResult apply_event(const SurfaceState& s, const HandleEvent& e);

struct RunResult {
  ReebGraph graph;
  std::array<std::size_t, 4> k{};  // critical points per index
  DegreeCensus census;
  bool closed = false;
  SurfaceState final_state;
};

/// Replays the sequence from the empty state. A closed sequence (ending
/// with no components) must produce a connected, valid graph. Throws
/// Error naming the first bad event together with the state before it,
/// including any event after the level set has become empty.
RunResult run(const HandleSequence& seq);

/// One event per line: `h0`, `h1 +g @c3`, `h1 merge @c1 @c2`,
/// `h2 split @c1 (1,1)`, `h2 -g @c4`, `h3 @c5`. Blank lines and text after
/// `#` are ignored.
HandleSequence parse_script(std::string_view text);
std::string to_string(const HandleEvent& e);
std::string to_script(const HandleSequence& seq);

// Builders.

/// 0, g genus increments, g genus decrements, 3; g >= 0.
HandleSequence ordered(int g);
/// 0, split (0,0), merge, 3.
HandleSequence s2xs1();
/// The circle-bundle construction: g+1 genus increments, g splits each
/// cutting off a genus-1 piece, g merges, g+1 genus decrements. The
/// Euler number does not affect the level-set bookkeeping; g >= 1.
HandleSequence circle_bundle_seq(int g, int e);
/// k1-r genus increments, then r split/merge pairs, then k1-r genus
/// decrements; 0 <= r <= k1.
HandleSequence canonical_sequence(int k1, int r);
/// Drops the last 3-handle of s1 and the first 0-handle of s2, then
/// concatenates, gluing the sphere that s2 starts from onto the sphere s1
/// would have capped. Both must be closed.
HandleSequence connected_sum(const HandleSequence& s1, const HandleSequence& s2);

/// A random valid closed sequence with at most max_events events
/// (max_events >= 2) and a connected Reeb graph.
HandleSequence random_closed_sequence(std::uint64_t seed, std::size_t max_events);

struct Thm45Report {
  bool pass = false;
  std::size_t k1 = 0;
  long beta1 = 0;
  /// max(1, k1 - beta1).
  std::size_t bound = 0;
  std::size_t omega = 0;
  /// 1-handles preceding each 2-handle, in 2-handle order.
  std::vector<std::size_t> ones_before;
  bool mechanism = false;
  bool windows = false;
  std::vector<std::string> failures;
};

/// Checks that `p`, read as the presentation induced by `seq` (generators
/// in 1-handle order, relators in 2-handle order), is consistent with the
/// handle order: the i-th of the first beta1 2-handles comes after at most
/// k1 - beta1 + i - 1 1-handles, every relator only uses generators whose
/// 1-handles precede its 2-handle, and omega_fixed(p) <= k1 - beta1.
///
/// Throws Error when seq is not closed with one minimum and one maximum, or
/// when the generator/relator counts do not match k1/k2.
Thm45Report thm45_omega_consistency(const HandleSequence& seq, const Presentation& p);

}  // namespace reeblab
