#include <algorithm>
#include <map>
#include <random>

#include "reeblab/error.hpp"
#include "reeblab/handle_sim.hpp"

namespace reeblab {

using E = HandleEvent;

HandleSequence ordered(int g) {
  if (g < 0) throw Error("genus must be non-negative");
  HandleSequence s{{E::h0()}};
  for (int i = 0; i < g; ++i) s.events.push_back(E::up(1));
  for (int i = 0; i < g; ++i) s.events.push_back(E::down(1));
  s.events.push_back(E::h3(1));
  return s;
}

HandleSequence s2xs1() {
  return HandleSequence{{E::h0(), E::split_of(1, 0, 0), E::merge_of(2, 3), E::h3(4)}};
}

HandleSequence circle_bundle_seq(int g, int e) {
  (void)e;
  if (g < 1) throw Error("circle bundle construction needs g >= 1");
  HandleSequence s{{E::h0()}};
  std::size_t next = 2;
  std::size_t main = 1;
  for (int i = 0; i <= g; ++i) s.events.push_back(E::up(main));
  int genus = g + 1;
  std::vector<std::size_t> pieces;
  for (int i = 0; i < g; ++i) {
    s.events.push_back(E::split_of(main, genus - 1, 1));
    main = next++;
    pieces.push_back(next++);
    --genus;
  }
  for (auto piece : pieces) {
    s.events.push_back(E::merge_of(main, piece));
    main = next++;
  }
  for (int i = 0; i <= g; ++i) s.events.push_back(E::down(main));
  s.events.push_back(E::h3(main));
  return s;
}

HandleSequence canonical_sequence(int k1, int r) {
  if (k1 < 0 || r < 0 || r > k1) throw Error("canonical sequence needs 0 <= r <= k1");
  HandleSequence s{{E::h0()}};
  std::size_t next = 2;
  std::size_t main = 1;
  const int genus = k1 - r;
  for (int i = 0; i < genus; ++i) s.events.push_back(E::up(main));
  for (int i = 0; i < r; ++i) {
    if (genus == 0)
      s.events.push_back(E::split_of(main, 0, 0));
    else
      s.events.push_back(E::split_of(main, genus - 1, 1));
    const std::size_t x = next++, y = next++;
    s.events.push_back(E::merge_of(x, y));
    main = next++;
  }
  for (int i = 0; i < genus; ++i) s.events.push_back(E::down(main));
  s.events.push_back(E::h3(main));
  return s;
}

HandleSequence connected_sum(const HandleSequence& s1, const HandleSequence& s2) {
  const auto r1 = run(s1);
  const auto r2 = run(s2);
  if (!r1.closed || !r2.closed) throw Error("connected sum needs closed sequences");
  const auto& last = s1.events.back();
  const auto& first = s2.events.front();
  if (last.kind != E::Kind::death || first.kind != E::Kind::birth)
    throw Error("connected sum needs a final 3-handle and an initial 0-handle");
  const std::size_t n1 = r1.final_state.next_id() - 1;
  auto remap = [&](std::size_t id) { return id == 1 ? last.a : n1 + id - 1; };

  HandleSequence out;
  out.events.assign(s1.events.begin(), s1.events.end() - 1);
  for (auto it = s2.events.begin() + 1; it != s2.events.end(); ++it) {
    E e = *it;
    switch (e.kind) {
      case E::Kind::birth: break;
      case E::Kind::merge:
        e.a = remap(e.a);
        e.b = remap(e.b);
        break;
      default: e.a = remap(e.a);
    }
    out.events.push_back(e);
  }
  return out;
}

HandleSequence random_closed_sequence(std::uint64_t seed, std::size_t max_events) {
  if (max_events < 2) throw Error("a closed sequence needs at least two events");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::size_t length = 2 + pick(max_events - 1);

  HandleSequence seq{{E::h0()}};
  SurfaceState state = apply_event(SurfaceState{}, E::h0()).state;
  // Connectivity classes of the partial graph, keyed by live component.
  std::map<std::size_t, std::size_t> piece{{1, 1}};
  std::size_t next_piece = 2;

  auto piece_count = [&] {
    std::vector<std::size_t> ps;
    for (auto& [c, p] : piece) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    return static_cast<std::size_t>(std::unique(ps.begin(), ps.end()) - ps.begin());
  };
  // Fewest events needed to close: every genus must be removed and every
  // component capped or merged away.
  auto cost = [&] { return static_cast<std::size_t>(state.total_genus()) + state.components().size(); };

  while (!state.empty()) {
    const std::size_t remaining = length - seq.events.size();
    std::vector<E> options;
    std::vector<std::size_t> ids;
    for (auto& [id, c] : state.components()) ids.push_back(id);
    const std::size_t pieces = piece_count();
    auto last_of_piece = [&](std::size_t id) {
      return std::count_if(piece.begin(), piece.end(),
                           [&](auto& kv) { return kv.second == piece.at(id); }) == 1;
    };

    // Moves that raise the cost by one must leave room to close afterwards.
    if (cost() + 2 <= remaining) {
      options.push_back(E::h0());
      for (auto id : ids) {
        const int g = state.components().at(id).genus;
        options.push_back(E::up(id));
        options.push_back(E::split_of(id, static_cast<int>(pick(static_cast<std::size_t>(g) + 1)), 0));
      }
    }
    for (auto id : ids) {
      if (state.components().at(id).genus > 0) options.push_back(E::down(id));
      if (state.components().at(id).genus == 0 && (pieces == 1 || !last_of_piece(id)))
        options.push_back(E::h3(id));
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (pieces == 1 || piece.at(ids[i]) != piece.at(ids[j]))
          options.push_back(E::merge_of(ids[i], ids[j]));

    // When the budget is tight, only moves that make progress are kept.
    if (cost() >= remaining) {
      std::erase_if(options, [](const E& e) {
        return e.kind == E::Kind::birth || e.kind == E::Kind::genus_up || e.kind == E::Kind::split;
      });
      if (pieces > 1)
        std::erase_if(options, [&](const E& e) {
          return e.kind != E::Kind::merge;
        });
    }
    if (options.empty()) throw Error("internal error: random sequence generator is stuck");
    E e = options[pick(options.size())];
    if (e.kind == E::Kind::split) {
      const int g = state.components().at(e.a).genus;
      e.g2 = g - e.g1;
    }

    const std::size_t before_id = state.next_id();
    state = apply_event(state, e).state;
    seq.events.push_back(e);
    switch (e.kind) {
      case E::Kind::birth: piece[before_id] = next_piece++; break;
      case E::Kind::merge: {
        const auto pa = piece.at(e.a), pb = piece.at(e.b);
        piece.erase(e.a);
        piece.erase(e.b);
        for (auto& [c, p] : piece)
          if (p == pb) p = pa;
        piece[before_id] = pa;
        break;
      }
      case E::Kind::split: {
        const auto p = piece.at(e.a);
        piece.erase(e.a);
        piece[before_id] = p;
        piece[before_id + 1] = p;
        break;
      }
      case E::Kind::death: piece.erase(e.a); break;
      default: break;
    }
  }
  return seq;
}

}  // namespace reeblab
