#include "reeblab/obstruction.hpp"

#include "reeblab/bounds.hpp"
#include "reeblab/error.hpp"

namespace reeblab {

std::string to_string(ObstructionVerdict::Kind k) {
  switch (k) {
    case ObstructionVerdict::Kind::obstructed: return "OBSTRUCTED";
    case ObstructionVerdict::Kind::not_obstructed: return "NOT-OBSTRUCTED";
    case ObstructionVerdict::Kind::insufficient_data: return "INSUFFICIENT-DATA";
  }
  return "?";
}

ObstructionVerdict realization_obstruction(const ReebGraph& g, const ManifoldProfile& p) {
  if (g.dim() != p.dim)
    throw Error("graph dimension " + std::to_string(g.dim()) + " differs from profile dimension " +
                std::to_string(p.dim));
  std::size_t d2 = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 3) throw Error("vertex v" + std::to_string(v) + " has degree above 3");
    if (g.degree(v) == 2) ++d2;
  }
  const long delta2 = static_cast<long>(d2);

  ObstructionVerdict v;
  bool fired = false;
  auto note = [&](bool bad, const std::string& what) {
    fired = fired || bad;
    v.reasons.push_back((bad ? "fails: " : "passes: ") + what);
  };

  const auto est = estimate(p);
  note(delta2 < est.lower, "Delta_2 = " + std::to_string(delta2) + " against lower bound " +
                               std::to_string(est.lower));
  note(static_cast<long>(d2 % 2) != ((p.euler_char % 2) + 2) % 2,
       "parity of Delta_2 against chi = " + std::to_string(p.euler_char));
  if (!g.connected()) throw Error("realization check needs a connected graph");
  const long beta1 = cycle_rank(g);
  if (p.pi1_corank)
    note(beta1 > *p.pi1_corank, "cycle rank " + std::to_string(beta1) + " against corank " +
                                    std::to_string(*p.pi1_corank));
  else
    v.missing.push_back("pi1_corank");

  if (fired)
    v.kind = ObstructionVerdict::Kind::obstructed;
  else if (!v.missing.empty())
    v.kind = ObstructionVerdict::Kind::insufficient_data;
  else
    v.kind = ObstructionVerdict::Kind::not_obstructed;
  return v;
}

}  // namespace reeblab
