#include "reeblab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "reeblab/catalog.hpp"
#include "reeblab/error.hpp"

namespace reeblab {

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

bool closed_orientable_3(const ManifoldProfile& p) { return p.dim == 3 && p.orientable; }

BoundValue skip(std::string id, std::string why) { return {std::move(id), std::nullopt, std::move(why)}; }

std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if ((a && !*a) || (b && !*b)) return false;
  if (a && b) return true;
  return std::nullopt;
}

std::optional<long> add(std::optional<long> a, std::optional<long> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

bool holds_equality(const Delta2Estimate& e, const std::string& id) {
  if (!e.exact) return false;
  return std::any_of(e.provenance.begin(), e.provenance.end(), [&](const auto& entry) {
    return !entry.upper && entry.id == id && entry.value == e.lower;
  });
}

}  // namespace

BoundValue bound_rank_corank(const ManifoldProfile& p) {
  const std::string id = "rank-corank";
  if (p.dim < 3) return skip(id, "needs dimension >= 3");
  if (!p.pi1_rank || !p.pi1_corank) return skip(id, "needs pi1 rank and corank");
  return {id, std::max(0L, 2 * (*p.pi1_rank - *p.pi1_corank)), "2(rank - corank)"};
}

BoundValue bound_homology(const ManifoldProfile& p, const std::string& ring) {
  const std::string id = "homology[" + ring + "]";
  if (p.dim < 3) return skip(id, "needs dimension >= 3");
  auto it = p.homology_ranks.find(ring);
  if (it == p.homology_ranks.end()) return skip(id, "no homology ranks over " + ring);
  if (!p.pi1_corank) return skip(id, "needs pi1 corank");
  const long sum = std::accumulate(it->second.begin(), it->second.end(), 0L);
  return {id, std::max(0L, sum - 2 * *p.pi1_corank),
          "sum of ranks " + std::to_string(sum) + " - 2 corank"};
}

BoundValue bound_category(const ManifoldProfile& p) {
  const std::string id = "category";
  if (p.dim < 3) return skip(id, "needs dimension >= 3");
  if (!p.ls_category || !p.pi1_corank) return skip(id, "needs category and pi1 corank");
  return {id, std::max(0L, *p.ls_category - 2 * *p.pi1_corank - 2), "cat - 2 corank - 2"};
}

BoundValue bound_heegaard(const ManifoldProfile& p) {
  const std::string id = "heegaard";
  if (!closed_orientable_3(p)) return skip(id, "needs a closed orientable 3-manifold");
  if (!p.heegaard_genus || !p.pi1_corank) return skip(id, "needs Heegaard genus and corank");
  return {id, std::max(0L, 2 * (*p.heegaard_genus - *p.pi1_corank)), "2(g - corank)"};
}

BoundValue upper_heegaard(const ManifoldProfile& p) {
  const std::string id = "heegaard-upper";
  if (!closed_orientable_3(p)) return skip(id, "needs a closed orientable 3-manifold");
  if (!p.heegaard_genus) return skip(id, "needs Heegaard genus");
  return {id, 2 * *p.heegaard_genus, "ordered function with k1 = g"};
}

std::optional<long> effective_omega_lower(const ManifoldProfile& p) {
  std::optional<long> w = p.omega_lower;
  if (p.pi1.torsion_free == true && p.pi1.trivial == false && p.pi1.free == false)
    w = std::max(w.value_or(0), 2L);
  return w;
}

BoundValue bound_omega(const ManifoldProfile& p) {
  const std::string id = "omega";
  if (!closed_orientable_3(p)) return skip(id, "needs a closed orientable 3-manifold");
  if (p.pi1.free != false) return skip(id, "undefined unless pi1 is known to be non-free");
  auto w = effective_omega_lower(p);
  if (!w) return skip(id, "no omega lower bound");
  const bool filled = !p.omega_lower || *p.omega_lower < *w;
  return {id, 2 * *w,
          std::string("2 * omega, omega >= ") + std::to_string(*w) +
              (filled ? " (torsion-free rule)" : "")};
}

Delta2Estimate estimate(const ManifoldProfile& p, const std::string& ring) {
  validate(p);
  Delta2Estimate e;
  std::vector<long> lowers{0};
  std::vector<long> uppers;
  auto lower = [&](const std::string& id, long v, const std::string& note) {
    e.provenance.push_back({id, v, false, note});
    lowers.push_back(v);
  };
  auto upper = [&](const std::string& id, long v, const std::string& note) {
    e.provenance.push_back({id, v, true, note});
    uppers.push_back(v);
  };
  auto take = [&](const BoundValue& b, bool is_upper = false) {
    if (!b.value)
      e.skipped.push_back(b.id + ": " + b.note);
    else if (is_upper)
      upper(b.id, *b.value, b.note);
    else
      lower(b.id, *b.value, b.note);
  };

  if (p.dim == 2) {
    const long v = mod2(p.euler_char);
    lower("surface", v, "chi mod 2");
    upper("surface", v, "chi mod 2");
  } else {
    take(bound_rank_corank(p));
    for (const auto& [r, ranks] : p.homology_ranks)
      if (ring.empty() || ring == r) take(bound_homology(p, r));
    if (!ring.empty() && !p.homology_ranks.contains(ring))
      e.skipped.push_back("homology[" + ring + "]: no homology ranks over " + ring);
    take(bound_category(p));
    take(bound_heegaard(p));
    take(bound_omega(p));
    take(upper_heegaard(p), true);

    if (closed_orientable_3(p) && p.prime_summands) {
      const auto& ss = *p.prime_summands;
      const auto lenses = std::count_if(ss.begin(), ss.end(), [](const PrimeSummand& s) {
        return s.kind == PrimeSummand::Kind::lens;
      });
      const auto others = std::count_if(ss.begin(), ss.end(), [](const PrimeSummand& s) {
        return s.kind == PrimeSummand::Kind::other;
      });
      if (others == 0 && lenses == 0) {
        lower("classification", 0, "connected sum of S2xS1");
        upper("classification", 0, "connected sum of S2xS1");
      } else if (others == 0 && lenses == 1) {
        lower("classification", 2, "S2xS1 summands and one lens space");
        upper("classification", 2, "S2xS1 summands and one lens space");
      } else {
        lower("classification", 4, "neither a sum of S2xS1 nor such a sum with one lens space");
      }
      if (lenses == 0 && p.heegaard_genus && p.pi1_corank &&
          *p.heegaard_genus == *p.pi1_corank + 1)
        lower("lens-free-gap", 4, "g = corank + 1 without lens summands");
    } else if (closed_orientable_3(p)) {
      e.skipped.push_back("classification: prime decomposition unknown");
    }
  }

  if (p.delta2_lower) lower("given", *p.delta2_lower, p.provenance.count("delta2_lower")
                                                          ? p.provenance.at("delta2_lower")
                                                          : "input");
  if (p.delta2_upper) upper("given", *p.delta2_upper, p.provenance.count("delta2_upper")
                                                          ? p.provenance.at("delta2_upper")
                                                          : "input");
  if (p.witness) {
    if (p.dim != 3) throw Error("handle-sequence witnesses are 3-dimensional");
    const auto res = run(build_witness(*p.witness));
    if (!res.closed) throw Error("witness '" + *p.witness + "' is not closed");
    upper("construction", static_cast<long>(res.census.delta(2)), *p.witness);
  }

  e.lower = *std::max_element(lowers.begin(), lowers.end());
  if (mod2(e.lower) != mod2(p.euler_char)) {
    ++e.lower;
    e.provenance.push_back({"parity", e.lower, false, "Delta_2 = chi mod 2"});
  }
  if (!uppers.empty()) {
    long u = *std::min_element(uppers.begin(), uppers.end());
    if (mod2(u) != mod2(p.euler_char)) {
      --u;
      e.provenance.push_back({"parity", u, true, "Delta_2 = chi mod 2"});
    }
    e.upper = u;
  }
  if (e.upper && e.lower > *e.upper)
    throw Error("profile '" + p.name + "' is inconsistent: lower bound " +
                std::to_string(e.lower) + " exceeds upper bound " + std::to_string(*e.upper));
  e.exact = e.upper && *e.upper == e.lower;
  return e;
}

ManifoldProfile connected_sum(const ManifoldProfile& p, const ManifoldProfile& q) {
  if (p.dim != q.dim) throw Error("connected sum needs equal dimensions");
  const auto ep = estimate(p);
  const auto eq = estimate(q);

  ManifoldProfile s;
  s.name = p.name + " # " + q.name;
  s.dim = p.dim;
  s.orientable = p.orientable && q.orientable;
  const long sphere_chi = 1 + (p.dim % 2 == 0 ? 1 : -1);
  s.euler_char = p.euler_char + q.euler_char - sphere_chi;
  s.pi1_rank = add(p.pi1_rank, q.pi1_rank);
  s.pi1_corank = add(p.pi1_corank, q.pi1_corank);
  if (p.dim == 3) s.heegaard_genus = add(p.heegaard_genus, q.heegaard_genus);
  if (p.orientable || q.orientable)
    for (const auto& [ring, a] : p.homology_ranks) {
      auto it = q.homology_ranks.find(ring);
      if (it == q.homology_ranks.end()) continue;
      std::vector<long> sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + it->second[i];
      s.homology_ranks[ring] = sum;
    }
  s.pi1.torsion_free = both(p.pi1.torsion_free, q.pi1.torsion_free);
  s.pi1.trivial = both(p.pi1.trivial, q.pi1.trivial);
  s.pi1.free = both(p.pi1.free, q.pi1.free);
  if (p.prime_summands && q.prime_summands) {
    auto ss = *p.prime_summands;
    ss.insert(ss.end(), q.prime_summands->begin(), q.prime_summands->end());
    s.prime_summands = std::move(ss);
  }
  if (ep.upper && eq.upper) {
    s.delta2_upper = *ep.upper + *eq.upper;
    s.provenance["delta2_upper"] = "sum of upper bounds";
  }
  for (const char* id : {"rank-corank", "heegaard", "homology[Z]"}) {
    if (holds_equality(ep, id) && holds_equality(eq, id)) {
      s.delta2_lower = ep.lower + eq.lower;
      s.provenance["delta2_lower"] = std::string("additivity, both attain ") + id;
      break;
    }
  }
  if (p.witness && q.witness) s.witness = *p.witness + " # " + *q.witness;
  for (const char* f : {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks"})
    s.provenance[f] = "additivity";
  validate(s);
  return s;
}

std::string to_string(const Delta2Estimate& e) {
  std::ostringstream out;
  for (const auto& entry : e.provenance)
    out << (entry.upper ? "  upper " : "  lower ") << entry.id << " = " << entry.value << "  ("
        << entry.note << ")\n";
  for (const auto& s : e.skipped) out << "  skipped " << s << "\n";
  out << "Delta_2 in [" << e.lower << ", " << (e.upper ? std::to_string(*e.upper) : "?") << "]";
  if (e.exact) out << " exact " << e.lower;
  out << "\n";
  return out.str();
}

}  // namespace reeblab
