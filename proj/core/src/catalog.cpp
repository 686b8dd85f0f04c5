#include "reeblab/catalog.hpp"

#include <charconv>

#include "reeblab/error.hpp"

namespace reeblab {

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Field of the smallest prime dividing q; H_1 and H_2 of a lens space
// with fundamental group Z/q have rank 1 over it.
std::string torsion_field(int q) {
  int l = 2;
  while (q % l != 0) ++l;
  return "F" + std::to_string(l);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

void tag(ManifoldProfile& p, std::initializer_list<const char*> fields, const char* source) {
  for (auto f : fields) p.provenance[f] = source;
}

GroupTraits traits(std::optional<bool> torsion_free, std::optional<bool> trivial,
                   std::optional<bool> free) {
  return {torsion_free, trivial, free};
}

std::vector<int> parse_ints(std::string_view args, std::string_view whole) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= args.size() && !args.empty()) {
    auto comma = args.find(',', pos);
    if (comma == std::string_view::npos) comma = args.size();
    auto tok = args.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error("bad parameter '" + std::string(tok) + "' in '" + std::string(whole) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ManifoldProfile sphere_profile(int n) {
  require(n >= 2, "sphere dimension must be at least 2");
  ManifoldProfile p;
  p.name = "S^" + std::to_string(n);
  p.dim = n;
  p.euler_char = n % 2 == 0 ? 2 : 0;
  p.pi1_rank = 0;
  p.pi1_corank = 0;
  p.homology_ranks["Z"] = std::vector<long>(static_cast<std::size_t>(n - 1), 0);
  p.ls_category = 2;
  p.pi1 = traits(true, true, true);
  if (n == 3) {
    p.heegaard_genus = 0;
    p.prime_summands = std::vector<PrimeSummand>{};
    p.witness = "ordered:0";
  } else {
    p.delta2_upper = 0;
    p.provenance["delta2_upper"] = "construction: height function";
  }
  tag(p, {"pi1_rank", "pi1_corank", "homology_ranks", "ls_category"}, "literature");
  return p;
}

ManifoldProfile real_projective_profile(int n) {
  require(n >= 2, "projective space dimension must be at least 2");
  ManifoldProfile p;
  p.name = "RP^" + std::to_string(n);
  p.dim = n;
  p.orientable = n % 2 == 1;
  p.euler_char = n % 2 == 0 ? 1 : 0;
  p.pi1_rank = 1;
  p.pi1_corank = 0;
  p.homology_ranks["Z"] = std::vector<long>(static_cast<std::size_t>(n - 1), 0);
  p.homology_ranks["F2"] = std::vector<long>(static_cast<std::size_t>(n - 1), 1);
  p.ls_category = n + 1;
  p.pi1 = traits(false, false, false);
  if (n == 3) {
    p.heegaard_genus = 1;
    p.prime_summands = std::vector{PrimeSummand::lens(2)};
    p.witness = "ordered:1";
  }
  tag(p, {"pi1_rank", "pi1_corank", "homology_ranks", "ls_category"}, "literature");
  return p;
}

ManifoldProfile complex_projective_profile(int n) {
  require(n >= 1, "complex projective dimension must be at least 1");
  ManifoldProfile p;
  p.name = "CP^" + std::to_string(n);
  p.dim = 2 * n;
  p.euler_char = n + 1;
  p.pi1_rank = 0;
  p.pi1_corank = 0;
  std::vector<long> h(static_cast<std::size_t>(2 * n - 1), 0);
  for (int i = 2; i <= 2 * n - 1; i += 2) h[static_cast<std::size_t>(i - 1)] = 1;
  p.homology_ranks["Z"] = h;
  p.ls_category = n + 1;
  p.pi1 = traits(true, true, true);
  tag(p, {"pi1_rank", "pi1_corank", "homology_ranks", "ls_category"}, "literature");
  return p;
}

ManifoldProfile torus_profile(int n) {
  require(n >= 2, "torus dimension must be at least 2");
  ManifoldProfile p;
  p.name = "T^" + std::to_string(n);
  p.dim = n;
  p.euler_char = 0;
  p.pi1_rank = n;
  p.pi1_corank = 1;
  std::vector<long> h;
  for (int k = 1; k <= n - 1; ++k) h.push_back(binom(n, k));
  p.homology_ranks["Z"] = h;
  p.ls_category = n + 1;
  p.pi1 = traits(true, false, false);
  if (n == 3) {
    p.heegaard_genus = 3;
    p.prime_summands = std::vector{PrimeSummand::other("T^3")};
    p.witness = "ordered:3";
  }
  tag(p, {"pi1_rank", "pi1_corank", "homology_ranks", "ls_category"}, "literature");
  return p;
}

ManifoldProfile surface_times_sphere_profile(int g, int n) {
  require(g >= 1 && n >= 3, "surface x sphere needs g >= 1 and n >= 3");
  ManifoldProfile p;
  p.name = "Sigma_" + std::to_string(g) + " x S^" + std::to_string(n - 2);
  p.dim = n;
  p.euler_char = (2 - 2L * g) * (n % 2 == 0 ? 2 : 0);
  p.pi1_rank = 2L * g + (n == 3 ? 1 : 0);
  p.pi1_corank = g;
  // Kuenneth: H(Sigma_g) = 1, 2g, 1 in degrees 0..2 and H(S^{n-2}) = 1 in
  // degrees 0 and n-2.
  std::vector<long> h(static_cast<std::size_t>(n + 1), 0);
  const long sigma[3] = {1, 2L * g, 1};
  for (int i = 0; i <= 2; ++i) {
    h[static_cast<std::size_t>(i)] += sigma[i];
    h[static_cast<std::size_t>(i + n - 2)] += sigma[i];
  }
  p.homology_ranks["Z"] = std::vector<long>(h.begin() + 1, h.end() - 1);
  p.pi1 = traits(true, false, false);
  if (n == 3) {
    p.heegaard_genus = 2L * g + 1;
    p.prime_summands = std::vector{PrimeSummand::other(p.name)};
    p.witness = "circle-bundle:" + std::to_string(g) + ",0";
  }
  tag(p, {"pi1_rank", "pi1_corank", "homology_ranks"}, "literature");
  return p;
}

ManifoldProfile lens_profile(int q) {
  require(q >= 2, "lens space needs p >= 2");
  ManifoldProfile p;
  p.name = "L(" + std::to_string(q) + ",1)";
  p.pi1_rank = 1;
  p.pi1_corank = 0;
  p.heegaard_genus = 1;
  p.homology_ranks["Z"] = {0, 0};
  p.homology_ranks[torsion_field(q)] = {1, 1};
  p.ls_category = 4;
  p.pi1 = traits(false, false, false);
  p.prime_summands = std::vector{PrimeSummand::lens(q)};
  p.witness = "ordered:1";
  tag(p, {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks", "ls_category"},
      "literature");
  return p;
}

ManifoldProfile lens_sum_profile(int a, int b) {
  require(a >= 2 && b >= 2, "lens spaces need p >= 2");
  ManifoldProfile p;
  p.name = "L(" + std::to_string(a) + ",1) # L(" + std::to_string(b) + ",1)";
  p.pi1_rank = 2;
  p.pi1_corank = 0;
  p.heegaard_genus = 2;
  p.homology_ranks["Z"] = {0, 0};
  p.pi1 = traits(false, false, false);
  p.prime_summands = std::vector{PrimeSummand::lens(a), PrimeSummand::lens(b)};
  p.witness = "ordered:2";
  tag(p, {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks"}, "literature");
  return p;
}

ManifoldProfile s2xs1_sum_profile(int r) {
  require(r >= 0, "number of summands must be non-negative");
  if (r == 0) return sphere_profile(3);
  ManifoldProfile p;
  p.name = "#" + std::to_string(r) + " S2xS1";
  p.pi1_rank = r;
  p.pi1_corank = r;
  p.heegaard_genus = r;
  p.homology_ranks["Z"] = {r, r};
  p.pi1 = traits(true, false, true);
  p.prime_summands = std::vector<PrimeSummand>(static_cast<std::size_t>(r), PrimeSummand::s2xs1());
  p.witness = "canonical:" + std::to_string(r) + "," + std::to_string(r);
  tag(p, {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks"}, "literature");
  return p;
}

ManifoldProfile s2xs1_sum_lens_profile(int r, int q) {
  require(r >= 0 && q >= 2, "needs r >= 0 and a lens order >= 2");
  ManifoldProfile p;
  p.name = "#" + std::to_string(r) + " S2xS1 # L(" + std::to_string(q) + ",1)";
  p.pi1_rank = r + 1;
  p.pi1_corank = r;
  p.heegaard_genus = r + 1;
  p.homology_ranks["Z"] = {r, r};
  p.homology_ranks[torsion_field(q)] = {r + 1, r + 1};
  p.pi1 = traits(false, false, false);
  std::vector<PrimeSummand> ss(static_cast<std::size_t>(r), PrimeSummand::s2xs1());
  ss.push_back(PrimeSummand::lens(q));
  p.prime_summands = ss;
  p.witness = "canonical:" + std::to_string(r + 1) + "," + std::to_string(r);
  tag(p, {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks"}, "literature");
  return p;
}

ManifoldProfile circle_bundle_profile(int g, int e) {
  require(g >= 1, "circle bundle profile needs g >= 1");
  const bool unit = e == 1 || e == -1;
  ManifoldProfile p;
  p.name = "M_" + std::to_string(e) + " over Sigma_" + std::to_string(g);
  p.pi1_rank = unit ? 2L * g : 2L * g + 1;
  p.pi1_corank = g;
  p.heegaard_genus = unit ? 2L * g : 2L * g + 1;
  const long b1 = e == 0 ? 2L * g + 1 : 2L * g;
  p.homology_ranks["Z"] = {b1, b1};
  p.pi1 = traits(true, false, false);
  p.prime_summands = std::vector{PrimeSummand::other(p.name)};
  p.witness = "circle-bundle:" + std::to_string(g) + "," + std::to_string(e);
  tag(p, {"pi1_rank", "pi1_corank", "heegaard_genus", "homology_ranks"}, "literature");
  p.provenance["pi1_traits"] = "literature";
  return p;
}

ManifoldProfile heisenberg_profile() {
  auto p = circle_bundle_profile(1, 1);
  p.name = "Heisenberg";
  p.omega_lower = 2;
  p.provenance["omega_lower"] = "literature";
  return p;
}

ManifoldProfile homology_sphere_profile(int g) {
  require(g >= 2, "a homology sphere of genus 1 is S^3; genus must be >= 2");
  ManifoldProfile p;
  p.name = "homology sphere of genus " + std::to_string(g);
  p.pi1_corank = 0;
  p.heegaard_genus = g;
  p.homology_ranks["Z"] = {0, 0};
  p.ls_category = 4;
  p.pi1 = traits(std::nullopt, false, false);
  p.witness = "ordered:" + std::to_string(g);
  tag(p, {"pi1_corank", "heegaard_genus", "homology_ranks", "ls_category"}, "literature");
  return p;
}

std::vector<ManifoldProfile> catalog() {
  std::vector<ManifoldProfile> out;
  for (int n = 2; n <= 6; ++n) out.push_back(sphere_profile(n));
  for (int n = 2; n <= 8; ++n) out.push_back(real_projective_profile(n));
  for (int n = 1; n <= 4; ++n) out.push_back(complex_projective_profile(n));
  for (int n = 2; n <= 6; ++n) out.push_back(torus_profile(n));
  for (int g = 1; g <= 3; ++g)
    for (int n = 3; n <= 5; ++n) out.push_back(surface_times_sphere_profile(g, n));
  for (int q : {2, 3, 5, 7}) out.push_back(lens_profile(q));
  out.push_back(lens_sum_profile(2, 3));
  out.push_back(lens_sum_profile(3, 5));
  for (int r = 1; r <= 4; ++r) out.push_back(s2xs1_sum_profile(r));
  for (int r = 0; r <= 3; ++r) out.push_back(s2xs1_sum_lens_profile(r, 5));
  for (int g = 1; g <= 4; ++g)
    for (int e : {-2, -1, 0, 1, 2, 3}) out.push_back(circle_bundle_profile(g, e));
  out.push_back(heisenberg_profile());
  for (int g = 2; g <= 5; ++g) out.push_back(homology_sphere_profile(g));
  return out;
}

std::vector<std::string> catalog_patterns() {
  return {"sphere:n",       "rp:n",        "cp:n",         "torus:n",
          "sigma-x-sphere:g,n", "lens:p",  "lens-sum:p,q", "s2xs1-sum:r",
          "s2xs1-sum-lens:r,p", "circle-bundle:g,e", "heisenberg", "homology-sphere:g"};
}

ManifoldProfile catalog_profile(std::string_view name) {
  const auto colon = name.find(':');
  const auto kind = name.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::vector<int>{}
                                                     : parse_ints(name.substr(colon + 1), name);
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw Error("'" + std::string(kind) + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (kind == "sphere") return want(1), sphere_profile(args[0]);
  if (kind == "rp") return want(1), real_projective_profile(args[0]);
  if (kind == "cp") return want(1), complex_projective_profile(args[0]);
  if (kind == "torus") return want(1), torus_profile(args[0]);
  if (kind == "sigma-x-sphere") return want(2), surface_times_sphere_profile(args[0], args[1]);
  if (kind == "lens") return want(1), lens_profile(args[0]);
  if (kind == "lens-sum") return want(2), lens_sum_profile(args[0], args[1]);
  if (kind == "s2xs1-sum") return want(1), s2xs1_sum_profile(args[0]);
  if (kind == "s2xs1-sum-lens") return want(2), s2xs1_sum_lens_profile(args[0], args[1]);
  if (kind == "circle-bundle") return want(2), circle_bundle_profile(args[0], args[1]);
  if (kind == "heisenberg") return want(0), heisenberg_profile();
  if (kind == "homology-sphere") return want(1), homology_sphere_profile(args[0]);
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

HandleSequence build_witness(std::string_view spec) {
  std::optional<HandleSequence> acc;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto hash = spec.find('#', pos);
    if (hash == std::string_view::npos) hash = spec.size();
    const auto part = trim(spec.substr(pos, hash - pos));
    const auto colon = part.find(':');
    const auto kind = part.substr(0, colon);
    const auto args =
        colon == std::string_view::npos ? std::vector<int>{} : parse_ints(part.substr(colon + 1), part);
    auto want = [&](std::size_t n) {
      if (args.size() != n) throw Error("bad witness '" + std::string(part) + "'");
    };
    HandleSequence s;
    if (kind == "ordered") {
      want(1);
      s = ordered(args[0]);
    } else if (kind == "s2xs1") {
      want(0);
      s = s2xs1();
    } else if (kind == "circle-bundle") {
      want(2);
      s = circle_bundle_seq(args[0], args[1]);
    } else if (kind == "canonical") {
      want(2);
      s = canonical_sequence(args[0], args[1]);
    } else {
      throw Error("unknown witness builder '" + std::string(part) + "'");
    }
    acc = acc ? connected_sum(*acc, s) : s;
    pos = hash + 1;
  }
  return *acc;
}

std::vector<AdditivityRow> additivity_experiment(const std::vector<ManifoldProfile>& profiles) {
  std::vector<AdditivityRow> rows;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = i; j < profiles.size(); ++j) {
      const auto& a = profiles[i];
      const auto& b = profiles[j];
      if (a.dim != b.dim) continue;
      AdditivityRow row{a.name, b.name, estimate(a), estimate(b), {}, false};
      auto plain = connected_sum(a, b);
      plain.delta2_lower.reset();
      row.sum = estimate(plain);
      row.additive_certified = row.a.exact && row.b.exact &&
                               row.sum.lower == row.a.lower + row.b.lower;
      rows.push_back(std::move(row));
    }
  return rows;
}

std::vector<GenusGapRow> genus_gap_experiment(const std::vector<ManifoldProfile>& profiles) {
  std::vector<GenusGapRow> rows;
  for (const auto& p : profiles) {
    if (p.dim != 3 || !p.orientable || !p.heegaard_genus || !p.pi1_corank) continue;
    const auto e = estimate(p);
    const long shift = *p.pi1_corank - *p.heegaard_genus;
    GenusGapRow row{p.name, e.lower / 2 + shift, std::nullopt};
    if (e.upper) row.high = *e.upper / 2 + shift;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace reeblab
