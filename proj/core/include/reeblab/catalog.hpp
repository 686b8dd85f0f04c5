#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reeblab/bounds.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/profile.hpp"

namespace reeblab {

ManifoldProfile sphere_profile(int n);
ManifoldProfile real_projective_profile(int n);
/// Complex projective n-space, of real dimension 2n.
ManifoldProfile complex_projective_profile(int n);
ManifoldProfile torus_profile(int n);
/// Sigma_g x S^{n-2}.
ManifoldProfile surface_times_sphere_profile(int g, int n);
ManifoldProfile lens_profile(int p);
ManifoldProfile lens_sum_profile(int p, int q);
/// Connected sum of r copies of S^2 x S^1; r = 0 gives S^3.
ManifoldProfile s2xs1_sum_profile(int r);
ManifoldProfile s2xs1_sum_lens_profile(int r, int p);
/// Circle bundle over the genus-g surface with Euler number e, g >= 1.
ManifoldProfile circle_bundle_profile(int g, int e);
ManifoldProfile heisenberg_profile();
/// A homology 3-sphere of Heegaard genus g >= 2 (genus 1 only gives S^3).
ManifoldProfile homology_sphere_profile(int g);

/// Built-in profiles over small parameter ranges.
std::vector<ManifoldProfile> catalog();

/// Looks up `sphere:3`, `rp:5`, `cp:2`, `torus:4`, `sigma-x-sphere:2,4`,
/// `lens:5`, `lens-sum:2,3`, `s2xs1-sum:3`, `s2xs1-sum-lens:3,5`,
/// `circle-bundle:2,-1`, `heisenberg`, `homology-sphere:2`. Throws Error
/// for an unknown name or bad parameters.
ManifoldProfile catalog_profile(std::string_view name);

/// Name patterns accepted by catalog_profile.
std::vector<std::string> catalog_patterns();

/// Builds the handle sequence named by a witness spec: `ordered:g`,
/// `s2xs1`, `circle-bundle:g,e`, `canonical:k1,r`, joined by ` # ` for
/// connected sums.
HandleSequence build_witness(std::string_view spec);

struct AdditivityRow {
  std::string first;
  std::string second;
  Delta2Estimate a;
  Delta2Estimate b;
  Delta2Estimate sum;
  /// Upper bounds add and the recomputed lower bound of the sum matches.
  bool additive_certified = false;
};

/// Compares the Delta_2 interval of every pairwise connected sum of the
/// given profiles with the sum of the intervals. Profiles of different
/// dimensions are not paired.
std::vector<AdditivityRow> additivity_experiment(const std::vector<ManifoldProfile>& profiles);

struct GenusGapRow {
  std::string name;
  /// Interval for Delta_2/2 + corank - g.
  long low = 0;
  std::optional<long> high;
};

/// Scans 3-dimensional orientable profiles with known genus and corank.
std::vector<GenusGapRow> genus_gap_experiment(const std::vector<ManifoldProfile>& profiles);

}  // namespace reeblab
