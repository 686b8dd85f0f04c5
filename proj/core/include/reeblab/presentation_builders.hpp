#pragma once

#include <string>
#include <vector>

#include "reeblab/presentation.hpp"

namespace reeblab {

/// <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>, g >= 1.
Presentation surface_group(int g);

/// Circle bundle over the genus-g surface with Euler number e:
/// generators a1,b1,...,ag,bg,h; relators [a1,h],[b1,h],...,[ag,h],[bg,h]
/// followed by [a1,b1]...[ag,bg] h^-e. Requires g >= 1.
Presentation circle_bundle(int g, int e);

/// Rank-2g presentation for e = +-1: generators a1,b1,...,ag,bg and
/// relators [ai, h^e], [bi, h^e] with h expanded as [a1,b1]...[ag,bg].
Presentation circle_bundle_rank2g(int g, int e);

/// <x | x^p>, p >= 0.
Presentation lens(int p);

/// Disjoint union of generators and relators. Clashing generator names of
/// `q` receive a `_2`, `_3`, ... suffix.
Presentation free_product(const Presentation& p, const Presentation& q);

/// One generator per handle and one relator per attaching word. Generator
/// names default to x1..x_genus.
Presentation heegaard_presentation(int genus, const std::vector<std::string>& attaching_words,
                                   std::vector<std::string> generator_names = {});

/// Attaching words alpha_1..alpha_g, beta_1..beta_g, gamma of the genus
/// 2g+1 splitting of the circle bundle, over generators a1,b1,...,ag,bg,h:
/// alpha_i = [ai,h], beta_i = [bi,h], gamma = h^-e [a1,b1]...[ag,bg].
struct CircleBundleDiagram {
  std::vector<std::string> generators;
  std::vector<std::string> alpha;
  std::vector<std::string> beta;
  std::string gamma;
};
CircleBundleDiagram circle_bundle_diagram(int g, int e);

/// Heegaard presentation of the diagram ordered by the handle sequence that
/// attaches H, A1..Ag first, then the alpha curves, then B1..Bg, then gamma
/// and the beta curves: generators h,a1..ag,b1..bg and relators
/// alpha_1..alpha_g, gamma, beta_1..beta_g.
Presentation circle_bundle_handle_ordered(int g, int e);

}  // namespace reeblab
