#include "reeblab/abelian.hpp"

#include <sstream>

namespace reeblab {

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.rank());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    auto v = exponent_vector(p.relator(i), p.rank());
    for (std::size_t j = 0; j < p.rank(); ++j) m(i, j) = v[j];
  }
  return m;
}

AbelianInvariants abelianize(const Presentation& p) {
  auto snf = smith_normal_form(exponent_matrix(p));
  AbelianInvariants out;
  out.free_rank = snf.cokernel_free_rank();
  for (auto d : snf.factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.free_rank == 0 && a.torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  if (a.free_rank > 0) {
    out << "Z^" << a.free_rank;
    first = false;
  }
  for (auto d : a.torsion) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return out.str();
}

}  // namespace reeblab
