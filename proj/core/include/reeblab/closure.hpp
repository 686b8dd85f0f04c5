#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reeblab/conjugates.hpp"
#include "reeblab/word.hpp"

namespace reeblab {

struct ClosureQuery {
  std::vector<Word> relators;
  Word target;
  std::size_t radius = 2;        // max conjugator length
  std::size_t factor_bound = 3;  // max number of conjugate factors
  std::size_t node_limit = 1'000'000;
};

struct ClosureVerdict {
  enum class Status { member, not_member, unknown };
  enum class Certificate { none, abelianization, exhaustive };

  Status status = Status::unknown;
  Certificate certificate = Certificate::none;
  /// Set for members; evaluates exactly to the target.
  ConjugateProduct witness;
  std::size_t nodes = 0;
  std::string note;
};

/// Bounded membership of `target` in the normal closure of the relators.
///
/// The abelianized target is first tested against the lattice spanned by
/// the relator exponent vectors. Then products of at most `factor_bound`
/// conjugates t r^{+-1} t^-1 with |t| <= radius are explored breadth-first,
/// deduplicated by reduced value. The witness found has the fewest factors
/// and is the first such in a fixed enumeration order, so it does not
/// depend on scheduling.
///
/// Throws Error when radius or factor_bound is invalid.
ClosureVerdict member_bounded(const ClosureQuery& q);

std::string to_string(ClosureVerdict::Status s);
std::string to_string(ClosureVerdict::Certificate c);

/// All reduced words of length <= radius over `rank` generators in
/// shortlex order.
std::vector<Word> words_up_to(std::size_t rank, std::size_t radius);

struct ProbeOptions {
  /// Rank of the ambient free group; 0 means the smallest rank containing r.
  std::size_t rank = 0;
  std::size_t samples = 1000;
  std::size_t radius = 3;
  std::size_t factors = 4;
  std::uint64_t seed = 0x5eed'f7ee;
  /// Reject generators outside the support of the cyclic core of r.
  bool check_precondition = true;
};

struct ProbeReport {
  std::size_t generator = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t trivial_skipped = 0;
  /// Nontrivial sampled products of conjugates of r that avoid `generator`.
  std::vector<Word> counterexamples;
};

/// Samples random products of conjugates of r^{+-1} and records every
/// nontrivial one whose support misses `generator`.
ProbeReport freiheitssatz_probe(const Word& r, std::size_t generator,
                                const ProbeOptions& options = {});

}  // namespace reeblab
