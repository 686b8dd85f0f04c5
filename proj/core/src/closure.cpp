#include "reeblab/closure.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "reeblab/error.hpp"
#include "reeblab/smith.hpp"

namespace reeblab {

namespace {

struct Conjugate {
  Word value;
  ConjugateFactor factor;
};

std::size_t ambient_rank(const ClosureQuery& q) {
  std::size_t n = q.target.min_rank();
  for (const auto& r : q.relators) n = std::max(n, r.min_rank());
  return n;
}

bool abelian_obstruction(const std::vector<Word>& relators, const Word& target,
                         std::size_t rank) {
  auto v = exponent_vector(target, rank);
  IntMatrix m(relators.size(), rank);
  for (std::size_t i = 0; i < relators.size(); ++i) {
    auto e = exponent_vector(relators[i], rank);
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = e[j];
  }
  return !lattice_contains(m, v);
}

// Distinct conjugates, first occurrence wins in (relator, exp, conjugator)
// order with conjugators in shortlex order.
std::vector<Conjugate> conjugates(const std::vector<Word>& relators, std::size_t rank,
                                  std::size_t radius) {
  auto ts = words_up_to(rank, radius);
  std::vector<Conjugate> out;
  std::unordered_map<Word, bool> seen;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].empty()) continue;
    for (int e : {1, -1}) {
      Word r = power(relators[i], e);
      for (const auto& t : ts) {
        Word c = conjugate(r, t);
        if (seen.emplace(c, true).second) out.push_back({c, ConjugateFactor{i, e, t}});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Word> words_up_to(std::size_t rank, std::size_t radius) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (std::int8_t e : {std::int8_t{1}, std::int8_t{-1}}) {
          Letter l{g, e};
          const Word& w = out[k];
          if (!w.empty() && w.letters().back().cancels(l)) continue;
          auto letters = w.letters();
          letters.push_back(l);
          out.emplace_back(std::move(letters));
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::string to_string(ClosureVerdict::Status s) {
  switch (s) {
    case ClosureVerdict::Status::member: return "Member";
    case ClosureVerdict::Status::not_member: return "NotMember";
    case ClosureVerdict::Status::unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(ClosureVerdict::Certificate c) {
  switch (c) {
    case ClosureVerdict::Certificate::none: return "none";
    case ClosureVerdict::Certificate::abelianization: return "abelianization";
    case ClosureVerdict::Certificate::exhaustive: return "exhaustive";
  }
  return "?";
}

ClosureVerdict member_bounded(const ClosureQuery& q) {
  if (q.factor_bound < 1) throw Error("factor bound must be at least 1");
  ClosureVerdict v;
  const Word target = reduce(q.target);
  std::vector<Word> relators;
  relators.reserve(q.relators.size());
  for (const auto& r : q.relators) relators.push_back(reduce(r));

  if (target.empty()) {
    v.status = ClosureVerdict::Status::member;
    v.note = "trivial target";
    return v;
  }
  const std::size_t rank = ambient_rank(q);
  if (abelian_obstruction(relators, target, rank)) {
    v.status = ClosureVerdict::Status::not_member;
    v.certificate = ClosureVerdict::Certificate::abelianization;
    v.note = "exponent vector outside the relator lattice";
    return v;
  }
  if (std::all_of(relators.begin(), relators.end(), [](const Word& r) { return r.empty(); })) {
    v.status = ClosureVerdict::Status::not_member;
    v.certificate = ClosureVerdict::Certificate::exhaustive;
    v.note = "normal closure is trivial";
    return v;
  }

  const auto conj = conjugates(relators, rank, q.radius);
  // node -> (parent node, conjugate index); node 0 is the identity.
  struct Node {
    Word value;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Node> nodes{{Word{}, 0, 0}};
  std::unordered_map<Word, std::size_t> index{{Word{}, 0}};

  auto witness_of = [&](std::size_t n) {
    ConjugateProduct w;
    while (n != 0) {
      w.push_back(conj[nodes[n].via].factor);
      n = nodes[n].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::size_t begin = 0, end = 1;
  for (std::size_t depth = 1; depth <= q.factor_bound; ++depth) {
    for (std::size_t k = begin; k < end; ++k) {
      for (std::size_t c = 0; c < conj.size(); ++c) {
        Word w = multiply(nodes[k].value, conj[c].value);
        if (index.contains(w)) continue;
        if (nodes.size() >= q.node_limit) {
          v.nodes = nodes.size();
          v.note = "node limit " + std::to_string(q.node_limit) + " reached at " +
                   std::to_string(depth) + " factors";
          return v;
        }
        index.emplace(w, nodes.size());
        nodes.push_back({w, k, c});
        if (w == target) {
          v.status = ClosureVerdict::Status::member;
          v.witness = witness_of(nodes.size() - 1);
          v.nodes = nodes.size();
          if (evaluate(v.witness, relators) != target)
            throw Error("internal error: closure witness does not evaluate to the target");
          return v;
        }
      }
    }
    begin = end;
    end = nodes.size();
  }
  v.nodes = nodes.size();
  v.note = "not found within radius " + std::to_string(q.radius) + " and " +
           std::to_string(q.factor_bound) + " factors";
  return v;
}

ProbeReport freiheitssatz_probe(const Word& r, std::size_t generator, const ProbeOptions& o) {
  Word core = cyclic_reduce(r).core;
  if (core.empty()) throw Error("probe relator is trivial");
  if (o.check_precondition && !support(core).contains(generator))
    throw Error("probe generator does not occur in the cyclically reduced relator");
  const std::size_t rank = std::max({o.rank, core.min_rank(), generator + 1});
  if (o.factors < 1) throw Error("probe needs at least one factor");

  ProbeReport rep;
  rep.generator = generator;
  rep.seed = o.seed;
  rep.samples = o.samples;
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const Word r_inv = inverse(core);

  for (std::size_t s = 0; s < o.samples; ++s) {
    Word acc;
    const std::size_t nf = uniform(1, o.factors);
    for (std::size_t f = 0; f < nf; ++f) {
      std::vector<Letter> t;
      const std::size_t len = uniform(0, o.radius);
      while (t.size() < len) {
        Letter l{static_cast<std::uint32_t>(uniform(0, rank - 1)),
                 static_cast<std::int8_t>(uniform(0, 1) ? 1 : -1)};
        if (!t.empty() && t.back().cancels(l)) continue;
        t.push_back(l);
      }
      acc = multiply(acc, conjugate(uniform(0, 1) ? core : r_inv, Word(std::move(t))));
    }
    if (acc.empty()) {
      ++rep.trivial_skipped;
      continue;
    }
    if (!support(acc).contains(generator)) rep.counterexamples.push_back(std::move(acc));
  }
  return rep;
}

}  // namespace reeblab
