#include "reeblab/omega.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_set>

#include "reeblab/error.hpp"

namespace reeblab {
namespace {

// 1-based position of the last generator a relator needs, 0 if trivial.
std::size_t need(const Word& r, const std::vector<std::size_t>& position) {
  std::size_t n = 0;
  for (auto l : r) n = std::max(n, position[l.gen] + 1);
  return n;
}

std::size_t omega_from_needs(std::vector<std::size_t> needs, std::size_t n) {
  const std::size_t m = needs.size();
  for (std::size_t omega = 1; omega <= std::max<std::size_t>(n, 1); ++omega) {
    std::size_t limit = std::min(n > omega ? n - omega : 0, m);
    bool ok = true;
    for (std::size_t i = 1; i <= limit && ok; ++i) ok = needs[i - 1] <= omega + i - 1;
    if (ok) return omega;
  }
  return std::max<std::size_t>(n, 1);
}

class SubsetSearch {
 public:
  SubsetSearch(std::size_t n, std::vector<std::uint64_t> masks, std::uint64_t budget)
      : n_(n), masks_(std::move(masks)), budget_(budget) {}

  enum class Outcome { feasible, infeasible, aborted };

  Outcome run(std::size_t omega) {
    omega_ = omega;
    limit_ = std::min(n_ - omega, masks_.size());
    failed_.clear();
    path_.clear();
    aborted_ = false;
    bool ok = dfs(0, 0);
    if (aborted_) return Outcome::aborted;
    return ok ? Outcome::feasible : Outcome::infeasible;
  }

  std::vector<std::size_t> witness() const {
    auto order = path_;
    std::vector<bool> used(n_, false);
    for (auto g : order) used[g] = true;
    for (std::size_t g = 0; g < n_; ++g)
      if (!used[g]) order.push_back(g);
    return order;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  std::size_t covered(std::uint64_t placed) const {
    std::size_t c = 0;
    for (auto m : masks_) c += (m & ~placed) == 0;
    return c;
  }

  bool dfs(std::uint64_t placed, std::size_t count) {
    if (++steps_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (count >= omega_) {
      std::size_t i = count - omega_ + 1;
      if (covered(placed) < i) return false;
      if (i == limit_) return true;
    }
    if (failed_.contains(placed)) return false;
    for (std::size_t g = 0; g < n_; ++g) {
      if (placed >> g & 1u) continue;
      path_.push_back(g);
      if (dfs(placed | (std::uint64_t{1} << g), count + 1)) return true;
      path_.pop_back();
      if (aborted_) return false;
    }
    failed_.insert(placed);
    return false;
  }

  std::size_t n_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::size_t omega_ = 0;
  std::size_t limit_ = 0;
  bool aborted_ = false;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<std::size_t> path_;
};

std::vector<std::size_t> relator_order_for(const Presentation& p,
                                           const std::vector<std::size_t>& gen_order) {
  std::vector<std::size_t> position(p.rank());
  for (std::size_t k = 0; k < gen_order.size(); ++k) position[gen_order[k]] = k;
  std::vector<std::size_t> needs(p.relator_count());
  for (std::size_t i = 0; i < needs.size(); ++i) needs[i] = need(p.relator(i), position);
  std::vector<std::size_t> order(p.relator_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return needs[a] < needs[b]; });
  return order;
}

std::size_t omega_for_order(const Presentation& p, const std::vector<std::size_t>& gen_order) {
  std::vector<std::size_t> position(p.rank());
  for (std::size_t k = 0; k < gen_order.size(); ++k) position[gen_order[k]] = k;
  std::vector<std::size_t> needs;
  for (const auto& r : p.relators()) needs.push_back(need(r, position));
  std::sort(needs.begin(), needs.end());
  return omega_from_needs(std::move(needs), p.rank());
}

}  // namespace

std::size_t omega_fixed(const Presentation& p) {
  if (p.relator_count() == 0) throw Error("free presentation, Omega undefined");
  std::vector<std::size_t> identity(p.rank());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::size_t> needs;
  for (const auto& r : p.relators()) needs.push_back(need(r, identity));
  return omega_from_needs(std::move(needs), p.rank());
}

OmegaSearchResult omega_search(const Presentation& p, const OmegaSearchOptions& options) {
  if (p.relator_count() == 0) throw Error("free presentation, Omega undefined");
  const std::size_t n = p.rank();
  if (n > 63) throw Error("omega_search supports at most 63 generators");

  OmegaSearchResult out;
  out.seed = options.seed;

  std::vector<std::uint64_t> masks;
  std::size_t min_support = n;
  for (const auto& r : p.relators()) {
    std::uint64_t m = 0;
    for (auto l : r) m |= std::uint64_t{1} << l.gen;
    masks.push_back(m);
    min_support = std::min<std::size_t>(min_support, static_cast<std::size_t>(std::popcount(m)));
  }
  std::size_t lower = std::max<std::size_t>(1, std::min(n, min_support));

  std::vector<std::size_t> best_order(n);
  std::iota(best_order.begin(), best_order.end(), 0);
  std::size_t best = omega_for_order(p, best_order);

  SubsetSearch search(n, masks, options.budget);
  bool aborted = false;
  for (std::size_t omega = lower; omega < std::min(best, n); ++omega) {
    auto outcome = search.run(omega);
    if (outcome == SubsetSearch::Outcome::aborted) {
      aborted = true;
      break;
    }
    if (outcome == SubsetSearch::Outcome::feasible) {
      best = omega;
      best_order = search.witness();
      break;
    }
    lower = omega + 1;
  }
  out.steps = search.steps();

  if (aborted) {
    std::mt19937_64 rng(options.seed);
    auto order = best_order;
    for (std::size_t k = 0; k < options.restarts && best > lower; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      auto w = omega_for_order(p, order);
      out.steps += n;
      if (w < best) {
        best = w;
        best_order = order;
      }
    }
    out.note = "budget-limited upper bound";
  }

  out.omega = best;
  out.lower_bound = std::min(lower, best);
  out.certified = !aborted || best == lower;
  if (aborted && out.certified) out.note = "upper bound meets proven lower bound";
  out.generator_order = best_order;
  out.relator_order = relator_order_for(p, best_order);
  return out;
}

}  // namespace reeblab
