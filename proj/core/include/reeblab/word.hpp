#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reeblab {

/// Ordered list of generator names. Generator indices are 0-based and
/// order-significant.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// Alphabet `prefix1, ..., prefixN`.
  static Alphabet numbered(std::string_view prefix, std::size_t count);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Appends a generator; throws if the name is already present.
  std::size_t add(std::string name);

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A generator or its inverse.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept {
    return Letter{gen, static_cast<std::int8_t>(-exp)};
  }
  constexpr bool cancels(Letter other) const noexcept {
    return gen == other.gen && exp == -other.exp;
  }
  /// Rank in the letter order x0 < x0^-1 < x1 < x1^-1 < ...
  constexpr std::uint32_t order_key() const noexcept {
    return 2 * gen + (exp < 0 ? 1u : 0u);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }
};

/// A finite sequence of letters; an element of a free group once reduced.
/// Words are not reduced implicitly: `reduce` does that, and every
/// arithmetic helper below returns reduced results.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::size_t gen, int exp = 1);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest generator index occurring plus one, 0 for the empty word.
  std::size_t min_rank() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order using the letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Reduced inverse of a reduced word (reverses and inverts letters).
Word inverse(const Word& w);
/// Reduced product.
Word multiply(const Word& u, const Word& v);
Word power(const Word& w, long exponent);
/// [u,v] = u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);
/// Reduced t w t^-1.
Word conjugate(const Word& w, const Word& t);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicReduction {
  Word conjugator;
  Word core;
};

/// Splits reduce(w) as conjugator * core * conjugator^-1 with core
/// cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// Generators occurring in reduce(w).
std::set<std::size_t> support(const Word& w);

/// Exponent sum of each generator, padded to `rank` entries.
std::vector<std::int64_t> exponent_vector(const Word& w, std::size_t rank);

/// True when u and v are conjugate in the free group.
bool are_conjugate(const Word& u, const Word& v);

/// Reduced product of `parts` after checking every letter lies in
/// `alphabet`. Throws Error on an alphabet mismatch.
Word compose(const Alphabet& alphabet, std::span<const Word> parts);

/// Human-readable form, runs of a letter collapsed: `a^2 b a^-1`. The
/// identity prints as `1`.
std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace reeblab

template <>
struct std::hash<reeblab::Word> {
  std::size_t operator()(const reeblab::Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto l : w) {
      h ^= l.order_key() + 1;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
