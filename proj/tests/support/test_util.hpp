#pragma once

#include <catch_amalgamated.hpp>

#include <random>
#include <string_view>
#include <vector>

#include "reeblab/word.hpp"
#include "reeblab/word_parse.hpp"

namespace test {

inline const reeblab::Alphabet& abc() {
  static const reeblab::Alphabet a({"a", "b", "c", "d"});
  return a;
}

inline reeblab::Word w(std::string_view text) { return reeblab::parse_word(text, abc()); }

inline std::string s(const reeblab::Word& x) { return reeblab::to_string(x, abc()); }

// Not necessarily reduced.
inline reeblab::Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, 2 * rank - 1);
  std::vector<reeblab::Letter> out(len(rng));
  for (auto& l : out) {
    const auto k = pick(rng);
    l = {static_cast<std::uint32_t>(k / 2), static_cast<std::int8_t>(k % 2 ? -1 : 1)};
  }
  return reeblab::Word(out);
}

}  // namespace test
