#pragma once

#include <string_view>

#include "reeblab/word.hpp"

namespace reeblab {

enum class UnknownGenerators {
  reject,  // names must already be in the alphabet
  append,  // unseen names are appended in order of first appearance
};

/// Parses the word grammar
///
///   word := term+
///   term := gen | gen "^" int | "[" word "," word "]" | "(" word ")" "^" int
///   gen  := [A-Za-z][A-Za-z0-9_]*
///
/// Every term may carry an optional `^int`; negative exponents invert and
/// the literal `1` denotes the identity. Whitespace only separates tokens.
/// The result is freely reduced.
Word parse_word(std::string_view text, Alphabet& alphabet,
                UnknownGenerators policy = UnknownGenerators::reject);

Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace reeblab
