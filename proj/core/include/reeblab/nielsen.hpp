#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "reeblab/word.hpp"

namespace reeblab {

/// Ordered tuple of reduced words in the free group of rank `rank`.
struct WordTuple {
  std::size_t rank = 0;
  std::vector<Word> entries;

  friend bool operator==(const WordTuple&, const WordTuple&) = default;
};

/// Elementary Nielsen move on entry `target`.
struct NielsenMove {
  enum class Kind {
    swap,            // exchange target and other
    invert,          // u_t <- u_t^-1
    multiply_right,  // u_t <- u_t * u_o^exp
    multiply_left,   // u_t <- u_o^exp * u_t
  };
  Kind kind = Kind::invert;
  std::size_t target = 0;
  std::size_t other = 0;
  int exp = 1;

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

WordTuple apply_move(WordTuple t, const NielsenMove& move);
WordTuple apply_moves(WordTuple t, std::span<const NielsenMove> moves);

struct NielsenReduction {
  WordTuple reduced;
  std::vector<NielsenMove> log;
};

/// Nielsen reduction. Pairs (i, j) are scanned in index order and the
/// first move that strictly shortens an entry is applied. When no entry
/// can be shortened, a move that keeps the length but lowers the entry in
/// the half-word order (length, then the smaller and larger of the left
/// halves of w and w^-1) is applied instead. Finally each entry is
/// replaced by the shortlex-smaller of itself and its inverse. The
/// subgroup generated never changes and the total length never grows.
NielsenReduction nielsen_reduce(const WordTuple& t);

/// True iff t is a free basis of F_rank, i.e. its Nielsen reduction is a
/// permutation of the generators up to inversion. Throws Error unless
/// t has exactly `rank` entries.
bool is_basis(const WordTuple& t);

/// Parses `a; a b; [a,b]` over the alphabet.
WordTuple parse_tuple(std::string_view text, const Alphabet& alphabet);
std::string to_string(const WordTuple& t, const Alphabet& alphabet);
std::string to_string(const NielsenMove& m);

}  // namespace reeblab
