#include "reeblab/nielsen.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>

#include "reeblab/error.hpp"
#include "reeblab/word_parse.hpp"

namespace reeblab {
namespace {

std::size_t total_length(const WordTuple& t) {
  std::size_t n = 0;
  for (const auto& w : t.entries) n += w.size();
  return n;
}

std::vector<Letter> left_half(const Word& w) {
  auto k = (w.size() + 1) / 2;
  return {w.begin(), w.begin() + static_cast<long>(k)};
}

// Well-order used once no move shortens an entry.
auto half_key(const Word& w) {
  auto a = left_half(w);
  auto b = left_half(inverse(w));
  if (b < a) std::swap(a, b);
  return std::make_tuple(w.size(), a, b);
}

Word candidate(const WordTuple& t, const NielsenMove& m) {
  return apply_move(t, m).entries[m.target];
}

template <typename Better>
std::optional<NielsenMove> first_move(const WordTuple& t, Better better) {
  const auto n = t.entries.size();
  using K = NielsenMove::Kind;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || t.entries[j].empty()) continue;
      for (auto kind : {K::multiply_right, K::multiply_left})
        for (int exp : {1, -1}) {
          NielsenMove m{kind, i, j, exp};
          if (better(candidate(t, m), t.entries[i])) return m;
        }
    }
  return std::nullopt;
}

}  // namespace

WordTuple apply_move(WordTuple t, const NielsenMove& m) {
  auto n = t.entries.size();
  if (m.target >= n || (m.kind != NielsenMove::Kind::invert && m.other >= n))
    throw Error("Nielsen move index out of range");
  auto& u = t.entries[m.target];
  switch (m.kind) {
    case NielsenMove::Kind::swap:
      std::swap(u, t.entries[m.other]);
      break;
    case NielsenMove::Kind::invert:
      u = inverse(reduce(u));
      break;
    case NielsenMove::Kind::multiply_right:
    case NielsenMove::Kind::multiply_left: {
      if (m.target == m.other) throw Error("Nielsen move multiplies an entry by itself");
      auto v = power(t.entries[m.other], m.exp);
      u = m.kind == NielsenMove::Kind::multiply_right ? u * v : v * u;
      break;
    }
  }
  return t;
}

WordTuple apply_moves(WordTuple t, std::span<const NielsenMove> moves) {
  for (const auto& m : moves) t = apply_move(std::move(t), m);
  return t;
}

NielsenReduction nielsen_reduce(const WordTuple& input) {
  NielsenReduction out;
  out.reduced = input;
  for (auto& w : out.reduced.entries) w = reduce(w);
  auto& t = out.reduced;

  auto shorter = [](const Word& next, const Word& cur) { return next.size() < cur.size(); };
  auto lower = [](const Word& next, const Word& cur) { return half_key(next) < half_key(cur); };

  while (true) {
    auto m = first_move(t, shorter);
    if (!m) m = first_move(t, lower);
    if (!m) break;
    t = apply_move(std::move(t), *m);
    out.log.push_back(*m);
  }
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (inverse(t.entries[i]) < t.entries[i]) {
      NielsenMove m{NielsenMove::Kind::invert, i, i, 1};
      t = apply_move(std::move(t), m);
      out.log.push_back(m);
    }
  }
  (void)total_length;
  return out;
}

bool is_basis(const WordTuple& t) {
  if (t.entries.size() != t.rank)
    throw Error("is_basis needs exactly " + std::to_string(t.rank) + " entries, got " +
                std::to_string(t.entries.size()));
  for (const auto& w : t.entries)
    if (w.min_rank() > t.rank) throw Error("tuple entry outside the free group's alphabet");
  auto reduced = nielsen_reduce(t).reduced;
  std::vector<bool> seen(t.rank, false);
  for (const auto& w : reduced.entries) {
    if (w.size() != 1 || seen[w[0].gen]) return false;
    seen[w[0].gen] = true;
  }
  return true;
}

WordTuple parse_tuple(std::string_view text, const Alphabet& alphabet) {
  WordTuple t;
  t.rank = alphabet.size();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    t.entries.push_back(parse_word(text.substr(start, end - start), alphabet));
    start = end + 1;
  }
  return t;
}

std::string to_string(const WordTuple& t, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    out << (i ? ", " : "") << to_string(t.entries[i], alphabet);
  out << ")";
  return out.str();
}

std::string to_string(const NielsenMove& m) {
  auto u = [](std::size_t i) { return "u" + std::to_string(i + 1); };
  auto pw = [&](std::size_t i, int e) { return u(i) + (e < 0 ? "^-1" : ""); };
  switch (m.kind) {
    case NielsenMove::Kind::swap:
      return "swap " + u(m.target) + " " + u(m.other);
    case NielsenMove::Kind::invert:
      return u(m.target) + " <- " + u(m.target) + "^-1";
    case NielsenMove::Kind::multiply_right:
      return u(m.target) + " <- " + u(m.target) + " " + pw(m.other, m.exp);
    case NielsenMove::Kind::multiply_left:
      return u(m.target) + " <- " + pw(m.other, m.exp) + " " + u(m.target);
  }
  return {};
}

}  // namespace reeblab
