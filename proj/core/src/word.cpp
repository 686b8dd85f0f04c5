#include "reeblab/word.hpp"

#include <algorithm>
#include <sstream>

#include "reeblab/error.hpp"

namespace reeblab {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

Alphabet Alphabet::numbered(std::string_view prefix, std::size_t count) {
  Alphabet a;
  for (std::size_t i = 1; i <= count; ++i)
    a.add(std::string(prefix) + std::to_string(i));
  return a;
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::add(std::string name) {
  if (index_.contains(name))
    throw Error("duplicate generator name '" + name + "'");
  auto gen = names_.size();
  index_.emplace(name, gen);
  names_.push_back(std::move(name));
  return gen;
}

Word Word::generator(std::size_t gen, int exp) {
  Word w;
  auto n = static_cast<long>(exp < 0 ? -exp : exp);
  auto letter = Letter{static_cast<std::uint32_t>(gen),
                       static_cast<std::int8_t>(exp < 0 ? -1 : 1)};
  w.letters_.assign(static_cast<std::size_t>(n), letter);
  return w;
}

std::size_t Word::min_rank() const noexcept {
  std::size_t r = 0;
  for (auto l : letters_) r = std::max<std::size_t>(r, l.gen + 1);
  return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !w[0].cancels(w[w.size() - 1]);
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out = reduce(u).letters();
  for (auto l : reduce(v)) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word power(const Word& w, long exponent) {
  auto base = exponent < 0 ? inverse(reduce(w)) : reduce(w);
  auto n = exponent < 0 ? -exponent : exponent;
  // Conjugate the cyclic core so powers cost linear time.
  auto [t, core] = cyclic_reduce(base);
  std::vector<Letter> body;
  body.reserve(core.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    body.insert(body.end(), core.begin(), core.end());
  return conjugate(Word(std::move(body)), t);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(inverse(reduce(u)), inverse(reduce(v))));
}

Word conjugate(const Word& w, const Word& t) {
  return multiply(multiply(t, w), inverse(reduce(t)));
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto r = reduce(w);
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i].cancels(r[j - 1])) {
    ++i;
    --j;
  }
  const auto& ls = r.letters();
  return {Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(i))),
          Word(std::vector<Letter>(ls.begin() + static_cast<long>(i),
                                   ls.begin() + static_cast<long>(j)))};
}

std::set<std::size_t> support(const Word& w) {
  std::set<std::size_t> s;
  for (auto l : reduce(w)) s.insert(l.gen);
  return s;
}

std::vector<std::int64_t> exponent_vector(const Word& w, std::size_t rank) {
  std::vector<std::int64_t> v(std::max(rank, w.min_rank()), 0);
  for (auto l : w) v[l.gen] += l.exp;
  return v;
}

bool are_conjugate(const Word& u, const Word& v) {
  auto a = cyclic_reduce(u).core;
  auto b = cyclic_reduce(v).core;
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Letter> doubled = a.letters();
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) !=
         doubled.end();
}

Word compose(const Alphabet& alphabet, std::span<const Word> parts) {
  Word acc;
  for (const auto& p : parts) {
    if (p.min_rank() > alphabet.size())
      throw Error("alphabet mismatch: word uses generator index " +
                  std::to_string(p.min_rank() - 1) + " outside an alphabet of " +
                  std::to_string(alphabet.size()));
    acc = multiply(acc, p);
  }
  return acc;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  auto name = [&](std::uint32_t gen) {
    return gen < alphabet.size() ? alphabet.name(gen) : "x" + std::to_string(gen);
  };
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i) * w[i].exp;
    if (!first) out << ' ';
    first = false;
    out << name(w[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

}  // namespace reeblab
