#include "reeblab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "reeblab/conjugates.hpp"
#include "reeblab/error.hpp"
#include "reeblab/word_parse.hpp"

namespace reeblab {

Word evaluate(const ConjugateProduct& product, std::span<const Word> relators) {
  Word acc;
  for (const auto& f : product) {
    if (f.relator >= relators.size())
      throw Error("conjugate factor refers to relator " + std::to_string(f.relator + 1) +
                  " of " + std::to_string(relators.size()));
    if (f.exp != 1 && f.exp != -1) throw Error("conjugate factor exponent must be +1 or -1");
    acc = multiply(acc, conjugate(power(relators[f.relator], f.exp), f.conjugator));
  }
  return acc;
}

std::string to_string(const ConjugateProduct& product, const Alphabet& alphabet) {
  if (product.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < product.size(); ++i) {
    const auto& f = product[i];
    if (i) out << " * ";
    std::string r = "r" + std::to_string(f.relator + 1) + (f.exp < 0 ? "^-1" : "");
    if (f.conjugator.empty())
      out << r;
    else
      out << "(" << to_string(f.conjugator, alphabet) << ") " << r << " ("
          << to_string(inverse(f.conjugator), alphabet) << ")";
  }
  return out.str();
}

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.min_rank() > alphabet_.size())
      throw Error("relator uses a generator outside the alphabet");
    relators_.push_back(reduce(r));
  }
}

long deficiency(const Presentation& p) {
  return static_cast<long>(p.rank()) - static_cast<long>(p.relator_count());
}

Presentation reorder(const Presentation& p, const std::vector<std::size_t>& gen_order,
                     const std::vector<std::size_t>& rel_order) {
  auto is_perm = [](const std::vector<std::size_t>& v, std::size_t n) {
    if (v.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto x : v) {
      if (x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_perm(gen_order, p.rank()) || !is_perm(rel_order, p.relator_count()))
    throw Error("reorder: orders must be permutations");

  std::vector<std::uint32_t> new_index(p.rank());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < gen_order.size(); ++k) {
    new_index[gen_order[k]] = static_cast<std::uint32_t>(k);
    names.push_back(p.alphabet().name(gen_order[k]));
  }
  std::vector<Word> rels;
  for (auto idx : rel_order) {
    std::vector<Letter> ls;
    for (auto l : p.relator(idx)) ls.push_back(Letter{new_index[l.gen], l.exp});
    rels.emplace_back(std::move(ls));
  }
  return Presentation(Alphabet(std::move(names)), std::move(rels));
}

bool relators_equivalent(const Presentation& a, const Presentation& b) {
  if (!(a.alphabet() == b.alphabet()) || a.relator_count() != b.relator_count()) return false;
  for (std::size_t i = 0; i < a.relator_count(); ++i)
    if (!are_conjugate(a.relator(i), b.relator(i))) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas at bracket depth zero.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s,
                                                                      std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.emplace_back(s.substr(start, i - start), offset + start);
      start = i + 1;
    }
  }
  parts.emplace_back(s.substr(start), offset + start);
  return parts;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  auto gens_at = text.find("gens:");
  if (gens_at == std::string_view::npos) throw ParseError("expected 'gens:'", 0);
  auto rels_at = text.find("rels:");
  auto gens_end = rels_at == std::string_view::npos ? text.size() : rels_at;
  auto gens_text = text.substr(gens_at + 5, gens_end - gens_at - 5);
  if (auto semi = gens_text.rfind(';'); semi != std::string_view::npos &&
                                        trim(gens_text.substr(semi + 1)).empty())
    gens_text = gens_text.substr(0, semi);

  Alphabet alphabet;
  if (!trim(gens_text).empty()) {
    for (auto [part, off] : split_top_level(gens_text, gens_at + 5)) {
      auto name = trim(part);
      bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
      for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) throw ParseError("bad generator name '" + std::string(name) + "'", off);
      if (alphabet.find(name)) throw ParseError("duplicate generator '" + std::string(name) + "'", off);
      alphabet.add(std::string(name));
    }
  }

  std::vector<Word> rels;
  if (rels_at != std::string_view::npos) {
    auto rels_text = text.substr(rels_at + 5);
    if (!trim(rels_text).empty()) {
      for (auto [part, off] : split_top_level(rels_text, rels_at + 5)) {
        try {
          rels.push_back(parse_word(part, alphabet));
        } catch (const ParseError& e) {
          throw ParseError(std::string("in relator: ") + e.what(), off);
        }
      }
    }
  }
  return Presentation(std::move(alphabet), std::move(rels));
}

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << "gens: ";
  for (std::size_t i = 0; i < p.rank(); ++i) out << (i ? ", " : "") << p.alphabet().name(i);
  out << " ; rels: ";
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    out << (i ? ", " : "") << to_string(p.relator(i), p.alphabet());
  return out.str();
}

}  // namespace reeblab
