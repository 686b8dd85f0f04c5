#include "reeblab/word_parse.hpp"

#include <cctype>
#include <charconv>

#include "reeblab/error.hpp"

namespace reeblab {
namespace {

class WordParser {
 public:
  WordParser(std::string_view text, Alphabet& alphabet, UnknownGenerators policy)
      : text_(text), alphabet_(alphabet), policy_(policy) {}

  Word parse_all() {
    auto w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_term() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '(' || c == '1';
  }

  Word parse_word() {
    if (!starts_term()) fail("expected a word");
    Word acc;
    while (starts_term()) acc = multiply(acc, parse_term());
    return acc;
  }

  long parse_int() {
    skip_space();
    auto begin = text_.data() + pos_;
    auto end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) fail("expected an integer exponent");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Word maybe_power(Word base) {
    if (peek() == '^') {
      ++pos_;
      return power(base, parse_int());
    }
    return base;
  }

  std::size_t generator_index(std::string_view name) {
    if (auto gen = alphabet_.find(name)) return *gen;
    if (policy_ == UnknownGenerators::append) return alphabet_.add(std::string(name));
    fail("unknown generator '" + std::string(name) + "'");
  }

  Word parse_term() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      auto u = parse_word();
      expect(',');
      auto v = parse_word();
      expect(']');
      return maybe_power(commutator(u, v));
    }
    if (c == '(') {
      ++pos_;
      auto w = parse_word();
      expect(')');
      return maybe_power(w);
    }
    if (c == '1') {
      ++pos_;
      return maybe_power(Word{});
    }
    auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    auto gen = generator_index(text_.substr(start, pos_ - start));
    return maybe_power(Word::generator(gen));
  }

  std::string_view text_;
  Alphabet& alphabet_;
  UnknownGenerators policy_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, Alphabet& alphabet, UnknownGenerators policy) {
  return WordParser(text, alphabet, policy).parse_all();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Alphabet copy = alphabet;
  return WordParser(text, copy, UnknownGenerators::reject).parse_all();
}

}  // namespace reeblab
