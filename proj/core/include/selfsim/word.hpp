#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

using GenId = std::uint32_t;

// A generator or its formal inverse.
struct Letter {
  GenId gen = 0;
  bool inverse = false;

  Letter inverted() const noexcept { return {gen, !inverse}; }
  // Dense index 2*gen + inverse, used to address per-letter tables.
  std::uint32_t index() const noexcept { return 2 * gen + (inverse ? 1u : 0u); }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GeneratorSignature {
  std::string name;
  VertexId domain = 0;
  VertexId terminus = 0;
};

// Names and endpoints of the generators of G.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GeneratorSignature> gens);

  GenId add(GeneratorSignature sig);

  std::size_t size() const noexcept { return gens_.size(); }
  const GeneratorSignature& operator[](GenId g) const { return gens_.at(g); }
  std::optional<GenId> find(const std::string& name) const;

  VertexId domain(Letter l) const;
  VertexId terminus(Letter l) const;

 private:
  std::vector<GeneratorSignature> gens_;
  std::unordered_map<std::string, GenId> index_;
};

// A freely reduced, composable product of letters, or a unit (vertex).
//
// Reading order follows the usual composition convention: the word
// l_1 l_2 ... l_n is the product with l_n acting first, so consecutive letters
// satisfy d(l_i) = t(l_{i+1}).
class Word {
 public:
  Word() = default;

  static Word unit(VertexId v) { return Word(v, v, {}); }
  static Word letter(const Alphabet& alphabet, Letter l);
  // Checks composability and freely reduces. Throws NotComposable.
  static Word from_letters(const Alphabet& alphabet, std::span<const Letter> letters);

  VertexId domain() const noexcept { return domain_; }
  VertexId terminus() const noexcept { return terminus_; }
  bool is_unit() const noexcept { return letters_.empty(); }
  bool is_loop() const noexcept { return domain_ == terminus_; }
  std::size_t length() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word inverse() const;
  // n >= 0; requires a loop when n != 1.
  Word power(std::size_t n) const;

  // Product x y (y acts first). Throws NotComposable unless d(x) = t(y).
  friend Word operator*(const Word& x, const Word& y);

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  std::size_t hash() const noexcept;

 private:
  Word(VertexId d, VertexId t, std::vector<Letter> letters)
      : domain_(d), terminus_(t), letters_(std::move(letters)) {}

  VertexId domain_ = 0;
  VertexId terminus_ = 0;
  std::vector<Letter> letters_;
};

// "a^-1 c b a"; units print as their vertex name.
std::string format_word(const Graph& g, const Alphabet& alphabet, const Word& w);

// Whitespace-separated tokens, each a generator name, name^-1, or a vertex
// name (a unit). Throws ParseError / UnknownIdentifier / NotComposable.
Word parse_word(const Graph& g, const Alphabet& alphabet, const std::string& text);

// Every freely reduced composable word of exactly the given length, in
// lexicographic letter-index order (rightmost letter varies slowest).
std::vector<Word> reduced_words_of_length(const Alphabet& alphabet, std::size_t length);

}  // namespace selfsim

template <>
struct std::hash<selfsim::Word> {
  std::size_t operator()(const selfsim::Word& w) const noexcept { return w.hash(); }
};
