#include "selfsim/word.hpp"

#include <sstream>

#include "selfsim/error.hpp"
#include "selfsim/hash.hpp"

namespace selfsim {

Alphabet::Alphabet(std::vector<GeneratorSignature> gens) {
  for (auto& g : gens) add(std::move(g));
}

GenId Alphabet::add(GeneratorSignature sig) {
  auto id = static_cast<GenId>(gens_.size());
  if (!index_.emplace(sig.name, id).second)
    throw Error(ErrorKind::DuplicateIdentifier, "generator '" + sig.name + "'");
  gens_.push_back(std::move(sig));
  return id;
}

std::optional<GenId> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Alphabet::domain(Letter l) const {
  const auto& g = gens_.at(l.gen);
  return l.inverse ? g.terminus : g.domain;
}

VertexId Alphabet::terminus(Letter l) const {
  const auto& g = gens_.at(l.gen);
  return l.inverse ? g.domain : g.terminus;
}

Word Word::letter(const Alphabet& alphabet, Letter l) {
  return Word(alphabet.domain(l), alphabet.terminus(l), {l});
}

Word Word::from_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  if (letters.empty())
    throw Error(ErrorKind::NotComposable, "a word needs letters or an explicit unit");
  Word out = letter(alphabet, letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) out = letter(alphabet, letters[i]) * out;
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverted());
  return Word(terminus_, domain_, std::move(inv));
}

Word Word::power(std::size_t n) const {
  if (n == 1) return *this;
  if (!is_loop()) throw Error(ErrorKind::NotComposable, "power of a non-loop word");
  Word out = unit(domain_);
  for (std::size_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

Word operator*(const Word& x, const Word& y) {
  if (x.domain_ != y.terminus_)
    throw Error(ErrorKind::NotComposable, "d(x) != t(y) in word product");
  if (y.letters_.empty()) return x;
  if (x.letters_.empty()) return y;
  // Cancel across the junction only: both factors are already reduced.
  std::size_t cancel = 0;
  const std::size_t xs = x.letters_.size(), ys = y.letters_.size();
  while (cancel < xs && cancel < ys &&
         x.letters_[xs - 1 - cancel] == y.letters_[cancel].inverted())
    ++cancel;
  std::vector<Letter> out;
  out.reserve(xs + ys - 2 * cancel);
  out.insert(out.end(), x.letters_.begin(), x.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), y.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), y.letters_.end());
  return Word(y.domain_, x.terminus_, std::move(out));
}

std::size_t Word::hash() const noexcept {
  std::size_t h = hash_combine(domain_, terminus_);
  for (const auto& l : letters_) h = hash_combine(h, l.index());
  return h;
}

std::string format_word(const Graph& g, const Alphabet& alphabet, const Word& w) {
  if (w.is_unit()) return g.vertex_name(w.domain());
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    const auto& l = w.letters()[i];
    out += alphabet[l.gen].name;
    if (l.inverse) out += "^-1";
  }
  return out;
}

Word parse_word(const Graph& g, const Alphabet& alphabet, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw Error(ErrorKind::ParseError, "empty word");

  std::optional<Word> acc;
  for (const auto& tok : tokens) {
    Word factor;
    if (auto v = g.find_vertex(tok)) {
      factor = Word::unit(*v);
    } else {
      std::string name = tok;
      bool inverse = false;
      const std::string suffix = "^-1";
      if (name.size() > suffix.size() &&
          name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        name.resize(name.size() - suffix.size());
        inverse = true;
      }
      auto gen = alphabet.find(name);
      if (!gen) throw Error(ErrorKind::UnknownIdentifier, "no generator or vertex named '" + name + "'");
      factor = Word::letter(alphabet, {*gen, inverse});
    }
    acc = acc ? *acc * factor : factor;
  }
  return *acc;
}

std::vector<Word> reduced_words_of_length(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out;
  if (length == 0) return out;
  std::vector<Letter> letters;
  for (GenId g = 0; g < alphabet.size(); ++g) {
    letters.push_back({g, false});
    letters.push_back({g, true});
  }
  // Grow by prepending letters on the left; the current word's terminus
  // constrains the next letter's domain.
  std::vector<Word> level;
  for (const auto& l : letters) level.push_back(Word::letter(alphabet, l));
  for (std::size_t n = 1; n < length; ++n) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (const auto& l : letters) {
        if (alphabet.domain(l) != w.terminus()) continue;
        if (w.letters().front() == l.inverted()) continue;
        next.push_back(Word::letter(alphabet, l) * w);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace selfsim
