#include "sigtree/alphabet.hpp"

#include <algorithm>

#include "sigtree/errors.hpp"

namespace sigtree {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.empty()) throw AlphabetError("empty alphabet symbol");
    if (s.find_first_of(" \t\r\n,") != std::string::npos)
      throw AlphabetError("alphabet symbol '" + s + "' contains a separator");
    if (s == kSentinel && i != 0)
      throw AlphabetError("the sentinel '#' must be the smallest letter");
    if (std::find(symbols_.begin(), symbols_.begin() + i, s) !=
        symbols_.begin() + i)
      throw AlphabetError("duplicate alphabet symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::digits(std::size_t k) {
  std::vector<std::string> symbols;
  symbols.reserve(k);
  for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::to_string(i));
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::with_sentinel(const Alphabet& base) {
  if (base.has_sentinel())
    throw AlphabetError("alphabet already contains the sentinel '#'");
  std::vector<std::string> symbols;
  symbols.reserve(base.size() + 1);
  symbols.emplace_back(kSentinel);
  symbols.insert(symbols.end(), base.symbols_.begin(), base.symbols_.end());
  return Alphabet(std::move(symbols));
}

const std::string& Alphabet::symbol(Letter l) const {
  if (!contains(l))
    throw AlphabetError("letter index " + std::to_string(l) +
                        " outside an alphabet of size " +
                        std::to_string(size()));
  return symbols_[l];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Letter>(it - symbols_.begin());
}

Letter Alphabet::index(std::string_view symbol) const {
  if (auto l = find(symbol)) return *l;
  throw AlphabetError("letter '" + std::string(symbol) +
                      "' is not in the alphabet");
}

std::string Alphabet::render(std::span<const Letter> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single_char_) out += '.';
    out += symbol(word[i]);
  }
  return out;
}

std::vector<std::string> Alphabet::spell(std::span<const Letter> word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (Letter l : word) out.push_back(symbol(l));
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text.empty() || text == "ε") return w;
  if (single_char_) {
    for (char c : text) w.push_back(index(std::string_view(&c, 1)));
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    w.push_back(index(text.substr(pos, dot - pos)));
    pos = dot + 1;
  }
  return w;
}

bool radix_less(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace sigtree
