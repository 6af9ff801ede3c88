#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigtree {

/// Letters are indices into an Alphabet; the index order is the letter order.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordList = std::vector<Word>;

/// Reserved sentinel symbol. When present it must be the smallest letter.
inline constexpr std::string_view kSentinel = "#";

/// A finite ordered alphabet. Symbols are non-empty strings without
/// whitespace or commas; their declaration order is the letter order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  /// The digit alphabet "0" < "1" < ... < "k-1".
  static Alphabet digits(std::size_t k);

  /// A copy of `base` with the sentinel prepended; letter i of `base`
  /// becomes letter i+1.
  static Alphabet with_sentinel(const Alphabet& base);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  bool contains(Letter l) const noexcept { return l < symbols_.size(); }
  bool has_sentinel() const noexcept {
    return !symbols_.empty() && symbols_.front() == kSentinel;
  }

  const std::string& symbol(Letter l) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;
  /// Like find, but throws AlphabetError for unknown symbols.
  Letter index(std::string_view symbol) const;

  /// Words render by concatenation when every symbol is one character,
  /// otherwise symbols are separated by '.'.
  std::string render(std::span<const Letter> word) const;
  std::vector<std::string> spell(std::span<const Letter> word) const;
  /// Parses a rendered word; the inverse of render.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool single_char_ = true;
};

/// Length first, then lexicographic on letter indices.
bool radix_less(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace sigtree
