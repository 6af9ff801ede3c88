#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sigtree/alphabet.hpp"

namespace sigtree {

/// Letter -> non-negative integer, indexed by letter.
using Coding = std::vector<std::uint64_t>;

/// A word morphism from `source()`* to `target()`*, given by one image per
/// source letter. An endomorphism has equal source and target alphabets.
class Morphism {
 public:
  /// Throws ArgumentError unless there is exactly one image per source
  /// letter and every image letter belongs to `target`.
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  static Morphism endomorphism(Alphabet alphabet, std::vector<Word> images);
  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  bool is_endomorphism() const noexcept { return source_ == target_; }
  /// Every image has length one.
  bool is_coding() const noexcept;

  Word apply(std::span<const Letter> word) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

/// sigma(a) starts with a and |sigma^n(a)| grows without bound.
///
/// Growth is decided exactly on the letter graph (an edge c -> d for every
/// occurrence of d in sigma(c)). Mortal letters, those erased after finitely
/// many steps, are removed first. On the remaining letters the morphism is
/// non-erasing, and |sigma^n(a)| is unbounded iff `a` reaches a letter c
/// lying on a cycle with |sigma(c)| >= 2 counting immortal letters only.
/// Throws ArgumentError for an endomorphism-less or out-of-range query.
bool is_prolongable(const Morphism& sigma, Letter a);

/// c -> |sigma(c)|.
Coding length_coding(const Morphism& sigma);

/// Letters occurring in sigma^n(a) for some n >= 0.
std::vector<bool> reachable_letters(const Morphism& sigma, Letter a);

}  // namespace sigtree
