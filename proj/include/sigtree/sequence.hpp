#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigtree/alphabet.hpp"
#include "sigtree/morphism.hpp"

namespace sigtree {

using IntWord = std::vector<std::uint64_t>;

namespace detail {

// Lazily expands sigma^omega(start). Position i is produced by expanding
// the letters before it; valid because sigma(start) = start.u.
class FixedPointStream {
 public:
  FixedPointStream(std::shared_ptr<const Morphism> sigma, Letter start);
  Letter at(std::size_t i);

 private:
  std::shared_ptr<const Morphism> sigma_;
  Word buffer_;
  std::size_t expanded_ = 1;
};

}  // namespace detail

/// A finitely described infinite sequence of non-negative integers:
/// either u.v^omega or coding(sigma^omega(start)).
class IntSeq {
 public:
  struct Periodic {
    IntWord preperiod;
    IntWord period;
  };
  struct Substitutive {
    std::shared_ptr<const Morphism> sigma;
    Letter start;
    Coding coding;
  };
  using Descriptor = std::variant<Periodic, Substitutive>;

  /// Throws ArgumentError on an empty period.
  static IntSeq periodic(IntWord preperiod, IntWord period);
  /// Throws ArgumentError unless sigma is an endomorphism, `start` is a
  /// letter and `coding` has one value per letter. Prolongability is
  /// checked when the sequence is read.
  static IntSeq substitutive(Morphism sigma, Letter start, Coding coding);

  const Descriptor& descriptor() const noexcept { return descriptor_; }
  bool is_periodic() const noexcept {
    return std::holds_alternative<Periodic>(descriptor_);
  }

  /// Restartable reader over the sequence.
  class Reader {
   public:
    std::uint64_t next();

   private:
    friend class IntSeq;
    explicit Reader(const IntSeq& seq);
    Descriptor descriptor_;
    std::size_t pos_ = 0;
    std::optional<detail::FixedPointStream> stream_;
  };

  /// Throws NotProlongable (a ConfigError) for a substitutive descriptor
  /// whose morphism is not prolongable on its start letter.
  Reader reader() const { return Reader(*this); }
  IntWord prefix(std::size_t n) const;

  std::string describe() const;

 private:
  explicit IntSeq(Descriptor d) : descriptor_(std::move(d)) {}
  Descriptor descriptor_;
};

/// A finitely described infinite sequence over an ordered alphabet:
/// either u.v^omega or image(sigma^omega(start)) for a morphism `image`
/// from sigma's alphabet to the sequence alphabet.
class LetterSeq {
 public:
  struct Periodic {
    Alphabet alphabet;
    Word preperiod;
    Word period;
  };
  struct Morphic {
    std::shared_ptr<const Morphism> sigma;
    Letter start;
    std::shared_ptr<const Morphism> image;
  };
  using Descriptor = std::variant<Periodic, Morphic>;

  /// Throws ArgumentError on an empty period, AlphabetError when a letter
  /// lies outside the alphabet.
  static LetterSeq periodic(Alphabet alphabet, Word preperiod, Word period);
  /// Throws ArgumentError unless sigma is an endomorphism and image's source
  /// alphabet is sigma's alphabet.
  static LetterSeq morphic(Morphism sigma, Letter start, Morphism image);

  const Descriptor& descriptor() const noexcept { return descriptor_; }
  const Alphabet& alphabet() const noexcept;

  class Reader {
   public:
    Letter next();

   private:
    friend class LetterSeq;
    explicit Reader(const LetterSeq& seq);
    Descriptor descriptor_;
    std::size_t pos_ = 0;
    std::optional<detail::FixedPointStream> stream_;
    Word pending_;
    std::size_t pending_pos_ = 0;
  };

  Reader reader() const { return Reader(*this); }
  Word prefix(std::size_t n) const;

 private:
  explicit LetterSeq(Descriptor d) : descriptor_(std::move(d)) {}
  Descriptor descriptor_;
};

}  // namespace sigtree
