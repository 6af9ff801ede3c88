#pragma once

#include <span>

#include "sigtree/labelling.hpp"
#include "sigtree/morphism.hpp"
#include "sigtree/sequence.hpp"

namespace sigtree {

/// sigma^omega(a). Throws NotProlongable.
LetterSeq fixed_point(const Morphism& sigma, Letter a);

/// f_sigma(sigma^omega(a)) where f_sigma(c) = |sigma(c)|. Throws
/// NotProlongable.
IntSeq substitutive_signature(const Morphism& sigma, Letter a);

/// (f_sigma(sigma^omega(a)), g(sigma^omega(a))) with |g(c)| = |sigma(c)|.
class SubstitutiveLabelledSignature {
 public:
  /// Throws ArgumentError when sigma is not an endomorphism or g has a
  /// different source alphabet, NotProlongable, or LengthMismatch naming
  /// the first letter with |g(c)| != |sigma(c)|.
  SubstitutiveLabelledSignature(Morphism sigma, Letter start, Morphism labels);

  const Morphism& sigma() const noexcept { return sigma_; }
  Letter start() const noexcept { return start_; }
  const Morphism& labels() const noexcept { return labels_; }

 private:
  Morphism sigma_;
  Letter start_;
  Morphism labels_;
};

LabelledSignature substitutive_labelled_signature(
    const SubstitutiveLabelledSignature& sls);

struct PeriodicSubstitution {
  Morphism sigma;
  Letter start;
};

/// A prolongable morphism whose length-coded fixed point is u.v^omega.
///
/// For u empty the alphabet is 0..|v|-1 and the images cut (0 1 ... |v|-1)^omega
/// into consecutive blocks of lengths v[0], v[1], ... Otherwise letters
/// b0..b{n-1} for the positions of u and a0..a{k-1} for those of v; the
/// images of the b's cut (b0..b{n-1})(a0..a{k-1})^omega into blocks of
/// lengths u[i], those of the a's continue cyclically through the a's.
///
/// Throws InvalidSignature unless u.v^omega is provably valid,
/// NonIntegerGrowthRatio when |v| does not divide sum(v), ArgumentError on
/// a zero in u.
PeriodicSubstitution periodic_to_substitution(std::span<const std::uint64_t> u,
                                              std::span<const std::uint64_t> v);

}  // namespace sigtree
