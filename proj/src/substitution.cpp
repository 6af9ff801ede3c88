#include "sigtree/substitution.hpp"

#include <numeric>

#include "sigtree/errors.hpp"
#include "sigtree/signature.hpp"

namespace sigtree {

LetterSeq fixed_point(const Morphism& sigma, Letter a) {
  if (!is_prolongable(sigma, a))
    throw NotProlongable(sigma.source().symbol(a));
  return LetterSeq::morphic(sigma, a, Morphism::identity(sigma.source()));
}

IntSeq substitutive_signature(const Morphism& sigma, Letter a) {
  if (!is_prolongable(sigma, a))
    throw NotProlongable(sigma.source().symbol(a));
  return IntSeq::substitutive(sigma, a, length_coding(sigma));
}

SubstitutiveLabelledSignature::SubstitutiveLabelledSignature(Morphism sigma,
                                                             Letter start,
                                                             Morphism labels)
    : sigma_(std::move(sigma)), start_(start), labels_(std::move(labels)) {
  if (!sigma_.is_endomorphism())
    throw ArgumentError("substitutive signatures need an endomorphism");
  if (!(labels_.source() == sigma_.source()))
    throw ArgumentError("label morphism must be defined on sigma's alphabet");
  if (!is_prolongable(sigma_, start_))
    throw NotProlongable(sigma_.source().symbol(start_));
  for (Letter c = 0; c < sigma_.source().size(); ++c)
    if (sigma_.image(c).size() != labels_.image(c).size())
      throw LengthMismatch(sigma_.source().symbol(c));
}

LabelledSignature substitutive_labelled_signature(
    const SubstitutiveLabelledSignature& sls) {
  return {IntSeq::substitutive(sls.sigma(), sls.start(),
                               length_coding(sls.sigma())),
          LetterSeq::morphic(sls.sigma(), sls.start(), sls.labels())};
}

PeriodicSubstitution periodic_to_substitution(std::span<const std::uint64_t> u,
                                              std::span<const std::uint64_t> v) {
  for (auto x : u)
    if (x == 0)
      throw ArgumentError("zero degree in the preperiod is not supported");
  const IntWord head(u.begin(), u.end());
  const IntWord period(v.begin(), v.end());
  const auto s = IntSeq::periodic(head, period);
  const auto report = check_valid(s, head.size() + period.size());
  if (!report.proven_forever) {
    if (report.first_violation) throw InvalidSignature(*report.first_violation);
    // sum(v) < |v|: the surplus shrinks every period until the condition fails.
    const std::uint64_t total =
        std::accumulate(u.begin(), u.end(), std::uint64_t{0}) +
        std::accumulate(v.begin(), v.end(), std::uint64_t{0});
    const auto longer = s.prefix(u.size() + v.size() * (total + 2));
    throw InvalidSignature(first_violation(longer).value_or(0));
  }
  const Rational ratio = growth_ratio(v);
  if (ratio.denominator() != 1) throw NonIntegerGrowthRatio(ratio);

  const std::size_t n = u.size();
  const std::size_t k = v.size();
  std::vector<std::string> symbols;
  if (n == 0) {
    for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::to_string(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) symbols.push_back("b" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i) symbols.push_back("a" + std::to_string(i));
  }

  // Letter at position p of (b0 .. b{n-1})(a0 .. a{k-1})^omega; the b's are
  // letters 0..n-1 and the a's letters n..n+k-1.
  auto letter_at = [n, k](std::uint64_t p) -> Letter {
    if (p < n) return static_cast<Letter>(p);
    return static_cast<Letter>(n + (p - n) % k);
  };

  std::vector<Word> images(n + k);
  std::uint64_t cursor = 0;
  auto carve = [&](std::size_t letter, std::uint64_t length) {
    for (std::uint64_t i = 0; i < length; ++i)
      images[letter].push_back(letter_at(cursor++));
  };
  for (std::size_t i = 0; i < n; ++i) carve(i, u[i]);
  for (std::size_t i = 0; i < k; ++i) carve(n + i, v[i]);

  PeriodicSubstitution result{
      Morphism::endomorphism(Alphabet(std::move(symbols)), std::move(images)),
      0};

  const std::size_t check_length = n + 4 * k + 8;
  const auto produced =
      substitutive_signature(result.sigma, result.start).prefix(check_length);
  if (produced != s.prefix(check_length))
    throw std::logic_error("periodic substitution does not reproduce u.v^omega");
  return result;
}

}  // namespace sigtree
