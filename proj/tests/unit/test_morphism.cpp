#include <doctest.h>

#include "oracles.hpp"
#include "sigtree/errors.hpp"
#include "sigtree/signature.hpp"
#include "sigtree/substitution.hpp"

using namespace sigtree;

namespace {

const Alphabet bits = Alphabet::digits(2);
const Morphism fib = Morphism::endomorphism(bits, {{0, 1}, {0}});

Word repeat(const Word& w, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

TEST_CASE("morphism construction") {
  CHECK_THROWS_AS(Morphism::endomorphism(bits, {{0}}), ArgumentError);
  CHECK_THROWS_AS(Morphism::endomorphism(bits, {{0, 2}, {0}}), ArgumentError);
  CHECK(Morphism::identity(bits).is_coding());
  CHECK_FALSE(fib.is_coding());
  CHECK(fib.apply(Word{0, 1, 0}) == Word{0, 1, 0, 0, 1});
}

TEST_CASE("prolongability examples") {
  CHECK(is_prolongable(fib, 0));
  CHECK_FALSE(is_prolongable(fib, 1));  // sigma(1) = 0 does not start with 1
  CHECK_FALSE(is_prolongable(Morphism::identity(Alphabet({"x"})), 0));
  const Alphabet two_one({"1", "2"});
  const auto rhythm = Morphism::endomorphism(two_one, {{1, 0}, {1, 0}});
  CHECK(is_prolongable(rhythm, 1));
  CHECK_THROWS_AS(is_prolongable(fib, 5), ArgumentError);

  // x -> x e with e erased: |sigma^n(x)| stays 2.
  const auto erased = Morphism::endomorphism(Alphabet({"x", "e"}), {{0, 1}, {}});
  CHECK_FALSE(is_prolongable(erased, 0));
  // x -> x y, y -> y: linear growth.
  const auto linear = Morphism::endomorphism(Alphabet({"x", "y"}), {{0, 1}, {1}});
  CHECK(is_prolongable(linear, 0));
  // x -> x y, y -> z, z -> y: the extra letters cycle but do not grow; x
  // still grows linearly.
  const auto cycling =
      Morphism::endomorphism(Alphabet({"x", "y", "z"}), {{0, 1}, {2}, {1}});
  CHECK(is_prolongable(cycling, 0));
}

TEST_CASE("prolongability agrees with brute-force growth") {
  oracle::Rng rng(5);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = oracle::uniform(rng, 1, 5);
    std::vector<Word> images(k);
    for (auto& img : images) {
      const std::size_t len = oracle::uniform(rng, 0, 3);
      for (std::size_t i = 0; i < len; ++i)
        img.push_back(static_cast<Letter>(oracle::uniform(rng, 0, k - 1)));
    }
    if (!images[0].empty() && oracle::uniform(rng, 0, 1)) images[0][0] = 0;
    const auto sigma = Morphism::endomorphism(Alphabet::digits(k), images);
    const bool expected = !sigma.image(0).empty() && sigma.image(0)[0] == 0 &&
                          oracle::grows_without_bound(sigma, 0);
    CHECK(is_prolongable(sigma, 0) == expected);
    positives += expected;
  }
  CHECK(positives > 20);
}

TEST_CASE("fixed points") {
  CHECK(bits.render(fixed_point(fib, 0).prefix(13)) == "0100101001001");
  const auto xy = Morphism::endomorphism(Alphabet({"x", "y"}), {{0, 1}, {1}});
  CHECK(fixed_point(xy, 0).prefix(5) == Word{0, 1, 1, 1, 1});
  const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 2, 1});
  CHECK(fixed_point(sub.sigma, sub.start).prefix(9) == Word{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK_THROWS_AS(fixed_point(fib, 1), NotProlongable);
}

TEST_CASE("length coding") {
  CHECK(length_coding(fib) == Coding{2, 1});
  CHECK(length_coding(Morphism::identity(Alphabet({"x"}))) == Coding{1});
  const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 2, 1});
  CHECK(length_coding(sub.sigma) == Coding{3, 2, 1});
}

TEST_CASE("substitutive signatures") {
  SUBCASE("Fibonacci labelled by itself") {
    const auto ls = substitutive_labelled_signature(
        SubstitutiveLabelledSignature(fib, 0, fib));
    CHECK(ls.signature.prefix(13) == IntWord{2, 1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2, 1});
    CHECK(bits.render(ls.labelling.prefix(13)) == "0100101001001");
  }
  SUBCASE("binary tree") {
    const Alphabet x({"x"});
    const auto sigma = Morphism::endomorphism(x, {{0, 0}});
    const auto ls = substitutive_labelled_signature(
        SubstitutiveLabelledSignature(sigma, 0, Morphism(x, bits, {{0, 1}})));
    CHECK(ls.signature.prefix(5) == IntWord{2, 2, 2, 2, 2});
    CHECK(ls.labelling.prefix(6) == Word{0, 1, 0, 1, 0, 1});
  }
  SUBCASE("periodic substitution labelled minimally") {
    const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 2, 1});
    const Morphism g(sub.sigma.source(), Alphabet::digits(3), {{0, 1, 2}, {0, 1}, {0}});
    const auto ls = substitutive_labelled_signature(
        SubstitutiveLabelledSignature(sub.sigma, sub.start, g));
    const auto periodic = IntSeq::periodic({}, {3, 2, 1});
    CHECK(ls.signature.prefix(300) == periodic.prefix(300));
    CHECK(ls.labelling.prefix(300) == minimal_labelling(periodic).labelling.prefix(300));
  }
  SUBCASE("errors") {
    try {
      SubstitutiveLabelledSignature(fib, 0, Morphism(bits, bits, {{0, 1}, {0, 1}}));
      FAIL("expected LengthMismatch");
    } catch (const LengthMismatch& e) {
      CHECK(e.letter() == "1");
    }
    CHECK_THROWS_AS(SubstitutiveLabelledSignature(fib, 1, fib), NotProlongable);
    CHECK_THROWS_AS(substitutive_signature(fib, 1), NotProlongable);
  }
}

TEST_CASE("periodic to substitution examples") {
  SUBCASE("v = 321") {
    const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 2, 1});
    CHECK(sub.sigma.source() == Alphabet::digits(3));
    CHECK(sub.sigma.images() == std::vector<Word>{{0, 1, 2}, {0, 1}, {2}});
    CHECK(sub.start == 0);
    CHECK(sub.sigma.apply(Word{0, 1, 2}) == repeat({0, 1, 2}, 2));
    CHECK(substitutive_signature(sub.sigma, sub.start).prefix(60) ==
          IntSeq::periodic({}, {3, 2, 1}).prefix(60));
  }
  SUBCASE("v = 21 has growth ratio 3/2") {
    try {
      periodic_to_substitution(IntWord{}, IntWord{2, 1});
      FAIL("expected NonIntegerGrowthRatio");
    } catch (const NonIntegerGrowthRatio& e) {
      CHECK(e.ratio() == Rational(3, 2));
      CHECK(std::string(e.what()) == "growth ratio 3/2 is not an integer");
    }
  }
  SUBCASE("u = 3, v = 22") {
    const auto sub = periodic_to_substitution(IntWord{3}, IntWord{2, 2});
    CHECK(sub.sigma.source().symbols() == std::vector<std::string>{"b0", "a0", "a1"});
    // b0 -> b0 a0 a1, then the a's continue cyclically after a1.
    CHECK(sub.sigma.images() == std::vector<Word>{{0, 1, 2}, {1, 2}, {1, 2}});
    CHECK(substitutive_signature(sub.sigma, sub.start).prefix(200) ==
          IntSeq::periodic({3}, {2, 2}).prefix(200));
  }
  SUBCASE("unary i-tree") {
    const auto sub = periodic_to_substitution(IntWord{2}, IntWord{1});
    CHECK(sub.sigma.images() == std::vector<Word>{{0, 1}, {1}});
  }
  SUBCASE("zero in the period") {
    // 3 0 3: growth ratio 2, partial sums 3 3 6 > 1 2 3.
    const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 0, 3});
    CHECK(sub.sigma.images() == std::vector<Word>{{0, 1, 2}, {}, {0, 1, 2}});
  }
  CHECK_THROWS_AS(periodic_to_substitution(IntWord{2, 0}, IntWord{2}), ArgumentError);
  CHECK_THROWS_AS(periodic_to_substitution(IntWord{}, IntWord{1}), InvalidSignature);
  CHECK_THROWS_AS(periodic_to_substitution(IntWord{4}, IntWord{1, 0}),
                  InvalidSignature);
}

TEST_CASE("morphism laws on random morphisms") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sigma = oracle::random_prolongable(rng, 5, 4);
    const auto f = length_coding(sigma);
    // |sigma(w)| = sum of f over w.
    Word w(oracle::uniform(rng, 0, 30));
    for (auto& c : w)
      c = static_cast<Letter>(oracle::uniform(rng, 0, sigma.source().size() - 1));
    std::uint64_t total = 0;
    for (Letter c : w) total += f[c];
    CHECK(sigma.apply(w).size() == total);

    // sigma maps prefixes of the fixed point to prefixes of it.
    const auto x = fixed_point(sigma, 0).prefix(5000);
    for (std::size_t len : {1, 10, 100, 1000}) {
      const auto img = sigma.apply(std::span<const Letter>(x).first(len));
      REQUIRE(img.size() <= x.size());
      CHECK(std::equal(img.begin(), img.end(), x.begin()));
    }
    // Substitutive signatures are valid.
    const auto s = substitutive_signature(sigma, 0);
    CHECK_FALSE(first_violation(s.prefix(10000)).has_value());
    CHECK(check_valid(s, 100).proven_forever);
  }
}

TEST_CASE("periodic substitution on random signatures") {
  oracle::Rng rng(17);
  int built = 0;
  while (built < 60) {
    auto c = oracle::random_valid_periodic(rng, 4, 6, 1, 5);
    const auto sum = std::accumulate(c.v.begin(), c.v.end(), std::uint64_t{0});
    if (sum % c.v.size() != 0) continue;
    ++built;
    const auto sub = periodic_to_substitution(c.u, c.v);
    CHECK(substitutive_signature(sub.sigma, sub.start).prefix(1000) ==
          IntSeq::periodic(c.u, c.v).prefix(1000));
    if (c.u.empty()) {
      Word block(c.v.size());
      std::iota(block.begin(), block.end(), Letter{0});
      CHECK(sub.sigma.apply(block) == repeat(block, sum / c.v.size()));
    }
  }
}
