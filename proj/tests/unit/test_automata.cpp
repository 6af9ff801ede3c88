#include <doctest.h>

#include "oracles.hpp"
#include "sigtree/automata.hpp"
#include "sigtree/errors.hpp"
#include "sigtree/labelling.hpp"

using namespace sigtree;

namespace {

const Alphabet bits = Alphabet::digits(2);

std::vector<std::string> render(const Alphabet& a, const WordList& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(a.render(w));
  return out;
}

std::vector<std::vector<std::string>> spell(const Alphabet& a, const WordList& ws) {
  std::vector<std::vector<std::string>> out;
  for (const auto& w : ws) out.push_back(a.spell(w));
  return out;
}

Dfa unary_loop() { return Dfa(bits, {"i"}, 0, {{{0, 0}}}); }
Dfa full_binary() { return Dfa(bits, {"i"}, 0, {{{0, 0}, {1, 0}}}); }

// Minimal-labelling images c -> 0 1 ... |sigma(c)|-1.
Morphism minimal_images(const Morphism& sigma) {
  std::size_t k = 0;
  for (const auto& img : sigma.images()) k = std::max(k, img.size());
  std::vector<Word> images;
  for (const auto& img : sigma.images()) {
    Word w(img.size());
    std::iota(w.begin(), w.end(), Letter{0});
    images.push_back(w);
  }
  return Morphism(sigma.source(), Alphabet::digits(k), images);
}

}  // namespace

TEST_CASE("dfa construction checks determinism") {
  CHECK_THROWS_AS(Dfa(bits, {"p"}, 0, {{{0, 0}, {0, 0}}}), StructureError);
  CHECK_THROWS_AS(Dfa(bits, {"p"}, 0, {{{2, 0}}}), StructureError);
  CHECK_THROWS_AS(Dfa(bits, {"p"}, 0, {{{0, 1}}}), StructureError);
  CHECK_THROWS_AS(Dfa(bits, {"p", "p"}, 0, {{}, {}}), StructureError);
  const Dfa d(bits, {"p"}, 0, {{{1, 0}, {0, 0}}});
  CHECK(d.transitions(0)[0].letter == 0);  // sorted by letter
  CHECK(d.accepts(Word{1, 0, 1}));
}

TEST_CASE("trim") {
  const auto z = oracle::zeckendorf_dfa();
  CHECK(trim(z) == z);
  const Dfa extra(bits, {"i", "p", "q", "dead"}, 0,
                  {{{1, 1}}, {{0, 2}}, {{0, 2}, {1, 1}}, {{0, 1}}});
  CHECK_FALSE(is_trim(extra));
  CHECK(trim(extra) == z);
  const Dfa single(bits, {"i"}, 0, {{}});
  CHECK(trim(single) == single);
  CHECK(enumerate_radix(single, 5) == WordList{Word{}});
}

TEST_CASE("radix enumeration") {
  CHECK(render(bits, enumerate_radix(oracle::zeckendorf_dfa(), 8)) ==
        std::vector<std::string>{"", "1", "10", "100", "101", "1000", "1001", "1010"});
  CHECK(render(bits, enumerate_radix(unary_loop(), 4)) ==
        std::vector<std::string>{"", "0", "00", "000"});
  const Alphabet a({"a"});
  const Dfa chain(a, {"q0", "q1"}, 0, {{{0, 1}}, {}});
  CHECK(render(a, enumerate_radix(chain, 5)) == std::vector<std::string>{"", "a"});
  CHECK(enumerate_radix(chain, 0).empty());
}

TEST_CASE("radix enumeration agrees with brute force") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = oracle::random_infinite_dfa(rng, 6, 3);
    const auto words = enumerate_radix(d, 200);
    const auto expected = oracle::brute_force_radix(d, 200, 64);
    REQUIRE(expected.size() <= words.size());
    CHECK(WordList(words.begin(), words.begin() + expected.size()) == expected);
    if (expected.size() < words.size()) CHECK(words[expected.size()].size() > 64);
    CHECK(oracle::is_radix_increasing(words));
    CHECK(oracle::is_prefix_closed_in_order(words));
  }
}

TEST_CASE("minimal relabelling") {
  const Alphabet acd({"a", "c", "d"});
  const Dfa p(acd, {"p", "x", "y", "z"}, 0, {{{0, 1}, {1, 2}, {2, 3}}, {}, {}, {}});
  const auto relabelled = minimal_label_dfa(p);
  CHECK(relabelled.alphabet() == Alphabet::digits(3));
  CHECK(std::vector<Transition>(relabelled.transitions(0).begin(),
                                relabelled.transitions(0).end()) ==
        std::vector<Transition>{{0, 1}, {1, 2}, {2, 3}});

  const Alphabet d3 = Alphabet::digits(3);
  const Dfa sparse(d3, {"p", "q"}, 0, {{{0, 1}, {2, 0}}, {{1, 1}}});
  const auto dense = minimal_label_dfa(sparse);
  CHECK(dense.target(0, 1) == State{0});
  CHECK(dense.target(1, 0) == State{1});
  CHECK(minimal_label_dfa(dense) == dense);

  const auto z = minimal_label_dfa(oracle::zeckendorf_dfa());
  CHECK(z.target(0, 0) == State{1});  // i -1-> p becomes i -0-> p
  CHECK_FALSE(z.target(0, 1).has_value());
  CHECK(z.target(2, 0) == State{2});
  CHECK(z.target(2, 1) == State{1});
}

TEST_CASE("minimal relabelling properties") {
  oracle::Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = oracle::random_infinite_dfa(rng, 8, 4);
    const auto m = minimal_label_dfa(d);
    REQUIRE(m.state_count() == d.state_count());
    for (State q = 0; q < d.state_count(); ++q) {
      REQUIRE(m.out_degree(q) == d.out_degree(q));
      for (std::size_t i = 0; i < d.out_degree(q); ++i) {
        CHECK(m.transitions(q)[i].target == d.transitions(q)[i].target);
        CHECK(m.transitions(q)[i].letter == i);
      }
    }
    CHECK(minimal_label_dfa(m) == m);
  }
}

TEST_CASE("substitutive signature to automaton") {
  SUBCASE("Fibonacci labelled by itself") {
    const auto fib = Morphism::endomorphism(bits, {{0, 1}, {0}});
    const auto d = signature_to_dfa(SubstitutiveLabelledSignature(fib, 0, fib));
    // 0 -0-> 0 is the root loop; 1 -0-> 0 re-enters the start, so the root
    // is a fresh copy of 0 without the loop.
    CHECK(d.state_count() == 3);
    CHECK(d.transition_count() == 4);
    CHECK(d.out_degree(d.initial()) == 1);
    CHECK(minimize(d).state_count() == 3);
    const auto words = enumerate_radix(d, 300);
    for (std::size_t n = 0; n < words.size(); ++n)
      CHECK(bits.render(words[n]) == oracle::zeckendorf(n));
  }
  SUBCASE("binary tree keeps the loop off the root only") {
    const Alphabet x({"x"});
    const SubstitutiveLabelledSignature sls(Morphism::endomorphism(x, {{0, 0}}), 0,
                                            Morphism(x, bits, {{0, 1}}));
    const auto d = signature_to_dfa(sls);
    const auto words = render(bits, enumerate_radix(d, 7));
    CHECK(words == std::vector<std::string>{"", "1", "10", "11", "100", "101", "110"});
    CHECK(enumerate_radix(d, 500) ==
          generate_language(substitutive_labelled_signature(sls), 500));
  }
  SUBCASE("periodic (321) substitution with minimal labels") {
    const auto sub = periodic_to_substitution(IntWord{}, IntWord{3, 2, 1});
    const SubstitutiveLabelledSignature sls(sub.sigma, sub.start,
                                            minimal_images(sub.sigma));
    const auto d = signature_to_dfa(sls);
    CHECK(d.state_count() <= 4);
    CHECK(enumerate_radix(d, 500) ==
          generate_language(minimal_labelling(IntSeq::periodic({}, {3, 2, 1})), 500));
  }
  SUBCASE("non-increasing label image") {
    const Alphabet x({"x"});
    try {
      signature_to_dfa(SubstitutiveLabelledSignature(
          Morphism::endomorphism(x, {{0, 0}}), 0, Morphism(x, bits, {{1, 0}})));
      FAIL("expected NonIncreasingImage");
    } catch (const NonIncreasingImage& e) {
      CHECK(e.letter() == "x");
    }
  }
}

TEST_CASE("automaton to substitutive signature") {
  SUBCASE("Zeckendorf") {
    const auto sls = dfa_to_signature(oracle::zeckendorf_dfa());
    const auto& A = sls.sigma().source();
    CHECK(A.symbols() == std::vector<std::string>{"i", "p", "q"});
    CHECK(A.symbol(sls.start()) == "i");
    const auto& B = sls.labels().target();
    CHECK(B.render(sls.labels().image(A.index("i"))) == "#1");
    CHECK(A.render(sls.sigma().image(A.index("i"))) == "ip");
    CHECK(A.render(sls.sigma().image(A.index("p"))) == "q");
    CHECK(B.render(sls.labels().image(A.index("p"))) == "0");
    CHECK(A.render(sls.sigma().image(A.index("q"))) == "qp");
    CHECK(B.render(sls.labels().image(A.index("q"))) == "01");
    const auto ls = substitutive_labelled_signature(sls);
    CHECK(ls.signature.prefix(13) == IntWord{2, 1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2, 1});
  }
  SUBCASE("unary loop gets a fresh root") {
    const auto sls = dfa_to_signature(unary_loop());
    const auto ls = substitutive_labelled_signature(sls);
    CHECK(ls.signature.prefix(6) == IntWord{2, 1, 1, 1, 1, 1});
    CHECK(spell(ls.alphabet(), generate_language(ls, 100)) ==
          spell(bits, enumerate_radix(unary_loop(), 100)));
  }
  SUBCASE("full binary language") {
    const auto ls = substitutive_labelled_signature(dfa_to_signature(full_binary()));
    CHECK(ls.signature.prefix(4) == IntWord{3, 2, 2, 2});
    CHECK(spell(ls.alphabet(), generate_language(ls, 500)) ==
          spell(bits, enumerate_radix(full_binary(), 500)));
  }
  SUBCASE("errors") {
    const Alphabet a({"a"});
    CHECK_THROWS_AS(dfa_to_signature(Dfa(a, {"q0", "q1"}, 0, {{{0, 1}}, {}})),
                    FiniteLanguage);
    const Alphabet with_hash({"#", "a"});
    CHECK_THROWS_AS(dfa_to_signature(Dfa(with_hash, {"q"}, 0, {{{1, 0}}})),
                    AlphabetError);
  }
}

TEST_CASE("sentinel automaton") {
  const SentinelDfa z(oracle::zeckendorf_dfa());
  CHECK(z.dfa().state_count() == 3);  // i is never re-entered
  const SentinelDfa u(unary_loop());
  CHECK(u.dfa().state_count() == 2);
  for (const auto* s : {&z, &u}) {
    const auto& d = s->dfa();
    for (State q = 0; q < d.state_count(); ++q)
      for (const auto& t : d.transitions(q))
        if (t.letter == 0) CHECK((q == d.initial() && t.target == d.initial()));
  }
}

TEST_CASE("conversion round trip") {
  CHECK(conversion_roundtrip(oracle::zeckendorf_dfa(), 500));
  CHECK(conversion_roundtrip(unary_loop(), 100));
  CHECK(conversion_roundtrip(full_binary(), 500));
  const auto back = signature_to_dfa(dfa_to_signature(oracle::zeckendorf_dfa()));
  CHECK(back.alphabet() == bits);

  oracle::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = oracle::random_infinite_dfa(rng, 8, 4);
    CHECK(conversion_roundtrip(d, 300));
    const auto sls = dfa_to_signature(d);
    for (Letter c = 0; c < sls.sigma().source().size(); ++c)
      CHECK(sls.sigma().image(c).size() == sls.labels().image(c).size());
  }
}

TEST_CASE("minimal labelling of the extracted signature") {
  oracle::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = oracle::random_infinite_dfa(rng, 8, 4);
    const auto sls = dfa_to_signature(d);
    const auto s = substitutive_labelled_signature(sls).signature;
    const auto mu_words = generate_language(minimal_labelling(s), 300);
    // Through the automaton of the minimally labelled signature.
    CHECK(enumerate_radix(signature_to_dfa(SubstitutiveLabelledSignature(
                              sls.sigma(), sls.start(), minimal_images(sls.sigma()))),
                          300) == mu_words);
    // Against the relabelled input: the root's letters are offset by the
    // loop, which takes rank 0 there.
    auto relabelled = enumerate_radix(minimal_label_dfa(d), 300);
    for (auto& w : relabelled)
      if (!w.empty()) ++w.front();
    CHECK(relabelled == mu_words);
  }
}

TEST_CASE("minimisation preserves the language") {
  const Dfa doubled(bits, {"i", "p", "q", "p2", "q2"}, 0,
                    {{{1, 1}}, {{0, 2}}, {{0, 4}, {1, 3}}, {{0, 4}}, {{0, 2}, {1, 1}}});
  const auto m = minimize(doubled);
  CHECK(m.state_count() == 3);
  CHECK(enumerate_radix(m, 200) == enumerate_radix(doubled, 200));

  oracle::Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = oracle::random_infinite_dfa(rng, 8, 3);
    const auto md = minimize(d);
    CHECK(md.state_count() <= d.state_count());
    CHECK(enumerate_radix(md, 300) == enumerate_radix(d, 300));
    CHECK(minimize(md).state_count() == md.state_count());
  }
}

TEST_CASE("automaton dot export") {
  const auto dot = to_dot(oracle::zeckendorf_dfa());
  CHECK(dot.find("start -> s0;") != std::string::npos);
  CHECK(dot.find("s2 -> s1 [label=\"1\"];") != std::string::npos);
}
