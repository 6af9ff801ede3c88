#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "sigtree/sequence.hpp"
#include "sigtree/tree.hpp"

namespace sigtree {

/// A signature together with a labelling over an ordered alphabet. The
/// labelling splits into blocks w_0 w_1 ... with |w_k| = s_k; the edge into
/// node j is labelled by the j-th letter, so the first letter of w_0 labels
/// the root self-loop and never appears in a word.
struct LabelledSignature {
  IntSeq signature;
  LetterSeq labelling;

  const Alphabet& alphabet() const noexcept { return labelling.alphabet(); }
};

/// True iff the first `horizon` blocks have lengths s_0..s_{horizon-1} and
/// each is strictly increasing. Throws AlphabetError on a foreign letter.
bool check_labelling(const LabelledSignature& ls, std::size_t horizon);

/// The first n_words words of L(s, lambda) in radix order; word 0 is the
/// empty word. Throws InvalidSignature or InvalidLabelling when the consumed
/// prefix is not valid.
WordList generate_language(const LabelledSignature& ls, std::size_t n_words);

/// Label of the path from the root to node n.
Word word_of_node(const LabelledSignature& ls, Node n);

/// `w` is not among the words of the first `horizon` nodes.
struct NotFound {
  std::size_t horizon;
  friend bool operator==(const NotFound&, const NotFound&) = default;
};

std::variant<Node, NotFound> node_of_word(const LabelledSignature& ls,
                                          std::span<const Letter> w,
                                          std::size_t horizon);

/// Block k is 0 1 ... (s_k - 1) over the digits below the maximal degree.
LabelledSignature minimal_labelling(const IntSeq& s);

/// Graphviz digraph of the labelled tree truncated to `node_budget` nodes.
std::string to_dot(const LabelledSignature& ls, std::size_t node_budget);

}  // namespace sigtree
