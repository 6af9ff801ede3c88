#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigtree/alphabet.hpp"
#include "sigtree/substitution.hpp"

namespace sigtree {

using State = std::uint32_t;

struct Transition {
  Letter letter;
  State target;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic automaton whose states are all accepting. Transitions of
/// each state are kept sorted by letter.
class Dfa {
 public:
  /// Throws StructureError on duplicate (state, letter) pairs, unknown
  /// states or letters, or duplicate state names.
  Dfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
      std::vector<std::vector<Transition>> transitions);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const std::string& state_name(State q) const { return names_.at(q); }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  State initial() const noexcept { return initial_; }
  std::span<const Transition> transitions(State q) const {
    return transitions_.at(q);
  }
  std::size_t out_degree(State q) const { return transitions_.at(q).size(); }
  std::size_t transition_count() const noexcept;
  std::optional<State> target(State q, Letter a) const;
  bool accepts(std::span<const Letter> word) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  State initial_;
  std::vector<std::vector<Transition>> transitions_;
};

/// Keeps the states reachable from the initial state, in their original order.
Dfa trim(const Dfa& d);

bool is_trim(const Dfa& d);

/// Some cycle is reachable from the initial state, i.e. the language is
/// infinite.
bool has_reachable_cycle(const Dfa& d);

/// Moore partition refinement; with every state accepting, states merge when
/// their transitions agree letter by letter up to the partition.
Dfa minimize(const Dfa& d);

/// First n words in radix order (fewer if the language is finite).
WordList enumerate_radix(const Dfa& d, std::size_t n);

/// Relabels the transitions of each state by their rank 0, 1, ... among
/// the letters defined at that state.
Dfa minimal_label_dfa(const Dfa& d);

/// The automaton of a trim DFA with the sentinel '#' added below every
/// letter, as a #-loop on a fresh copy of the initial state. It accepts
/// #*L exactly, also when the initial state is re-entered.
class SentinelDfa {
 public:
  /// Throws AlphabetError if `d` already uses the sentinel.
  explicit SentinelDfa(const Dfa& d);

  const Dfa& dfa() const noexcept { return dfa_; }

 private:
  Dfa dfa_;
};

/// Reads the morphisms off the automaton: states are letters, sigma(p) lists
/// the targets of p and g(p) their labels, in letter order. Throws
/// AlphabetError on a sentinel letter, FiniteLanguage when no cycle is
/// reachable.
SubstitutiveLabelledSignature dfa_to_signature(const Dfa& d);

/// The automaton over g's alphabet whose states are sigma's letters, with
/// b -x-> c when c and x sit at the same position of sigma(b) and g(b). The
/// loop on the start letter labelled by the first letter of g(start) is
/// removed on the root only, by starting from a copy of the start state
/// without it. A sentinel letter left unused afterwards is dropped from the
/// alphabet. Throws NonIncreasingImage.
Dfa signature_to_dfa(const SubstitutiveLabelledSignature& sls);

/// Converts d to a substitutive labelled signature and back, and compares
/// the first n words of both languages symbol by symbol.
bool conversion_roundtrip(const Dfa& d, std::size_t n);

std::string to_dot(const Dfa& d);

}  // namespace sigtree
