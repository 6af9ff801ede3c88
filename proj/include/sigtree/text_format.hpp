#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sigtree/automata.hpp"
#include "sigtree/labelling.hpp"
#include "sigtree/morphism.hpp"
#include "sigtree/sequence.hpp"

namespace sigtree {

// Text formats. All parsers throw ParseError on malformed input. Blank lines
// and lines starting with "# " are ignored.

/// Comma-separated non-negative integers.
IntWord parse_int_list(std::string_view text);

/// Morphism file:
///
///   alphabet: 0,1
///   start: 0
///   0 -> 0 1
///   1 -> 0
///   label-alphabet: 0,1      (optional, defaults to the alphabet)
///   label-images:
///   0 -> 0 1
///   1 -> 0
///
/// Image letters are separated by whitespace; an empty image is `x ->`.
struct MorphismFile {
  Morphism sigma;
  Letter start;
  std::optional<Morphism> labels;
};

MorphismFile parse_morphism_file(std::string_view text);
std::string format_morphism_file(const MorphismFile& file);
MorphismFile read_morphism_file(const std::string& path);

/// Signature descriptors: `periodic:u=2;v=1`, `periodic:v=3,2,1` or
/// `morphism:PATH` for f_sigma(sigma^omega(start)).
IntSeq parse_signature(std::string_view text);

/// Labelling descriptors over `alphabet`: `periodic:u=a,b;v=c` or
/// `morphism:PATH`, which reads g(sigma^omega(start)) from the label-images
/// section, or sigma^omega(start) itself when the file has none.
/// `alphabet` is required for periodic descriptors; for morphism files it
/// must match the label alphabet when given.
LetterSeq parse_labelling(std::string_view text,
                          const std::optional<Alphabet>& alphabet);

/// Comma-separated symbols; the sentinel is rejected.
Alphabet parse_alphabet(std::string_view text);

/// Automaton file:
///
///   alphabet: a,b,c
///   initial: q0
///   states: q0,q1            (optional)
///   q0 a q1
///
/// States are numbered in the order of the `states:` line, then by first
/// appearance, the initial state first. format_dfa writes `states:` unless
/// the initial state is the only one; states listed there before the initial
/// one move after it.
Dfa parse_dfa(std::string_view text);
std::string format_dfa(const Dfa& d);
Dfa read_dfa(const std::string& path);

}  // namespace sigtree
