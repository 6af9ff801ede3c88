#include "sigtree/labelling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigtree/errors.hpp"
#include "sigtree/signature.hpp"

namespace sigtree {
namespace {

struct LabelledPrefix {
  TreePrefix tree;
  Word labels;  // labels[j] labels the edge into node j
};

bool strictly_increasing(std::span<const Letter> w) {
  return std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) ==
         w.end();
}

LabelledPrefix build(const LabelledSignature& ls, std::size_t node_budget) {
  auto tree = generate_tree(ls.signature, node_budget);
  auto labels = ls.labelling.prefix(tree.node_count());
  const std::span<const Letter> all(labels);
  for (Node n = 0; n < tree.expanded_count(); ++n) {
    const auto& r = tree.children(n);
    if (!strictly_increasing(all.subspan(r.begin, r.size())))
      throw InvalidLabelling(n);
  }
  return {std::move(tree), std::move(labels)};
}

}  // namespace

bool check_labelling(const LabelledSignature& ls, std::size_t horizon) {
  if (horizon == 0) throw ArgumentError("horizon must be at least 1");
  const auto degrees = ls.signature.prefix(horizon);
  const auto total =
      std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  const auto lambda = ls.labelling.prefix(total);
  const auto& alphabet = ls.alphabet();
  for (Letter l : lambda)
    if (!alphabet.contains(l))
      throw AlphabetError("labelling letter outside its alphabet");
  std::span<const Letter> rest(lambda);
  for (auto d : degrees) {
    if (!strictly_increasing(rest.first(d))) return false;
    rest = rest.subspan(d);
  }
  return true;
}

WordList generate_language(const LabelledSignature& ls, std::size_t n_words) {
  if (n_words == 0) throw ArgumentError("word count must be at least 1");
  const auto prefix = build(ls, n_words);
  WordList words(prefix.tree.node_count());
  for (Node n = 0; n < prefix.tree.expanded_count(); ++n) {
    const auto& r = prefix.tree.children(n);
    for (Node c = std::max<Node>(r.begin, 1); c < r.end; ++c) {
      words[c] = words[n];
      words[c].push_back(prefix.labels[c]);
    }
  }
  words.resize(n_words);
  return words;
}

Word word_of_node(const LabelledSignature& ls, Node n) {
  const auto prefix = build(ls, n + 1);
  Word w;
  for (Node cur = n; cur != 0; cur = father(prefix.tree, cur))
    w.push_back(prefix.labels[cur]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::variant<Node, NotFound> node_of_word(const LabelledSignature& ls,
                                          std::span<const Letter> w,
                                          std::size_t horizon) {
  if (horizon == 0) throw ArgumentError("horizon must be at least 1");
  const auto prefix = build(ls, horizon);
  Node cur = 0;
  for (Letter x : w) {
    if (cur >= prefix.tree.expanded_count()) return NotFound{horizon};
    const auto& r = prefix.tree.children(cur);
    const Node first = std::max<Node>(r.begin, 1);
    auto begin = prefix.labels.begin() + first;
    auto end = prefix.labels.begin() + r.end;
    auto it = std::lower_bound(begin, end, x);
    if (it == end || *it != x) return NotFound{horizon};
    cur = static_cast<Node>(it - prefix.labels.begin());
    if (cur >= horizon) return NotFound{horizon};
  }
  return cur;
}

namespace {

Word minimal_blocks(std::span<const std::uint64_t> degrees) {
  Word w;
  for (auto d : degrees)
    for (std::uint64_t i = 0; i < d; ++i) w.push_back(static_cast<Letter>(i));
  return w;
}

}  // namespace

LabelledSignature minimal_labelling(const IntSeq& s) {
  if (const auto* p = std::get_if<IntSeq::Periodic>(&s.descriptor())) {
    std::uint64_t k = 0;
    for (auto d : p->preperiod) k = std::max(k, d);
    for (auto d : p->period) k = std::max(k, d);
    auto head = minimal_blocks(p->preperiod);
    auto period = minimal_blocks(p->period);
    if (period.empty()) {
      // All-zero period: the tree is finite, so the signature fails somewhere.
      const std::uint64_t reach =
          p->preperiod.size() +
          std::accumulate(p->preperiod.begin(), p->preperiod.end(),
                          std::uint64_t{0}) +
          1;
      throw InvalidSignature(first_violation(s.prefix(reach)).value_or(0));
    }
    return {s, LetterSeq::periodic(Alphabet::digits(k), std::move(head),
                                   std::move(period))};
  }
  const auto& sub = std::get<IntSeq::Substitutive>(s.descriptor());
  const auto reach = reachable_letters(*sub.sigma, sub.start);
  std::uint64_t k = 0;
  for (Letter c = 0; c < sub.coding.size(); ++c)
    if (reach[c]) k = std::max(k, sub.coding[c]);
  auto digits = Alphabet::digits(k);
  std::vector<Word> images;
  for (Letter c = 0; c < sub.coding.size(); ++c) {
    Word img;
    // Unreachable letters never contribute; clamp them into the alphabet.
    for (std::uint64_t i = 0; i < std::min(sub.coding[c], k); ++i)
      img.push_back(static_cast<Letter>(i));
    images.push_back(std::move(img));
  }
  return {s, LetterSeq::morphic(*sub.sigma, sub.start,
                                Morphism(sub.sigma->source(), std::move(digits),
                                         std::move(images)))};
}

std::string to_dot(const LabelledSignature& ls, std::size_t node_budget) {
  const auto prefix = build(ls, node_budget);
  const auto& alphabet = ls.alphabet();
  std::ostringstream os;
  os << "digraph language {\n  rankdir=LR;\n";
  for (Node n = 0; n < prefix.tree.node_count(); ++n)
    os << "  n" << n << " [label=\"" << n << "\"];\n";
  for (Node n = 0; n < prefix.tree.expanded_count(); ++n) {
    const auto& r = prefix.tree.children(n);
    for (Node c = r.begin; c < r.end; ++c) {
      if (c == 0) {
        os << "  n0 -> n0 [style=dashed];\n";
        continue;
      }
      os << "  n" << n << " -> n" << c << " [label=\""
         << alphabet.symbol(prefix.labels[c]) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sigtree
