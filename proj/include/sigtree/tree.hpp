#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigtree/sequence.hpp"

namespace sigtree {

/// Nodes are numbered in breadth-first order.
using Node = std::uint64_t;

enum class TreeForm {
  tree,   // the root has no incoming edge, theta(0) starts at 1
  itree,  // the root is its own first child, theta(0) starts at 0
};

/// Half-open interval [begin, end) of children.
struct ChildRange {
  Node begin = 0;
  Node end = 0;

  std::uint64_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(Node n) const noexcept { return begin <= n && n < end; }
  friend bool operator==(const ChildRange&, const ChildRange&) = default;
};

/// Finite prefix of an ordered tree: the nodes 0..node_count()-1 and the
/// children of the first expanded_count() nodes.
class TreePrefix {
 public:
  /// Validates the child relation and throws StructureError unless the
  /// ranges are consecutive, start at 0 (i-tree) or 1 (tree), and every
  /// expanded node already exists when its children are listed.
  static TreePrefix from_ranges(std::vector<ChildRange> ranges, TreeForm form);

  TreeForm form() const noexcept { return form_; }
  std::uint64_t node_count() const noexcept { return node_count_; }
  std::size_t expanded_count() const noexcept { return ranges_.size(); }
  Node last_expanded() const noexcept { return ranges_.size() - 1; }
  const std::vector<ChildRange>& ranges() const noexcept { return ranges_; }
  /// Children of an expanded node; throws ArgumentError otherwise.
  const ChildRange& children(Node n) const;

  friend bool operator==(const TreePrefix&, const TreePrefix&) = default;

 private:
  TreePrefix(std::vector<ChildRange> ranges, TreeForm form,
             std::uint64_t node_count)
      : ranges_(std::move(ranges)), form_(form), node_count_(node_count) {}

  std::vector<ChildRange> ranges_;
  TreeForm form_;
  std::uint64_t node_count_;
};

/// Builds the i-tree of `s` breadth-first: node n receives the next s_n
/// fresh nodes, node 0 first receiving itself. Stops after the step at
/// which at least `node_budget` nodes exist. Throws InvalidSignature with
/// index j as soon as sum_{i<=j} s_i <= j+1, ArgumentError on a zero budget.
TreePrefix generate_tree(const IntSeq& s, std::size_t node_budget);

/// Degrees of the expanded nodes; in tree form s_0 counts the root once more.
IntWord signature_of(const TreePrefix& t);

/// The node whose children contain n. In i-tree form father(0) = 0.
/// Throws ArgumentError for n outside the prefix, or n = 0 in tree form.
Node father(const TreePrefix& t, Node n);

TreePrefix to_tree_form(const TreePrefix& t);
TreePrefix to_itree_form(const TreePrefix& t);

/// Graphviz digraph; edges father -> child in child order.
std::string to_dot(const TreePrefix& t);

}  // namespace sigtree
