#include "sigtree/tree.hpp"

#include <algorithm>
#include <sstream>

#include "sigtree/errors.hpp"

namespace sigtree {

TreePrefix TreePrefix::from_ranges(std::vector<ChildRange> ranges,
                                   TreeForm form) {
  if (ranges.empty()) throw StructureError("tree prefix has no expanded node");
  Node cursor = form == TreeForm::itree ? 0 : 1;
  for (Node n = 0; n < ranges.size(); ++n) {
    const auto& r = ranges[n];
    if (r.end < r.begin)
      throw StructureError("child range of node " + std::to_string(n) +
                           " is reversed");
    if (r.begin != cursor)
      throw StructureError("children of node " + std::to_string(n) +
                           " do not follow those of node " +
                           std::to_string(n - 1));
    const bool root_loop = form == TreeForm::itree && n == 0;
    if (root_loop && r.empty())
      throw StructureError("i-tree root must be its own first child");
    if (!root_loop && n >= cursor)
      throw StructureError("node " + std::to_string(n) +
                           " is expanded before it has a father");
    cursor = r.end;
  }
  return TreePrefix(std::move(ranges), form, cursor);
}

const ChildRange& TreePrefix::children(Node n) const {
  if (n >= ranges_.size())
    throw ArgumentError("node " + std::to_string(n) + " is not expanded");
  return ranges_[n];
}

TreePrefix generate_tree(const IntSeq& s, std::size_t node_budget) {
  if (node_budget == 0) throw ArgumentError("node budget must be at least 1");
  auto reader = s.reader();
  std::vector<ChildRange> ranges;
  Node next = 0;  // first node not yet created
  for (Node n = 0;; ++n) {
    const std::uint64_t degree = reader.next();
    ranges.push_back({next, next + degree});
    next += degree;
    // sum_{i<=n} s_i = next must exceed n+1, so that node n+1 exists.
    if (next <= n + 1) throw InvalidSignature(n);
    if (next >= node_budget) break;
  }
  return TreePrefix::from_ranges(std::move(ranges), TreeForm::itree);
}

IntWord signature_of(const TreePrefix& t) {
  IntWord s;
  s.reserve(t.expanded_count());
  for (const auto& r : t.ranges()) s.push_back(r.size());
  if (t.form() == TreeForm::tree) s.front() += 1;
  return s;
}

Node father(const TreePrefix& t, Node n) {
  if (n >= t.node_count())
    throw ArgumentError("node " + std::to_string(n) + " outside the prefix");
  if (n == 0) {
    if (t.form() == TreeForm::tree)
      throw ArgumentError("the root of a tree has no father");
    return 0;
  }
  const auto& ranges = t.ranges();
  auto it = std::partition_point(ranges.begin(), ranges.end(),
                                 [n](const ChildRange& r) { return r.end <= n; });
  return static_cast<Node>(it - ranges.begin());
}

TreePrefix to_tree_form(const TreePrefix& t) {
  if (t.form() == TreeForm::tree) return t;
  auto ranges = t.ranges();
  ranges.front().begin = 1;
  return TreePrefix::from_ranges(std::move(ranges), TreeForm::tree);
}

TreePrefix to_itree_form(const TreePrefix& t) {
  if (t.form() == TreeForm::itree) return t;
  auto ranges = t.ranges();
  ranges.front().begin = 0;
  return TreePrefix::from_ranges(std::move(ranges), TreeForm::itree);
}

std::string to_dot(const TreePrefix& t) {
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=LR;\n";
  for (Node n = 0; n < t.node_count(); ++n)
    os << "  n" << n << " [label=\"" << n << "\"];\n";
  for (Node n = 0; n < t.expanded_count(); ++n) {
    const auto& r = t.children(n);
    for (Node c = r.begin; c < r.end; ++c)
      os << "  n" << n << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sigtree
