#pragma once

#include <utility>
#include <vector>

namespace treekummer {

// Undirected tree on vertices 0..p-1. Immutable after construction, so
// instances can be shared freely across threads.
class Tree {
 public:
  // Checks that (vertices, edges) really is a tree. Throws SelfLoop,
  // DuplicateEdge, VertexOutOfRange, DisconnectedGraph or CycleDetected,
  // naming the offending edge or vertex in the message.
  static Tree validate(int num_vertices, std::vector<std::pair<int, int>> edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  // Canonical edge list: (min,max) pairs in ascending order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Vertices of degree 1, ascending. A single-vertex tree has no leaf
  // notion; throws SizeOneTree in that case.
  std::vector<int> leaves() const;

  // Default-constructed state is empty and only useful as a placeholder;
  // real instances come from validate().
  Tree() = default;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;  // ascending neighbor lists
};

// Tree oriented from a chosen root towards the leaves.
struct DirectedTree {
  Tree skeleton;
  int root = 0;
  std::vector<int> parent;                 // parent[root] == -1
  std::vector<std::vector<int>> children;  // ascending vertex order
  // Every vertex appears strictly after all of its children, i.e. sorted by
  // decreasing distance from the root. This is the evaluation schedule for
  // the child-products in the tree transformations.
  std::vector<int> depth_order;
};

DirectedTree root_tree(const Tree& tree, int root);

// Connected induced subgraph of a tree, kept in the original vertex labels.
struct Subtree {
  std::vector<int> vertices;               // ascending
  std::vector<std::pair<int, int>> edges;  // induced edges, canonical pairs
};

inline constexpr int kSubtreeEnumerationCap = 20;

// Every nonempty connected induced subgraph, each exactly once (singletons
// and the full tree included). Counts grow exponentially, hence the cap;
// throws TooLarge above it.
std::vector<Subtree> enumerate_subtrees(const Tree& tree);

}  // namespace treekummer
