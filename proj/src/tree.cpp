#include "treekummer/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "treekummer/errors.hpp"

namespace treekummer {

namespace {

std::string edge_str(int i, int j) {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

Tree Tree::validate(int num_vertices, std::vector<std::pair<int, int>> edges) {
  if (num_vertices < 1) {
    throw VertexOutOfRange("tree needs at least one vertex");
  }
  Tree t;
  t.adjacency_.assign(num_vertices, {});
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i < 0 || i >= num_vertices || j < 0 || j >= num_vertices) {
      throw VertexOutOfRange("edge " + edge_str(i, j) + " has endpoint outside 0.." +
                             std::to_string(num_vertices - 1));
    }
    if (i == j) {
      throw SelfLoop("edge " + edge_str(i, j) + " is a self-loop");
    }
    auto canon = std::minmax(i, j);
    if (!seen.insert(canon).second) {
      throw DuplicateEdge("edge " + edge_str(canon.first, canon.second) + " appears twice");
    }
    t.adjacency_[i].push_back(j);
    t.adjacency_[j].push_back(i);
  }
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  t.edges_.assign(seen.begin(), seen.end());

  // Connectivity first: a disconnected edge set is reported as such even
  // when the edge count happens to disagree too.
  std::vector<char> visited(num_vertices, 0);
  std::queue<int> bfs;
  bfs.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : t.adjacency_[v]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != num_vertices) {
    int missing = 0;
    while (visited[missing]) ++missing;
    throw DisconnectedGraph("vertex " + std::to_string(missing) +
                            " is not reachable from vertex 0");
  }
  if (static_cast<int>(t.edges_.size()) != num_vertices - 1) {
    throw CycleDetected("connected graph with " + std::to_string(t.edges_.size()) +
                        " edges on " + std::to_string(num_vertices) +
                        " vertices contains a cycle");
  }
  return t;
}

std::vector<int> Tree::leaves() const {
  if (size() == 1) {
    throw SizeOneTree("leaves are undefined for a single-vertex tree");
  }
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

DirectedTree root_tree(const Tree& tree, int root) {
  const int p = tree.size();
  if (root < 0 || root >= p) {
    throw VertexOutOfRange("root " + std::to_string(root) + " outside 0.." +
                           std::to_string(p - 1));
  }
  DirectedTree dt;
  dt.skeleton = tree;
  dt.root = root;
  dt.parent.assign(p, -1);
  dt.children.assign(p, {});
  std::vector<int> depth(p, 0);

  std::queue<int> bfs;
  std::vector<char> visited(p, 0);
  bfs.push(root);
  visited[root] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : tree.neighbors(v)) {  // ascending, so children stay ordered
      if (!visited[w]) {
        visited[w] = 1;
        dt.parent[w] = v;
        dt.children[v].push_back(w);
        depth[w] = depth[v] + 1;
        bfs.push(w);
      }
    }
  }

  dt.depth_order.resize(p);
  for (int v = 0; v < p; ++v) dt.depth_order[v] = v;
  std::stable_sort(dt.depth_order.begin(), dt.depth_order.end(),
                   [&](int a, int b) { return depth[a] > depth[b]; });
  return dt;
}

std::vector<Subtree> enumerate_subtrees(const Tree& tree) {
  const int p = tree.size();
  if (p > kSubtreeEnumerationCap) {
    throw TooLarge("subtree enumeration capped at " +
                   std::to_string(kSubtreeEnumerationCap) + " vertices, got " +
                   std::to_string(p));
  }

  // Each connected induced subgraph has a unique vertex closest to the
  // root of a fixed orientation; we enumerate it exactly there. tops[v]
  // holds all subtrees whose top vertex is v.
  DirectedTree dt = root_tree(tree, 0);
  std::vector<std::vector<Subtree>> tops(p);
  for (int v : dt.depth_order) {
    std::vector<Subtree> acc;
    acc.push_back(Subtree{{v}, {}});
    for (int w : dt.children[v]) {
      std::vector<Subtree> merged;
      merged.reserve(acc.size() * (1 + tops[w].size()));
      for (const Subtree& s : acc) {
        merged.push_back(s);
        for (const Subtree& t : tops[w]) {
          Subtree joined = s;
          joined.vertices.insert(joined.vertices.end(), t.vertices.begin(),
                                 t.vertices.end());
          joined.edges.insert(joined.edges.end(), t.edges.begin(), t.edges.end());
          joined.edges.push_back(std::minmax(v, w));
          merged.push_back(std::move(joined));
        }
      }
      acc = std::move(merged);
    }
    tops[v] = std::move(acc);
  }

  std::vector<Subtree> all;
  for (int v = 0; v < p; ++v) {
    for (Subtree& s : tops[v]) {
      std::sort(s.vertices.begin(), s.vertices.end());
      std::sort(s.edges.begin(), s.edges.end());
      all.push_back(std::move(s));
    }
  }
  return all;
}

}  // namespace treekummer
