#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "treekummer/errors.hpp"
#include "treekummer/tree.hpp"

using namespace treekummer;

TEST_CASE("validate accepts well-formed trees") {
  CHECK(Tree::validate(1, {}).size() == 1);

  const Tree chain = Tree::validate(3, {{0, 1}, {1, 2}});
  CHECK(chain.size() == 3);
  CHECK(chain.degree(1) == 2);
  CHECK(chain.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  // edge order and direction do not matter
  const Tree star = Tree::validate(4, {{3, 0}, {1, 3}, {3, 2}});
  CHECK(star.degree(3) == 3);
}

TEST_CASE("validate rejects malformed graphs") {
  CHECK_THROWS_AS(Tree::validate(4, {{0, 1}, {2, 3}}), DisconnectedGraph);
  CHECK_THROWS_AS(Tree::validate(2, {{0, 0}, {0, 1}}), SelfLoop);
  CHECK_THROWS_AS(Tree::validate(3, {{0, 1}, {1, 0}, {1, 2}}), DuplicateEdge);
  CHECK_THROWS_AS(Tree::validate(3, {{0, 1}, {1, 5}}), VertexOutOfRange);
  // connected but with one edge too many
  CHECK_THROWS_AS(Tree::validate(3, {{0, 1}, {1, 2}, {0, 2}}), CycleDetected);
  // the message names the problem vertex
  try {
    Tree::validate(4, {{0, 1}, {2, 3}});
    FAIL("expected throw");
  } catch (const DisconnectedGraph& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("root_tree orients the skeleton") {
  const Tree chain = Tree::validate(3, {{0, 1}, {1, 2}});

  const DirectedTree r0 = root_tree(chain, 0);
  CHECK(r0.parent[1] == 0);
  CHECK(r0.parent[2] == 1);
  CHECK(r0.parent[0] == -1);

  const DirectedTree r1 = root_tree(chain, 1);
  CHECK(r1.children[1] == std::vector<int>{0, 2});
  CHECK(r1.children[0].empty());
  CHECK(r1.children[2].empty());

  const Tree star = Tree::validate(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(root_tree(star, 3).children[3] == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS(root_tree(chain, 7), VertexOutOfRange);
}

TEST_CASE("root_tree round trip keeps the skeleton") {
  Rng rng(11);
  for (int p : {1, 2, 5, 9}) {
    const Tree t = oracles::random_tree(rng, p);
    for (int r = 0; r < p; ++r) {
      CHECK(root_tree(t, r).skeleton.edges() == t.edges());
    }
  }
}

TEST_CASE("depth_order puts children strictly before parents") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Tree t = oracles::random_tree(rng, 2 + static_cast<int>(rng.below(10)));
    const DirectedTree dt = root_tree(t, static_cast<int>(rng.below(t.size())));
    std::vector<int> position(t.size());
    for (int i = 0; i < t.size(); ++i) position[dt.depth_order[i]] = i;
    for (int v = 0; v < t.size(); ++v) {
      for (int child : dt.children[v]) {
        CHECK(position[child] < position[v]);
      }
    }
  }
}

TEST_CASE("leaves") {
  CHECK(Tree::validate(3, {{0, 1}, {1, 2}}).leaves() == std::vector<int>{0, 2});
  CHECK(Tree::validate(4, {{0, 3}, {1, 3}, {2, 3}}).leaves() ==
        std::vector<int>{0, 1, 2});
  CHECK(Tree::validate(2, {{0, 1}}).leaves() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(Tree::validate(1, {}).leaves(), SizeOneTree);
}

TEST_CASE("subtree enumeration on the worked examples") {
  const Tree chain = Tree::validate(3, {{0, 1}, {1, 2}});
  const auto subtrees = enumerate_subtrees(chain);
  REQUIRE(subtrees.size() == 6);
  std::set<std::vector<int>> got;
  for (const auto& s : subtrees) got.insert(s.vertices);
  const std::set<std::vector<int>> expected = {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}};
  CHECK(got == expected);

  const Tree star = Tree::validate(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(enumerate_subtrees(star).size() == 11);

  CHECK(enumerate_subtrees(Tree::validate(1, {})).size() == 1);
}

TEST_CASE("subtrees are themselves trees") {
  Rng rng(13);
  const Tree t = oracles::random_tree(rng, 9);
  for (const auto& s : enumerate_subtrees(t)) {
    CHECK(s.edges.size() + 1 == s.vertices.size());
    for (auto [i, j] : s.edges) {
      CHECK(std::binary_search(s.vertices.begin(), s.vertices.end(), i));
      CHECK(std::binary_search(s.vertices.begin(), s.vertices.end(), j));
    }
  }
}

TEST_CASE("enumeration agrees with subset filtering") {
  Rng rng(14);
  for (int p : {2, 4, 7, 10, 12}) {
    const Tree t = oracles::random_tree(rng, p);
    auto got = enumerate_subtrees(t);
    std::set<std::vector<int>> got_sets;
    for (const auto& s : got) {
      CHECK(got_sets.insert(s.vertices).second);  // no duplicates
    }
    const auto expected = oracles::subtrees_by_subset_filter(t);
    CHECK(got.size() == expected.size());
    for (const auto& verts : expected) {
      CHECK(got_sets.count(verts) == 1);
    }
  }
}

TEST_CASE("subtree count lower bound") {
  Rng rng(15);
  for (int p : {1, 2, 3, 5, 8}) {
    const Tree t = oracles::random_tree(rng, p);
    const size_t count = enumerate_subtrees(t).size();
    const size_t bound = t.size() + t.edges().size();
    CHECK(count >= bound);
    if (p <= 2) {
      CHECK(count == bound);
    } else {
      CHECK(count > bound);
    }
  }
}

TEST_CASE("enumeration cap") {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < 21; ++v) edges.emplace_back(v - 1, v);
  const Tree big = Tree::validate(21, std::move(edges));
  CHECK_THROWS_AS(enumerate_subtrees(big), TooLarge);
}
