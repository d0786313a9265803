#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtree/errors.hpp"
#include "qtree/tree.hpp"

using namespace qtree;

namespace {

std::vector<std::size_t> catalan_by_convolution(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c;
}

VertexAddr addr(std::initializer_list<std::size_t> p) { return VertexAddr{std::vector<std::size_t>(p)}; }

VertexAddr rightmost_leaf(const PlaneTree& t) {
  VertexAddr v;
  const PlaneTree* node = &t;
  while (!node->children.empty()) {
    v.path.push_back(node->children.size() - 1);
    node = &node->children.back();
  }
  return v;
}

}  // namespace

TEST_CASE("parse_tree") {
  CHECK(parse_tree(".").is_point());
  CHECK(parse_tree("(..)") == star(2));
  const PlaneTree t = parse_tree("(.(..))");
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].is_point());
  CHECK(t.children[1] == star(2));
  CHECK(parse_tree("  ( .  ( . . ) )  ") == t);
}

TEST_CASE("parse_tree errors carry offsets") {
  auto offset_of = [](const char* s) {
    try {
      parse_tree(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("(..") == 3);
  CHECK(offset_of("()") == 1);
  CHECK(offset_of("(..)x") == 4);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(.1)") == 2);
  CHECK(offset_of("..") == 1);
}

TEST_CASE("serialize") {
  CHECK(serialize(PlaneTree{}) == ".");
  CHECK(serialize(star(2)) == "(..)");
  for (const char* s : {".", "(.)", "(..)", "((.))", "(.(..))", "((..)(.(.)).)"}) CHECK(serialize(parse_tree(s)) == s);
}

TEST_CASE("parse and serialize are inverse on all small trees") {
  for (std::size_t e = 0; e <= 7; ++e) {
    for (const auto& t : enumerate_plane_trees(e)) CHECK(parse_tree(serialize(t)) == t);
  }
}

TEST_CASE("edge_count") {
  CHECK(edge_count(PlaneTree{}) == 0);
  CHECK(edge_count(star(2)) == 2);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(edge_count(star(n)) == n);
  CHECK(edge_count(path(5)) == 5);
}

TEST_CASE("leaves") {
  CHECK(leaves(PlaneTree{}).empty());
  CHECK(leaves(star(2)) == std::vector<VertexAddr>{addr({0}), addr({1})});
  CHECK(leaves(parse_tree("(.(..))")) == std::vector<VertexAddr>{addr({0}), addr({1, 0}), addr({1, 1})});
}

TEST_CASE("remove_leaf") {
  CHECK(remove_leaf(star(2), addr({1})) == parse_tree("(.)"));
  CHECK(remove_leaf(parse_tree("(.)"), addr({0})).is_point());
  CHECK(serialize(remove_leaf(parse_tree("(.(..))"), addr({1, 0}))) == "(.(.))");
  // no smoothing: the stripped parent becomes a leaf
  CHECK(serialize(remove_leaf(parse_tree("(.(.))"), addr({1, 0}))) == "(..)");
  CHECK_THROWS_AS(remove_leaf(parse_tree("(.(..))"), addr({1})), NotALeaf);
  CHECK_THROWS_AS(remove_leaf(star(2), addr({2})), InvalidAddress);
  CHECK_THROWS_AS(remove_leaf(star(2), addr({})), NotALeaf);
  CHECK_THROWS_AS(remove_leaf(PlaneTree{}, addr({})), NotALeaf);
}

TEST_CASE("removing any leaf drops exactly one edge") {
  for (std::size_t e = 1; e <= 6; ++e) {
    for (const auto& t : enumerate_plane_trees(e)) {
      const auto ls = leaves(t);
      CHECK(ls.size() == leaf_count(t));
      for (const auto& v : ls) CHECK(edge_count(remove_leaf(t, v)) == e - 1);
    }
  }
}

TEST_CASE("right_weight") {
  CHECK(right_weight(star(2), addr({0})) == 1);
  CHECK(right_weight(star(2), addr({1})) == 0);
  CHECK(right_weight(parse_tree("(.(..))"), addr({0})) == 3);
  CHECK(right_weight(parse_tree("(.(..))"), addr({1, 0})) == 1);
  CHECK_THROWS_AS(right_weight(parse_tree("(.(..))"), addr({1})), NotALeaf);
}

TEST_CASE("rightmost leaf has zero right weight") {
  for (std::size_t e = 1; e <= 7; ++e) {
    for (const auto& t : enumerate_plane_trees(e)) CHECK(right_weight(t, rightmost_leaf(t)) == 0);
  }
}

TEST_CASE("wedge shifts left leaves by the right tree's edges") {
  for (std::size_t ea = 1; ea <= 4; ++ea) {
    for (std::size_t eb = 0; eb <= 3; ++eb) {
      for (const auto& a : enumerate_plane_trees(ea)) {
        for (const auto& b : enumerate_plane_trees(eb)) {
          const PlaneTree w = wedge(a, b);
          CHECK(edge_count(w) == ea + eb);
          for (const auto& v : leaves(a)) CHECK(right_weight(w, v) == right_weight(a, v) + eb);
        }
      }
    }
  }
}

TEST_CASE("wedge") {
  const PlaneTree parts1[] = {PlaneTree{}, PlaneTree{}};
  CHECK(wedge(parts1).is_point());
  CHECK(wedge(parse_tree("(.)"), parse_tree("(.)")) == star(2));
  CHECK(serialize(wedge(star(2), star(2))) == "(....)");
  CHECK(wedge(std::span<const PlaneTree>(parts1, 1)).is_point());
  const PlaneTree single[] = {parse_tree("(.(..))")};
  CHECK(wedge(single) == single[0]);
  CHECK_THROWS_AS(wedge(std::span<const PlaneTree>()), EmptyInput);
}

TEST_CASE("star and path") {
  CHECK(star(0).is_point());
  CHECK(star(2) == parse_tree("(..)"));
  CHECK(serialize(star(3)) == "(...)");
  CHECK(serialize(path(3)) == "(((.)))");
}

TEST_CASE("side_edge_counts") {
  auto c = side_edge_counts(parse_tree("(.)"), addr({0}));
  CHECK(c.root_side == 0);
  CHECK(c.far_side == 0);
  c = side_edge_counts(parse_tree("((.))"), addr({0}));
  CHECK(c.root_side == 0);
  CHECK(c.far_side == 1);
  c = side_edge_counts(star(2), addr({1}));
  CHECK(c.root_side == 1);
  CHECK(c.far_side == 0);
  CHECK_THROWS_AS(side_edge_counts(star(2), addr({})), RootHasNoEdge);

  for (std::size_t e = 1; e <= 6; ++e) {
    for (const auto& t : enumerate_plane_trees(e)) {
      for (const auto& v : vertices(t)) {
        if (v.is_root()) continue;
        const auto s = side_edge_counts(t, v);
        CHECK(s.root_side + s.far_side + 1 == e);
      }
    }
  }
}

TEST_CASE("reroot_across_edge") {
  CHECK(reroot_across_edge(parse_tree("(.)"), addr({0})) == parse_tree("(.)"));
  CHECK(serialize(reroot_across_edge(parse_tree("((.))"), addr({0}))) == "(..)");
  // former parent is appended as the last child
  CHECK(serialize(reroot_across_edge(parse_tree("(.(..))"), addr({1}))) == "(..(.))");
  CHECK(serialize(reroot(parse_tree("((.).)"), addr({0, 0}))) == "(((.)))");
  CHECK_THROWS_AS(reroot_across_edge(star(2), addr({})), RootHasNoEdge);
  CHECK_THROWS_AS(reroot(star(2), addr({5})), InvalidAddress);
}

TEST_CASE("rerooting preserves size and returns to the same abstract tree") {
  for (std::size_t e = 1; e <= 6; ++e) {
    for (const auto& t : enumerate_plane_trees(e)) {
      for (const auto& v : vertices(t)) {
        const PlaneTree r = reroot(t, v);
        CHECK(edge_count(r) == e);
        // back across the same edge: the old root sits at the last child slot
        if (v.path.size() == 1) {
          const PlaneTree back = reroot(r, addr({r.children.size() - 1}));
          CHECK(edge_count(back) == e);
          CHECK(back.children.size() == t.children.size());
        }
      }
    }
  }
}

TEST_CASE("enumerate_plane_trees") {
  CHECK(enumerate_plane_trees(0).size() == 1);
  CHECK(enumerate_plane_trees(0)[0].is_point());
  const auto two = enumerate_plane_trees(2);
  REQUIRE(two.size() == 2);
  CHECK(serialize(two[0]) == "(..)");
  CHECK(serialize(two[1]) == "((.))");
  CHECK(enumerate_plane_trees(4).size() == 14);
  CHECK_THROWS_AS(enumerate_plane_trees(11), BoundExceeded);
  CHECK(enumerate_plane_trees(11, 11).size() == 58786);
}

TEST_CASE("plane tree counts are Catalan and distinct") {
  const auto catalan = catalan_by_convolution(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto trees = enumerate_plane_trees(n);
    CHECK(trees.size() == catalan[n]);
    std::set<std::string> keys;
    for (const auto& t : trees) {
      CHECK(edge_count(t) == n);
      keys.insert(serialize(t));
    }
    CHECK(keys.size() == trees.size());
  }
}

TEST_CASE("permute_children") {
  CHECK(permute_children(PlaneTree{}, 3).is_point());
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(permute_children(star(2), seed) == star(2));

  const PlaneTree t = parse_tree("(.(..))");
  bool transposed = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PlaneTree p = permute_children(t, seed);
    CHECK(permute_children(t, seed) == p);
    CHECK((serialize(p) == "(.(..))" || serialize(p) == "((..).)"));
    transposed = transposed || serialize(p) == "((..).)";
  }
  CHECK(transposed);
}

TEST_CASE("random_plane_tree has the requested size and covers all shapes") {
  std::mt19937_64 rng(5);
  std::set<std::string> seen;
  for (int i = 0; i < 2000; ++i) {
    const PlaneTree t = random_plane_tree(4, rng);
    CHECK(edge_count(t) == 4);
    seen.insert(serialize(t));
  }
  CHECK(seen.size() == 14);
  CHECK(edge_count(random_plane_tree(16, rng)) == 16);
  CHECK(random_plane_tree(0, rng).is_point());
}

TEST_CASE("vertex addresses") {
  CHECK(to_string(addr({})) == "");
  CHECK(to_string(addr({1, 0})) == "1.0");
  CHECK(parse_addr("1.0") == addr({1, 0}));
  CHECK(parse_addr("") == addr({}));
  CHECK(parse_addr("ε") == addr({}));
  CHECK_THROWS_AS(parse_addr("1..0"), InvalidAddress);
  CHECK_THROWS_AS(parse_addr("a"), InvalidAddress);
}

TEST_CASE("parse_delayed") {
  auto d = parse_delayed("(1 2)");
  CHECK(d.tree == star(2));
  CHECK(d.delays.at(addr({0})) == 1);
  CHECK(d.delays.at(addr({1})) == 2);

  d = parse_delayed("(. .)");
  CHECK(d.delays.at(addr({0})) == 1);
  CHECK(d.delays.at(addr({1})) == 1);

  d = parse_delayed("(3 (1 1) 2)");
  CHECK(d.tree == parse_tree("(.(..).)"));
  CHECK(d.delays.size() == 4);
  CHECK(d.delays.at(addr({0})) == 3);
  CHECK(d.delays.at(addr({1, 0})) == 1);
  CHECK(d.delays.at(addr({1, 1})) == 1);
  CHECK(d.delays.at(addr({2})) == 2);
  CHECK(serialize(d) == "(3 (1 1) 2)");

  // "(12)" is one leaf with delay 12
  d = parse_delayed("(12)");
  CHECK(d.delays.at(addr({0})) == 12);
  CHECK(parse_delayed("(1(2 3))").delays.size() == 3);

  CHECK_THROWS_AS(parse_delayed("(1 0)"), ZeroDelay);
  CHECK_THROWS_AS(parse_delayed("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_delayed("()"), ParseError);
  CHECK(parse_delayed(".").tree.is_point());
}

TEST_CASE("delayed serialization round-trips") {
  for (const char* s : {"(1 2)", "(3 (1 1) 2)", "((2 1) 1)", "(1 (1 2))", "(((4)))"}) {
    CHECK(serialize(parse_delayed(s)) == s);
  }
  CHECK(serialize(with_unit_delays(parse_tree("(.(..))"))) == "(1 (1 1))");
}
