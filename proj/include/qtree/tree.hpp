#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtree {

/**
 * Plane rooted tree. Every node owns an ordered list of child subtrees; the
 * order is the plane embedding, with larger indices further to the right.
 * A node without children is a leaf unless it is the root.
 */
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_point() const { return children.empty(); }
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Path of 0-based child indices from the root; empty means the root.
struct VertexAddr {
  std::vector<std::size_t> path;

  bool is_root() const { return path.empty(); }
  friend bool operator==(const VertexAddr&, const VertexAddr&) = default;
  friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
};

/// Dot-separated indices, "" for the root.
std::string to_string(const VertexAddr& v);
/// Accepts "", "ε" or "e" for the root.
VertexAddr parse_addr(std::string_view text);

/// Grammar  Tree := "." | "(" Tree+ ")"  with optional whitespace.
PlaneTree parse_tree(std::string_view text);
/// Canonical whitespace-free form; also the memoization key.
std::string serialize(const PlaneTree& t);

std::size_t edge_count(const PlaneTree& t);
std::size_t leaf_count(const PlaneTree& t);
/// Non-root childless vertices in depth-first, left-to-right order.
std::vector<VertexAddr> leaves(const PlaneTree& t);

/// Throws InvalidAddress if the path leaves the tree.
const PlaneTree& subtree_at(const PlaneTree& t, const VertexAddr& v);

/// Deletes a leaf and its edge. A parent left childless becomes a leaf.
PlaneTree remove_leaf(const PlaneTree& t, const VertexAddr& v);

/// Number of edges strictly right of the root-to-v path, counting the edges
/// that attach hanging subtrees to the path.
std::size_t right_weight(const PlaneTree& t, const VertexAddr& v);

/// Identifies the roots; children are concatenated left to right.
PlaneTree wedge(std::span<const PlaneTree> parts);
PlaneTree wedge(const PlaneTree& left, const PlaneTree& right);

PlaneTree star(std::size_t n);
/// Path with n edges rooted at one end.
PlaneTree path(std::size_t n);

struct SideEdgeCounts {
  std::size_t root_side;  // E_1
  std::size_t far_side;   // E_2
};
/// Edge counts on either side of the edge from v_2 = e to its parent.
SideEdgeCounts side_edge_counts(const PlaneTree& t, const VertexAddr& e);

/// Re-roots at e. Each former parent becomes the last child of its former child.
PlaneTree reroot(const PlaneTree& t, const VertexAddr& e);
/// reroot() restricted to non-root targets; throws RootHasNoEdge on the root.
PlaneTree reroot_across_edge(const PlaneTree& t, const VertexAddr& e);

inline constexpr std::size_t kDefaultPlaneBound = 10;

/// All plane trees with exactly `edges` edges, each once; Catalan many.
std::vector<PlaneTree> enumerate_plane_trees(std::size_t edges, std::size_t bound = kDefaultPlaneBound);

/// Seeded permutation of the children of every internal vertex.
PlaneTree permute_children(const PlaneTree& t, std::uint64_t seed);

/// Uniformly random plane tree with the given number of edges.
PlaneTree random_plane_tree(std::size_t edges, std::mt19937_64& rng);

/// Every vertex address in preorder, root first.
std::vector<VertexAddr> vertices(const PlaneTree& t);

/**
 * Plane tree whose leaves carry positive delays. The delay map is keyed by
 * leaf address and covers exactly the leaves of `tree`.
 */
struct DelayedTree {
  PlaneTree tree;
  std::map<VertexAddr, std::size_t> delays;

  friend bool operator==(const DelayedTree&, const DelayedTree&) = default;
};

/// Same grammar with integer leaves; "." means delay 1.
DelayedTree parse_delayed(std::string_view text);
/// Canonical form, e.g. "(3 (1 1) 2)".
std::string serialize(const DelayedTree& d);
/// All leaves get delay 1.
DelayedTree with_unit_delays(const PlaneTree& t);

}  // namespace qtree
