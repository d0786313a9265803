#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qtree/qpoly.hpp"
#include "qtree/tree.hpp"

namespace qtree {

/**
 * Topological rooted tree: a plane tree without unary vertices. The point
 * tree counts its root as its single leaf, so a TopTree with n+1 leaves
 * lives in degree n.
 */
class TopTree {
 public:
  /// The point tree.
  TopTree() = default;
  /// Smooths every unary vertex of `t`.
  explicit TopTree(const PlaneTree& t);

  const PlaneTree& tree() const { return tree_; }
  std::size_t leaf_count() const;
  std::size_t degree() const { return leaf_count() - 1; }
  bool is_point() const { return tree_.is_point(); }

  friend bool operator==(const TopTree&, const TopTree&) = default;

 private:
  PlaneTree tree_;
};

PlaneTree normalize_topological(const PlaneTree& t);
bool is_topological(const PlaneTree& t);
std::string serialize(const TopTree& t);

/// d_i: drop leaf i and smooth.
TopTree face(const TopTree& t, std::size_t i);
/// s_i: plant a cherry on leaf i.
TopTree degeneracy(const TopTree& t, std::size_t i);

inline constexpr std::size_t kDefaultTopBound = 7;

std::vector<TopTree> enumerate_top_trees(std::size_t leaf_count, std::size_t bound = kDefaultTopBound);

struct RelationViolation {
  std::string tree;
  std::string relation;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct IdentityReport {
  /// Checked instances per relation family: "1", "2'", "3", "4".
  std::map<std::string, std::size_t> checked;
  std::vector<RelationViolation> violations;
  /// First instance where s_i s_i and s_{i+1} s_i disagree, if any.
  bool has_witness = false;
  std::string witness_tree;
  std::size_t witness_index = 0;
  std::string witness_lhs;  // s_i s_i T
  std::string witness_rhs;  // s_{i+1} s_i T

  bool ok() const { return violations.empty() && has_witness; }
};

IdentityReport check_identities(std::size_t max_leaves, std::size_t bound = kDefaultTopBound);

/// Finitely supported Z[q] combination of topological trees, keyed by serialization.
class QChain {
 public:
  QChain() = default;
  static QChain basis(const TopTree& t);

  void add(const TopTree& t, const QPoly& coeff);
  void add(const std::string& key, const QPoly& coeff);
  const std::map<std::string, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coefficient(const std::string& key) const;

  friend bool operator==(const QChain&, const QChain&) = default;

 private:
  std::map<std::string, QPoly> terms_;
};

/// Same as QChain with integer coefficients (q specialised).
class IntChain {
 public:
  IntChain() = default;
  static IntChain basis(const TopTree& t);

  void add(const std::string& key, const Integer& coeff);
  const std::map<std::string, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const IntChain&, const IntChain&) = default;

 private:
  std::map<std::string, Integer> terms_;
};

/// sum_i q^i d_i, extended linearly.
QChain q_boundary(const QChain& c);
/// sum_i x^i d_i with q = x; x = -1 is the presimplicial boundary.
IntChain q_boundary_at(const IntChain& c, const Integer& x);
/// Evaluates the coefficients at x, then applies q_boundary_at.
IntChain q_boundary_at(const QChain& c, const Integer& x);

/// Rewrites 1*T by x -> boundary(x) until only the point remains and returns
/// the point's coefficient.
QPoly reduce_to_point(const TopTree& t);

}  // namespace qtree
