#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qtree/qpoly.hpp"
#include "qtree/tree.hpp"

namespace qtree {

/// Q(T) from the leaf-removal recursion, memoized on the canonical string.
QPoly q_poly(const PlaneTree& t);

/// Q(T) as the product of vertex weights.
QPoly q_poly_state(const PlaneTree& t);

/// q-multinomial of the edge counts (connecting edge included) of the
/// subtrees hanging from v. Leaves have weight 1.
QPoly boltzmann_weight(const PlaneTree& t, const VertexAddr& v);

struct RerootCheck {
  QPoly lhs;  // Q(T, v_1) * [E_2 + 1]_q
  QPoly rhs;  // Q(T, v_2) * [E_1 + 1]_q
  bool holds = false;
};

/// Compares Q rooted at both endpoints of the edge above e, cross-multiplied.
RerootCheck check_reroot(const PlaneTree& t, const VertexAddr& e);

/// Q(T, f). Only leaves with delay 1 may be removed; survivors count down
/// (floor 1) and freshly exposed leaves start at 1. Zero when stuck.
QPoly q_poly_delayed(const DelayedTree& d);

/**
 * Wedge of blocks listed left to right; every leaf of a block carries the
 * block's delay. The last block is T_1 and must have delay 1.
 */
struct BlockSpec {
  std::vector<std::pair<PlaneTree, std::size_t>> blocks;
};

/// Throws InadmissibleDelays when the delay chain does not hold.
void check_admissible(const BlockSpec& spec);
DelayedTree assemble(const BlockSpec& spec);
/// Closed product formula for admissible block specs.
QPoly q_poly_block(const BlockSpec& spec);

inline constexpr std::size_t kDefaultSearchBound = 6;

/// Delayed trees with at most max_edges edges and delays in 1..edges whose
/// polynomial equals target. Ordered by edge count, tree, then delays.
std::vector<DelayedTree> search_delayed(const QPoly& target, std::size_t max_edges,
                                        std::size_t bound = kDefaultSearchBound);

}  // namespace qtree
