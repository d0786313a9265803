#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qtree/invariant.hpp"
#include "qtree/presimplicial.hpp"

namespace qtree {

/// Outcome of one verification family.
struct VerifySummary {
  std::string unit;  // what was counted: "pairs", "trees", "edges", "specs"
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Q(A v B) = binom(E_A+E_B, E_A)_q Q(A) Q(B) for all ordered pairs with
/// E_A + E_B <= max_edges.
VerifySummary verify_wedge(std::size_t max_edges);

/// Recursion against state product: every tree up to max_edges plus
/// `random_count` uniform random trees with `random_edges` edges.
VerifySummary verify_state(std::size_t max_edges, std::uint64_t seed, std::size_t random_count = 200,
                           std::size_t random_edges = 16);

/// Change-of-root identity on every edge of every tree up to max_edges.
VerifySummary verify_reroot(std::size_t max_edges);

/// Random admissible spec with 1..4 nonempty blocks and total edges <= max_edges.
BlockSpec random_block_spec(std::size_t max_edges, std::mt19937_64& rng);

/// Closed block formula against the delayed recursion on `samples` specs.
VerifySummary verify_block(std::size_t max_edges, std::uint64_t seed, std::size_t samples = 500);

}  // namespace qtree
