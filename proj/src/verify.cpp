#include "qtree/verify.hpp"

#include <algorithm>

namespace qtree {

namespace {

std::vector<std::vector<PlaneTree>> trees_up_to(std::size_t max_edges) {
  std::vector<std::vector<PlaneTree>> by_size;
  for (std::size_t e = 0; e <= max_edges; ++e) by_size.push_back(enumerate_plane_trees(e, std::max(e, kDefaultPlaneBound)));
  return by_size;
}

}  // namespace

VerifySummary verify_wedge(std::size_t max_edges) {
  VerifySummary s{"pairs", 0, {}};
  const auto by_size = trees_up_to(max_edges);
  for (std::size_t ea = 0; ea <= max_edges; ++ea) {
    for (std::size_t eb = 0; ea + eb <= max_edges; ++eb) {
      const QPoly binom = q_binomial(static_cast<long>(ea + eb), static_cast<long>(ea));
      for (const auto& a : by_size[ea]) {
        const QPoly qa = binom * q_poly(a);
        for (const auto& b : by_size[eb]) {
          ++s.checked;
          if (q_poly(wedge(a, b)) != qa * q_poly(b)) s.violations.push_back(serialize(a) + " v " + serialize(b));
        }
      }
    }
  }
  return s;
}

VerifySummary verify_state(std::size_t max_edges, std::uint64_t seed, std::size_t random_count,
                           std::size_t random_edges) {
  VerifySummary s{"trees", 0, {}};
  auto check = [&](const PlaneTree& t) {
    ++s.checked;
    if (q_poly(t) != q_poly_state(t)) s.violations.push_back(serialize(t));
  };
  for (std::size_t e = 0; e <= max_edges; ++e) {
    for (const auto& t : enumerate_plane_trees(e, std::max(e, kDefaultPlaneBound))) check(t);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) check(random_plane_tree(random_edges, rng));
  return s;
}

VerifySummary verify_reroot(std::size_t max_edges) {
  VerifySummary s{"edges", 0, {}};
  for (std::size_t e = 1; e <= max_edges; ++e) {
    for (const auto& t : enumerate_plane_trees(e, std::max(e, kDefaultPlaneBound))) {
      for (const auto& v : vertices(t)) {
        if (v.is_root()) continue;
        ++s.checked;
        if (!check_reroot(t, v).holds) s.violations.push_back(serialize(t) + " @" + to_string(v));
      }
    }
  }
  return s;
}

BlockSpec random_block_spec(std::size_t max_edges, std::mt19937_64& rng) {
  const std::size_t max_blocks = std::min<std::size_t>(4, max_edges);
  const std::size_t k = 1 + rng() % max_blocks;
  const std::size_t total = k + rng() % (max_edges - k + 1);

  // Split `total` into k positive parts; sizes[0] is E_1 (rightmost).
  std::vector<std::size_t> sizes(k, 1);
  for (std::size_t extra = total - k; extra > 0; --extra) ++sizes[rng() % k];

  std::vector<std::size_t> delays(k, 1);
  std::size_t edges_right = sizes[0];
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t lo = delays[i - 1];
    const std::size_t hi = edges_right + 1;
    delays[i] = lo + rng() % (hi - lo + 1);
    edges_right += sizes[i];
  }

  BlockSpec spec;
  for (std::size_t i = k; i-- > 0;) spec.blocks.emplace_back(random_plane_tree(sizes[i], rng), delays[i]);
  return spec;
}

VerifySummary verify_block(std::size_t max_edges, std::uint64_t seed, std::size_t samples) {
  VerifySummary s{"specs", 0, {}};
  if (max_edges == 0) return s;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    const BlockSpec spec = random_block_spec(max_edges, rng);
    ++s.checked;
    const DelayedTree assembled = assemble(spec);
    if (q_poly_block(spec) != q_poly_delayed(assembled)) s.violations.push_back(serialize(assembled));
  }
  return s;
}

}  // namespace qtree
