#include "qtree/invariant.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "qtree/errors.hpp"

namespace qtree {

namespace {

// Thread-safe string-keyed cache. Values are computed outside the lock; a
// racing insert of the same key stores an identical value.
class PolyMemo {
 public:
  bool find(const std::string& key, QPoly& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(std::string key, const QPoly& value) {
    std::unique_lock lock(mu_);
    map_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, QPoly> map_;
};

PolyMemo& plain_memo() {
  static PolyMemo memo;
  return memo;
}

PolyMemo& delayed_memo() {
  static PolyMemo memo;
  return memo;
}

QPoly q_poly_state_at(const PlaneTree& t) {
  std::vector<std::size_t> parts;
  parts.reserve(t.children.size());
  QPoly product{1};
  for (const auto& c : t.children) {
    parts.push_back(edge_count(c) + 1);
    product *= q_poly_state_at(c);
  }
  return q_multinomial(parts) * product;
}

// Address of a surviving vertex u after the leaf `removed` is deleted.
VertexAddr shift_after_removal(VertexAddr u, const VertexAddr& removed) {
  const std::size_t depth = removed.path.size() - 1;
  if (u.path.size() <= depth) return u;
  for (std::size_t i = 0; i < depth; ++i) {
    if (u.path[i] != removed.path[i]) return u;
  }
  if (u.path[depth] > removed.path[depth]) --u.path[depth];
  return u;
}

}  // namespace

QPoly q_poly(const PlaneTree& t) {
  if (t.is_point()) return QPoly{1};
  std::string key = serialize(t);
  QPoly result;
  if (plain_memo().find(key, result)) return result;
  for (const auto& v : leaves(t)) result += q_poly(remove_leaf(t, v)).shifted(right_weight(t, v));
  plain_memo().insert(std::move(key), result);
  return result;
}

QPoly q_poly_state(const PlaneTree& t) { return q_poly_state_at(t); }

QPoly boltzmann_weight(const PlaneTree& t, const VertexAddr& v) {
  const PlaneTree& sub = subtree_at(t, v);
  std::vector<std::size_t> parts;
  parts.reserve(sub.children.size());
  for (const auto& c : sub.children) parts.push_back(edge_count(c) + 1);
  return q_multinomial(parts);
}

RerootCheck check_reroot(const PlaneTree& t, const VertexAddr& e) {
  const auto [e1, e2] = side_edge_counts(t, e);
  VertexAddr parent = e;
  parent.path.pop_back();
  RerootCheck r;
  r.lhs = q_poly(reroot(t, parent)) * q_integer(e2 + 1);
  r.rhs = q_poly(reroot_across_edge(t, e)) * q_integer(e1 + 1);
  r.holds = r.lhs == r.rhs;
  return r;
}

QPoly q_poly_delayed(const DelayedTree& d) {
  if (d.tree.is_point()) return QPoly{1};
  std::string key = serialize(d);
  QPoly result;
  if (delayed_memo().find(key, result)) return result;

  for (const auto& [v, delay] : d.delays) {
    if (delay != 1) continue;
    DelayedTree next{remove_leaf(d.tree, v), {}};
    for (const auto& [u, f] : d.delays) {
      if (u == v) continue;
      next.delays.emplace(shift_after_removal(u, v), f > 1 ? f - 1 : 1);
    }
    VertexAddr parent{{v.path.begin(), v.path.end() - 1}};
    if (!parent.is_root() && subtree_at(next.tree, parent).children.empty()) next.delays.emplace(parent, 1);
    result += q_poly_delayed(next).shifted(right_weight(d.tree, v));
  }
  delayed_memo().insert(std::move(key), result);
  return result;
}

void check_admissible(const BlockSpec& spec) {
  const auto& b = spec.blocks;
  if (b.empty()) throw InadmissibleDelays("block spec is empty");
  if (b.back().second != 1) throw InadmissibleDelays("the rightmost block must have delay 1");
  // Walk right to left: s_{i-1} <= s_i <= E_{i-1} + ... + E_1 + 1.
  std::size_t edges_right = edge_count(b.back().first);
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    const std::size_t s = b[i].second;
    const std::size_t prev = b[i + 1].second;
    if (s < prev || s > edges_right + 1) {
      throw InadmissibleDelays("block " + std::to_string(i) + " delay " + std::to_string(s) + " outside [" +
                               std::to_string(prev) + ", " + std::to_string(edges_right + 1) + "]");
    }
    edges_right += edge_count(b[i].first);
  }
}

DelayedTree assemble(const BlockSpec& spec) {
  if (spec.blocks.empty()) throw EmptyInput("block spec is empty");
  DelayedTree d;
  for (const auto& [tree, delay] : spec.blocks) {
    const std::size_t offset = d.tree.children.size();
    for (auto v : leaves(tree)) {
      v.path.front() += offset;
      d.delays.emplace(std::move(v), delay);
    }
    d.tree.children.insert(d.tree.children.end(), tree.children.begin(), tree.children.end());
  }
  return d;
}

QPoly q_poly_block(const BlockSpec& spec) {
  check_admissible(spec);
  const auto& b = spec.blocks;
  QPoly result = q_poly(b.back().first);
  std::size_t edges_right = edge_count(b.back().first);
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    const std::size_t e = edge_count(b[i].first);
    const long lower = static_cast<long>(edges_right) - static_cast<long>(b[i].second) + 1;
    result *= q_binomial(static_cast<long>(e) + lower, static_cast<long>(e));
    result *= q_poly(b[i].first);
    edges_right += e;
  }
  return result;
}

std::vector<DelayedTree> search_delayed(const QPoly& target, std::size_t max_edges, std::size_t bound) {
  if (max_edges > bound) throw BoundExceeded(max_edges, bound);
  std::vector<DelayedTree> found;
  for (std::size_t e = 0; e <= max_edges; ++e) {
    for (const auto& tree : enumerate_plane_trees(e, bound)) {
      const auto leaf_addrs = leaves(tree);
      std::vector<std::size_t> labels(leaf_addrs.size(), 1);
      for (;;) {
        DelayedTree d{tree, {}};
        for (std::size_t i = 0; i < labels.size(); ++i) d.delays.emplace(leaf_addrs[i], labels[i]);
        if (q_poly_delayed(d) == target) found.push_back(std::move(d));
        // Odometer over delays in 1..e, last leaf fastest.
        std::size_t i = labels.size();
        while (i > 0 && labels[i - 1] == e) labels[--i] = 1;
        if (i == 0) break;
        ++labels[i - 1];
      }
    }
  }
  return found;
}

}  // namespace qtree
