#include "qtree/presimplicial.hpp"

#include <utility>

#include "qtree/errors.hpp"

namespace qtree {

PlaneTree normalize_topological(const PlaneTree& t) {
  if (t.children.size() == 1) return normalize_topological(t.children.front());
  PlaneTree out;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(normalize_topological(c));
  return out;
}

bool is_topological(const PlaneTree& t) {
  if (t.children.size() == 1) return false;
  for (const auto& c : t.children) {
    if (!is_topological(c)) return false;
  }
  return true;
}

TopTree::TopTree(const PlaneTree& t) : tree_(normalize_topological(t)) {}

std::size_t TopTree::leaf_count() const { return tree_.is_point() ? 1 : qtree::leaf_count(tree_); }

std::string serialize(const TopTree& t) { return serialize(t.tree()); }

namespace {

VertexAddr leaf_addr(const TopTree& t, std::size_t i) {
  auto ls = leaves(t.tree());
  if (i >= ls.size()) throw IndexOutOfRange(i, ls.size());
  return ls[i];
}

}  // namespace

TopTree face(const TopTree& t, std::size_t i) {
  if (t.is_point()) throw NoFacesOnPoint();
  return TopTree(remove_leaf(t.tree(), leaf_addr(t, i)));
}

TopTree degeneracy(const TopTree& t, std::size_t i) {
  if (t.is_point()) {
    if (i != 0) throw IndexOutOfRange(i, 1);
    return TopTree(star(2));
  }
  const VertexAddr v = leaf_addr(t, i);
  PlaneTree planted = t.tree();
  PlaneTree* node = &planted;
  for (std::size_t idx : v.path) node = &node->children[idx];
  *node = star(2);
  return TopTree(planted);
}

std::vector<TopTree> enumerate_top_trees(std::size_t leaf_count, std::size_t bound) {
  if (leaf_count > bound) throw BoundExceeded(leaf_count, bound);
  if (leaf_count == 0) return {};
  // trees[L]: topological trees with L leaves.
  // forests[L]: nonempty child sequences whose leaves total L.
  std::vector<std::vector<PlaneTree>> trees(leaf_count + 1);
  std::vector<std::vector<std::vector<PlaneTree>>> forests(leaf_count + 1);
  forests[0].emplace_back();
  trees[1].emplace_back();
  forests[1].push_back({PlaneTree{}});
  for (std::size_t total = 2; total <= leaf_count; ++total) {
    // Root with at least two children: first child has fewer than `total` leaves.
    for (std::size_t a = 1; a < total; ++a) {
      for (const auto& first : trees[a]) {
        for (const auto& rest : forests[total - a]) {
          PlaneTree t;
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.begin(), rest.end());
          trees[total].push_back(std::move(t));
        }
      }
    }
    for (std::size_t a = 1; a <= total; ++a) {
      for (const auto& first : trees[a]) {
        for (const auto& rest : forests[total - a]) {
          std::vector<PlaneTree> f;
          f.reserve(rest.size() + 1);
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          forests[total].push_back(std::move(f));
        }
      }
    }
  }
  std::vector<TopTree> out;
  out.reserve(trees[leaf_count].size());
  for (const auto& t : trees[leaf_count]) out.emplace_back(t);
  return out;
}

IdentityReport check_identities(std::size_t max_leaves, std::size_t bound) {
  if (max_leaves > bound) throw BoundExceeded(max_leaves, bound);
  IdentityReport report;
  for (const char* family : {"1", "2'", "3", "4"}) report.checked[family] = 0;

  auto expect = [&](bool ok, const TopTree& t, const char* rel, std::size_t i, std::size_t j) {
    ++report.checked[rel];
    if (!ok) report.violations.push_back({serialize(t), rel, i, j});
  };
  auto topological = [&](const TopTree& out, const TopTree& t, std::size_t i) {
    if (!is_topological(out.tree())) report.violations.push_back({serialize(t), "topological", i, i});
    return out;
  };
  auto d = [&](const TopTree& t, std::size_t i) { return topological(face(t, i), t, i); };
  auto s = [&](const TopTree& t, std::size_t i) { return topological(degeneracy(t, i), t, i); };

  for (std::size_t leaves_n = 1; leaves_n <= max_leaves; ++leaves_n) {
    for (const auto& t : enumerate_top_trees(leaves_n, bound)) {
      const std::size_t n = t.degree();
      // (1) d_i d_j = d_{j-1} d_i, i < j
      if (n >= 2) {
        for (std::size_t j = 1; j <= n; ++j) {
          for (std::size_t i = 0; i < j; ++i) expect(d(d(t, j), i) == d(d(t, i), j - 1), t, "1", i, j);
        }
      }
      // (2') s_i s_j = s_{j+1} s_i, i < j
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) expect(s(s(t, j), i) == s(s(t, i), j + 1), t, "2'", i, j);
      }
      // (3) d_i s_j = s_{j-1} d_i for i < j, = s_j d_{i-1} for i > j+1
      for (std::size_t j = 0; j <= n; ++j) {
        const TopTree sj = s(t, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          if (i < j) {
            expect(d(sj, i) == s(d(t, i), j - 1), t, "3", i, j);
          } else if (i > j + 1) {
            expect(d(sj, i) == s(d(t, i - 1), j), t, "3", i, j);
          }
        }
      }
      // (4) d_i s_i = d_{i+1} s_i = id
      for (std::size_t i = 0; i <= n; ++i) {
        const TopTree si = s(t, i);
        expect(d(si, i) == t, t, "4", i, i);
        expect(d(si, i + 1) == t, t, "4", i + 1, i);
      }
      // s_i s_i = s_{i+1} s_i is expected to fail somewhere.
      for (std::size_t i = 0; i <= n && !report.has_witness; ++i) {
        const TopTree si = s(t, i);
        const TopTree lhs = s(si, i);
        const TopTree rhs = s(si, i + 1);
        if (lhs != rhs) {
          report.has_witness = true;
          report.witness_tree = serialize(t);
          report.witness_index = i;
          report.witness_lhs = serialize(lhs);
          report.witness_rhs = serialize(rhs);
        }
      }
    }
  }
  return report;
}

QChain QChain::basis(const TopTree& t) {
  QChain c;
  c.add(t, QPoly{1});
  return c;
}

void QChain::add(const TopTree& t, const QPoly& coeff) { add(serialize(t), coeff); }

void QChain::add(const std::string& key, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly QChain::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QPoly() : it->second;
}

IntChain IntChain::basis(const TopTree& t) {
  IntChain c;
  c.add(serialize(t), 1);
  return c;
}

void IntChain::add(const std::string& key, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QChain q_boundary(const QChain& c) {
  QChain out;
  for (const auto& [key, coeff] : c.terms()) {
    const TopTree t(parse_tree(key));
    if (t.is_point()) continue;
    for (std::size_t i = 0; i < t.leaf_count(); ++i) out.add(face(t, i), coeff.shifted(i));
  }
  return out;
}

IntChain q_boundary_at(const IntChain& c, const Integer& x) {
  IntChain out;
  for (const auto& [key, coeff] : c.terms()) {
    const TopTree t(parse_tree(key));
    if (t.is_point()) continue;
    Integer power = 1;
    for (std::size_t i = 0; i < t.leaf_count(); ++i) {
      out.add(serialize(face(t, i)), coeff * power);
      power *= x;
    }
  }
  return out;
}

IntChain q_boundary_at(const QChain& c, const Integer& x) {
  IntChain evaluated;
  for (const auto& [key, coeff] : c.terms()) evaluated.add(key, eval(coeff, x));
  return q_boundary_at(evaluated, x);
}

QPoly reduce_to_point(const TopTree& t) {
  QChain chain = QChain::basis(t);
  const std::string point = serialize(TopTree());
  for (;;) {
    QChain next;
    bool rewrote = false;
    for (const auto& [key, coeff] : chain.terms()) {
      if (key == point) {
        next.add(key, coeff);
        continue;
      }
      rewrote = true;
      QChain single;
      single.add(key, coeff);
      const QChain faces = q_boundary(single);
      for (const auto& [k2, c2] : faces.terms()) next.add(k2, c2);
    }
    chain = std::move(next);
    if (!rewrote) break;
  }
  return chain.coefficient(point);
}

}  // namespace qtree
