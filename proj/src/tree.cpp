#include "qtree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "qtree/errors.hpp"

namespace qtree {

std::string to_string(const VertexAddr& v) {
  std::string s;
  for (std::size_t i = 0; i < v.path.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v.path[i]);
  }
  return s;
}

VertexAddr parse_addr(std::string_view text) {
  VertexAddr v;
  if (text.empty() || text == "e" || text == "ε") return v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('.', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, idx);
    if (ec != std::errc() || ptr != text.data() + end || end == pos) throw InvalidAddress(std::string(text));
    v.path.push_back(idx);
    pos = end + 1;
  }
  return v;
}

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, bool delayed) : text_(text), delayed_(delayed) {}

  PlaneTree parse_root() {
    skip_ws();
    PlaneTree t;
    VertexAddr here;
    if (peek() == '(') {
      t = parse_node(here);
    } else if (peek() == '.') {
      ++pos_;
    } else if (delayed_ && is_digit()) {
      // A bare integer is the one-point tree; the root is never a leaf.
      read_delay();
    } else {
      fail("expected '(' or '.'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

  std::map<VertexAddr, std::size_t>& delays() { return delays_; }

 private:
  // Parses "(" Tree+ ")" at pos_, recording leaf delays under `here`.
  PlaneTree parse_node(VertexAddr& here) {
    ++pos_;  // '('
    PlaneTree node;
    bool last_was_int = false;
    for (;;) {
      const bool had_ws = skip_ws();
      if (pos_ >= text_.size()) fail("unbalanced parentheses");
      const char c = text_[pos_];
      if (c == ')') {
        if (node.children.empty()) fail("empty '()'");
        ++pos_;
        return node;
      }
      here.path.push_back(node.children.size());
      if (c == '(') {
        node.children.push_back(parse_node(here));
        last_was_int = false;
      } else if (c == '.') {
        ++pos_;
        node.children.emplace_back();
        if (delayed_) delays_[here] = 1;
        last_was_int = false;
      } else if (delayed_ && is_digit()) {
        if (last_was_int && !had_ws) fail("adjacent integer leaves need whitespace");
        delays_[here] = read_delay();
        node.children.emplace_back();
        last_was_int = true;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      here.path.pop_back();
    }
  }

  std::size_t read_delay() {
    const std::size_t start = pos_;
    while (is_digit()) ++pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("delay out of range", start);
    if (value == 0) throw ZeroDelay(start);
    return value;
  }

  bool skip_ws() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ != start;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool is_digit() const { return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(at, msg); }

  std::string_view text_;
  bool delayed_;
  std::size_t pos_ = 0;
  std::map<VertexAddr, std::size_t> delays_;
};

void serialize_into(const PlaneTree& t, std::string& out) {
  if (t.children.empty()) {
    out += '.';
    return;
  }
  out += '(';
  for (const auto& c : t.children) serialize_into(c, out);
  out += ')';
}

void collect_leaves(const PlaneTree& t, VertexAddr& here, std::vector<VertexAddr>& out) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    here.path.push_back(i);
    if (t.children[i].children.empty()) {
      out.push_back(here);
    } else {
      collect_leaves(t.children[i], here, out);
    }
    here.path.pop_back();
  }
}

void collect_vertices(const PlaneTree& t, VertexAddr& here, std::vector<VertexAddr>& out) {
  out.push_back(here);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    here.path.push_back(i);
    collect_vertices(t.children[i], here, out);
    here.path.pop_back();
  }
}

PlaneTree& mutable_subtree(PlaneTree& t, const VertexAddr& v, std::size_t depth) {
  PlaneTree* node = &t;
  for (std::size_t i = 0; i < depth; ++i) node = &node->children[v.path[i]];
  return *node;
}

void check_address(const PlaneTree& t, const VertexAddr& v) {
  const PlaneTree* node = &t;
  for (std::size_t idx : v.path) {
    if (idx >= node->children.size()) throw InvalidAddress(to_string(v));
    node = &node->children[idx];
  }
}

void check_leaf(const PlaneTree& t, const VertexAddr& v) {
  check_address(t, v);
  if (v.is_root() || !subtree_at(t, v).children.empty()) throw NotALeaf(to_string(v));
}

void shuffle_children(PlaneTree& t, std::mt19937_64& rng) {
  auto& ch = t.children;
  for (std::size_t i = ch.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(ch[i - 1], ch[j]);
  }
  for (auto& c : ch) shuffle_children(c, rng);
}

}  // namespace

PlaneTree parse_tree(std::string_view text) { return TreeParser(text, false).parse_root(); }

std::string serialize(const PlaneTree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

std::size_t edge_count(const PlaneTree& t) {
  std::size_t n = 0;
  for (const auto& c : t.children) n += 1 + edge_count(c);
  return n;
}

std::size_t leaf_count(const PlaneTree& t) {
  if (t.children.empty()) return 0;
  std::size_t n = 0;
  for (const auto& c : t.children) n += c.children.empty() ? 1 : leaf_count(c);
  return n;
}

std::vector<VertexAddr> leaves(const PlaneTree& t) {
  std::vector<VertexAddr> out;
  VertexAddr here;
  collect_leaves(t, here, out);
  return out;
}

std::vector<VertexAddr> vertices(const PlaneTree& t) {
  std::vector<VertexAddr> out;
  VertexAddr here;
  collect_vertices(t, here, out);
  return out;
}

const PlaneTree& subtree_at(const PlaneTree& t, const VertexAddr& v) {
  const PlaneTree* node = &t;
  for (std::size_t idx : v.path) {
    if (idx >= node->children.size()) throw InvalidAddress(to_string(v));
    node = &node->children[idx];
  }
  return *node;
}

PlaneTree remove_leaf(const PlaneTree& t, const VertexAddr& v) {
  check_leaf(t, v);
  PlaneTree out = t;
  PlaneTree& parent = mutable_subtree(out, v, v.path.size() - 1);
  parent.children.erase(parent.children.begin() + static_cast<long>(v.path.back()));
  return out;
}

std::size_t right_weight(const PlaneTree& t, const VertexAddr& v) {
  check_leaf(t, v);
  std::size_t w = 0;
  const PlaneTree* node = &t;
  for (std::size_t idx : v.path) {
    for (std::size_t j = idx + 1; j < node->children.size(); ++j) w += edge_count(node->children[j]) + 1;
    node = &node->children[idx];
  }
  return w;
}

PlaneTree wedge(std::span<const PlaneTree> parts) {
  if (parts.empty()) throw EmptyInput("wedge of an empty sequence");
  PlaneTree out;
  for (const auto& p : parts) out.children.insert(out.children.end(), p.children.begin(), p.children.end());
  return out;
}

PlaneTree wedge(const PlaneTree& left, const PlaneTree& right) {
  const PlaneTree parts[] = {left, right};
  return wedge(parts);
}

PlaneTree star(std::size_t n) {
  PlaneTree t;
  t.children.resize(n);
  return t;
}

PlaneTree path(std::size_t n) {
  PlaneTree t;
  for (std::size_t i = 0; i < n; ++i) {
    PlaneTree up;
    up.children.push_back(std::move(t));
    t = std::move(up);
  }
  return t;
}

SideEdgeCounts side_edge_counts(const PlaneTree& t, const VertexAddr& e) {
  if (e.is_root()) throw RootHasNoEdge();
  const std::size_t far = edge_count(subtree_at(t, e));
  return {edge_count(t) - 1 - far, far};
}

PlaneTree reroot(const PlaneTree& t, const VertexAddr& e) {
  check_address(t, e);
  PlaneTree current = t;
  for (std::size_t idx : e.path) {
    PlaneTree child = std::move(current.children[idx]);
    current.children.erase(current.children.begin() + static_cast<long>(idx));
    // Appending keeps the indices of the child's original children valid.
    child.children.push_back(std::move(current));
    current = std::move(child);
  }
  return current;
}

PlaneTree reroot_across_edge(const PlaneTree& t, const VertexAddr& e) {
  if (e.is_root()) throw RootHasNoEdge();
  return reroot(t, e);
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t edges, std::size_t bound) {
  if (edges > bound) throw BoundExceeded(edges, bound);
  // by_size[n]: trees with n edges. A tree is its first hanging subtree plus
  // the remaining root tree.
  std::vector<std::vector<PlaneTree>> by_size(edges + 1);
  by_size[0].emplace_back();
  for (std::size_t n = 1; n <= edges; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& first : by_size[i]) {
        for (const auto& rest : by_size[n - 1 - i]) {
          PlaneTree t;
          t.children.reserve(rest.children.size() + 1);
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
          by_size[n].push_back(std::move(t));
        }
      }
    }
  }
  return std::move(by_size[edges]);
}

PlaneTree permute_children(const PlaneTree& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlaneTree out = t;
  shuffle_children(out, rng);
  return out;
}

PlaneTree random_plane_tree(std::size_t edges, std::mt19937_64& rng) {
  // Cycle lemma: a shuffled word of n ups and n+1 downs has exactly one
  // rotation whose proper prefixes stay nonnegative.
  std::vector<int> steps(edges, 1);
  steps.resize(2 * edges + 1, -1);
  for (std::size_t i = steps.size(); i > 1; --i) std::swap(steps[i - 1], steps[rng() % i]);
  int sum = 0;
  int best = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      start = i + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<long>(start % steps.size()), steps.end());
  steps.pop_back();

  PlaneTree root;
  std::vector<PlaneTree*> stack{&root};
  for (int s : steps) {
    if (s > 0) {
      stack.back()->children.emplace_back();
      stack.push_back(&stack.back()->children.back());
    } else {
      stack.pop_back();
    }
  }
  return root;
}

DelayedTree parse_delayed(std::string_view text) {
  TreeParser parser(text, true);
  DelayedTree d;
  d.tree = parser.parse_root();
  d.delays = std::move(parser.delays());
  return d;
}

namespace {

void serialize_delayed(const PlaneTree& t, const std::map<VertexAddr, std::size_t>& delays, VertexAddr& here,
                       std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ' ';
    here.path.push_back(i);
    const auto& c = t.children[i];
    if (c.children.empty()) {
      auto it = delays.find(here);
      out += std::to_string(it == delays.end() ? 1 : it->second);
    } else {
      serialize_delayed(c, delays, here, out);
    }
    here.path.pop_back();
  }
  out += ')';
}

}  // namespace

std::string serialize(const DelayedTree& d) {
  if (d.tree.children.empty()) return ".";
  std::string out;
  VertexAddr here;
  serialize_delayed(d.tree, d.delays, here, out);
  return out;
}

DelayedTree with_unit_delays(const PlaneTree& t) {
  DelayedTree d{t, {}};
  for (auto& v : leaves(t)) d.delays.emplace(std::move(v), 1);
  return d;
}

}  // namespace qtree
