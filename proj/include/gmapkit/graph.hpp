#pragma once

// Undirected arc-labeled multigraphs with loops. This is the substrate for
// Gmaps, orbit graphs and the two sides of instantiated rules.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gmapkit/error.hpp"

namespace gmapkit {

using NodeId = std::string;
using LinkId = std::size_t;
using Dim = int;

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

}  // namespace detail

/// An undirected link. Ends are stored ordered (first <= second); a loop has
/// first == second.
struct Link {
  LinkId id = 0;
  NodeId first;
  NodeId second;
  Dim dim = 0;

  bool is_loop() const noexcept { return first == second; }

  // The end opposite to `end`; `end` itself for a loop.
  const NodeId& other(std::string_view end) const noexcept { return first == end ? second : first; }
};

class LabeledGraph {
 public:
  explicit LabeledGraph(int ambient_dimension = 0) : ambient_(ambient_dimension) {
    if (ambient_dimension < 0) {
      throw Error(ErrorCode::graph, "ambient dimension must be non-negative");
    }
  }

  int ambient_dimension() const noexcept { return ambient_; }

  void add_node(NodeId name) {
    if (name.empty()) {
      throw Error(ErrorCode::graph, "node names must be non-empty");
    }
    if (index_.contains(name)) {
      throw Error(ErrorCode::graph, "duplicate node '" + name + "'");
    }
    index_.emplace(name, std::vector<LinkId>{});
    order_.push_back(std::move(name));
  }

  /// Removes the node together with every link incident to it.
  void remove_node(std::string_view name) {
    auto it = find_node(name);
    const std::vector<LinkId> incident = it->second;
    for (LinkId id : incident) {
      if (slots_[id]) remove_link(id);
    }
    index_.erase(index_.find(name));
    order_.erase(std::find(order_.begin(), order_.end(), name));
  }

  LinkId add_link(std::string_view a, std::string_view b, Dim dim) {
    if (dim < 0 || dim > ambient_) {
      throw Error(ErrorCode::graph, "link dimension " + std::to_string(dim) + " outside [0," +
                                        std::to_string(ambient_) + "]");
    }
    auto ia = find_node(a);
    auto ib = find_node(b);
    Link link;
    link.id = slots_.size();
    link.first = NodeId(std::min(a, b));
    link.second = NodeId(std::max(a, b));
    link.dim = dim;
    ia->second.push_back(link.id);
    if (a != b) ib->second.push_back(link.id);
    slots_.push_back(std::move(link));
    ++live_links_;
    return slots_.back()->id;
  }

  /// Adds a link given its end set; arity must be 1 (loop) or 2.
  LinkId add_link(std::span<const NodeId> ends, Dim dim) {
    if (ends.size() == 1) return add_link(ends[0], ends[0], dim);
    if (ends.size() == 2 && ends[0] != ends[1]) return add_link(ends[0], ends[1], dim);
    throw Error(ErrorCode::graph, "a link needs 1 or 2 distinct ends, got " + std::to_string(ends.size()));
  }

  void remove_link(LinkId id) {
    if (id >= slots_.size() || !slots_[id]) {
      throw Error(ErrorCode::graph, "unknown link id " + std::to_string(id));
    }
    const Link& link = *slots_[id];
    for (const NodeId* end : {&link.first, &link.second}) {
      auto& incident = index_.find(*end)->second;
      auto pos = std::find(incident.begin(), incident.end(), id);
      if (pos != incident.end()) incident.erase(pos);
    }
    slots_[id].reset();
    --live_links_;
  }

  bool has_node(std::string_view name) const { return index_.find(name) != index_.end(); }
  bool has_link(LinkId id) const noexcept { return id < slots_.size() && slots_[id].has_value(); }

  /// Nodes in insertion order.
  const std::vector<NodeId>& nodes() const noexcept { return order_; }
  std::size_t node_count() const noexcept { return order_.size(); }
  std::size_t link_count() const noexcept { return live_links_; }

  const Link& link(LinkId id) const {
    if (!has_link(id)) throw Error(ErrorCode::graph, "unknown link id " + std::to_string(id));
    return *slots_[id];
  }

  /// Live links in id order.
  auto links() const {
    return slots_ | std::views::filter([](const std::optional<Link>& s) { return s.has_value(); }) |
           std::views::transform([](const std::optional<Link>& s) -> const Link& { return *s; });
  }

  /// Ids of the links incident to `node`; a loop appears once.
  std::span<const LinkId> incident_ids(std::string_view node) const { return find_node(node)->second; }

  std::vector<Link> incident_links(std::string_view node, std::optional<Dim> dim = std::nullopt) const {
    std::vector<Link> out;
    for (LinkId id : incident_ids(node)) {
      const Link& l = *slots_[id];
      if (!dim || l.dim == *dim) out.push_back(l);
    }
    return out;
  }

  /// Structural equality: same ambient dimension, same node set, and the same
  /// multiset of (ends, dim). Link ids and node order are ignored.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.ambient_ != b.ambient_ || a.node_count() != b.node_count() || a.link_count() != b.link_count()) {
      return false;
    }
    for (const auto& n : a.order_) {
      if (!b.has_node(n)) return false;
    }
    return a.link_signature() == b.link_signature();
  }

  std::vector<std::tuple<NodeId, NodeId, Dim>> link_signature() const {
    std::vector<std::tuple<NodeId, NodeId, Dim>> sig;
    sig.reserve(live_links_);
    for (const Link& l : links()) sig.emplace_back(l.first, l.second, l.dim);
    std::sort(sig.begin(), sig.end());
    return sig;
  }

 private:
  using Index = std::unordered_map<NodeId, std::vector<LinkId>, detail::StringHash, std::equal_to<>>;

  Index::iterator find_node(std::string_view name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::graph, "unknown node '" + std::string(name) + "'");
    return it;
  }
  Index::const_iterator find_node(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::graph, "unknown node '" + std::string(name) + "'");
    return it;
  }

  int ambient_;
  std::vector<NodeId> order_;
  Index index_;
  std::vector<std::optional<Link>> slots_;
  std::size_t live_links_ = 0;
};

namespace detail {

// Dense view of a graph used by the isomorphism search.
struct DenseGraph {
  std::vector<NodeId> names;
  std::vector<std::vector<std::pair<std::size_t, Dim>>> adjacency;  // (other end, dim); loops once
  std::map<std::tuple<std::size_t, std::size_t, Dim>, std::size_t> multiplicity;
  std::vector<std::vector<std::pair<Dim, bool>>> signature;

  explicit DenseGraph(const LabeledGraph& g) : names(g.nodes()), adjacency(names.size()), signature(names.size()) {
    std::unordered_map<std::string_view, std::size_t> pos;
    for (std::size_t i = 0; i < names.size(); ++i) pos.emplace(names[i], i);
    for (const Link& l : g.links()) {
      std::size_t a = pos.at(l.first);
      std::size_t b = pos.at(l.second);
      ++multiplicity[{std::min(a, b), std::max(a, b), l.dim}];
      adjacency[a].emplace_back(b, l.dim);
      signature[a].emplace_back(l.dim, a == b);
      if (a != b) {
        adjacency[b].emplace_back(a, l.dim);
        signature[b].emplace_back(l.dim, false);
      }
    }
    for (auto& s : signature) std::sort(s.begin(), s.end());
  }

  std::size_t count(std::size_t a, std::size_t b, Dim d) const {
    auto it = multiplicity.find({std::min(a, b), std::max(a, b), d});
    return it == multiplicity.end() ? 0 : it->second;
  }
};

}  // namespace detail

/// Searches for a node bijection from g1 to g2 preserving link dimensions and
/// incidences (with multiplicity). Exact backtracking; deterministic for a
/// fixed input ordering.
inline std::optional<std::map<NodeId, NodeId>> iso_check(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.node_count() != g2.node_count() || g1.link_count() != g2.link_count()) return std::nullopt;
  const detail::DenseGraph a(g1);
  const detail::DenseGraph b(g2);
  const std::size_t n = a.names.size();

  // Visit g1 in BFS order so most nodes have an already-mapped parent that
  // restricts their candidates to its neighbours in g2.
  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> parent(n);
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      std::size_t x = order[head++];
      for (auto [y, d] : a.adjacency[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          order.push_back(y);
        }
      }
    }
  }

  std::vector<std::optional<std::size_t>> image(n);
  std::vector<char> used(n, 0);

  auto consistent = [&](std::size_t x, std::size_t fx) {
    if (a.signature[x] != b.signature[fx]) return false;
    for (auto [y, d] : a.adjacency[x]) {
      if (y != x && !image[y]) continue;
      std::size_t fy = (y == x) ? fx : *image[y];
      if (a.count(x, y, d) != b.count(fx, fy, d)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t x = order[k];
    auto attempt = [&](std::size_t fx) {
      if (used[fx] || !consistent(x, fx)) return false;
      image[x] = fx;
      used[fx] = 1;
      if (search(k + 1)) return true;
      image[x].reset();
      used[fx] = 0;
      return false;
    };
    if (parent[x]) {
      std::size_t fp = *image[*parent[x]];
      for (auto [cand, d] : b.adjacency[fp]) {
        if (attempt(cand)) return true;
      }
      return false;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (attempt(cand)) return true;
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  std::map<NodeId, NodeId> result;
  for (std::size_t i = 0; i < n; ++i) result.emplace(a.names[i], b.names[*image[i]]);
  return result;
}

}  // namespace gmapkit
