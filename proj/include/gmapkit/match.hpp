#pragma once

// Match completion. Because every dart of a Gmap has exactly one i-link per
// dimension, mapping one node per connected component of a rule's left-hand
// side determines the whole match: when x -> a and x -i- y, y must go to
// alpha_i(a).

#include <deque>
#include <map>
#include <string>
#include <unordered_map>

#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/scheme.hpp"

namespace gmapkit {

/// Injective, dimension- and incidence-preserving map from a left-hand side
/// into a Gmap.
struct Match {
  std::map<NodeId, Dart> mapping;

  const Dart& operator[](std::string_view node) const {
    auto it = mapping.find(std::string(node));
    if (it == mapping.end()) throw Error(ErrorCode::match, "node '" + std::string(node) + "' is not matched");
    return it->second;
  }

  friend bool operator==(const Match&, const Match&) = default;
};

inline Match complete_match(const LabeledGraph& left, const Gmap& g, const std::map<NodeId, Dart>& seed) {
  if (left.node_count() > 0 && seed.empty()) {
    throw Error(ErrorCode::precondition, "the seed must map at least one left node");
  }
  Match m;
  std::unordered_map<Dart, NodeId> preimage;
  std::deque<NodeId> queue;

  auto mismatch = [](const std::string& why) { return Error(ErrorCode::match, why); };

  auto assign = [&](const NodeId& x, const Dart& a) {
    if (auto it = m.mapping.find(x); it != m.mapping.end()) {
      if (it->second != a) {
        throw mismatch("conflicting images for '" + x + "': '" + it->second + "' and '" + a + "'");
      }
      return;
    }
    if (auto it = preimage.find(a); it != preimage.end()) {
      throw mismatch("'" + x + "' and '" + it->second + "' would both map to '" + a + "'");
    }
    m.mapping.emplace(x, a);
    preimage.emplace(a, x);
    queue.push_back(x);
  };

  for (const auto& [x, a] : seed) {
    if (!left.has_node(x)) throw Error(ErrorCode::precondition, "seed names unknown left node '" + x + "'");
    require_dart(g, a);
    assign(x, a);
  }

  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    const Dart a = m.mapping.at(x);

    std::map<Dim, std::size_t> per_dim;
    for (LinkId id : left.incident_ids(x)) ++per_dim[left.link(id).dim];
    for (auto [dim, count] : per_dim) {
      if (count > 1) {
        throw mismatch("'" + x + "' has " + std::to_string(count) + " " + std::to_string(dim) +
                       "-links but a dart has exactly one");
      }
      if (dim > g.dimension()) throw mismatch("'" + x + "' has a " + std::to_string(dim) + "-link above the Gmap dimension");
    }

    for (LinkId id : left.incident_ids(x)) {
      const Link& l = left.link(id);
      Dart target;
      try {
        target = alpha(g, a, l.dim);
      } catch (const Error& e) {
        throw mismatch(e.what());
      }
      if (l.is_loop()) {
        if (target != a) {
          throw mismatch("'" + x + "' has a " + std::to_string(l.dim) + "-loop but '" + a + "' is " +
                         std::to_string(l.dim) + "-linked to '" + target + "'");
        }
        continue;
      }
      if (target == a) {
        throw mismatch("'" + x + "' is " + std::to_string(l.dim) + "-linked to '" + l.other(x) + "' but '" + a +
                       "' has a " + std::to_string(l.dim) + "-loop");
      }
      assign(l.other(x), target);
    }
  }

  if (m.mapping.size() != left.node_count()) {
    for (const NodeId& x : left.nodes()) {
      if (!m.mapping.contains(x)) {
        throw Error(ErrorCode::precondition,
                    "left node '" + x + "' is unreachable from the seed; seed one node per connected component");
      }
    }
  }
  return m;
}

inline Match complete_match(const InstantiatedRule& rule, const Gmap& g, const std::map<NodeId, Dart>& seed) {
  return complete_match(rule.left, g, seed);
}

/// The seed used when a rule is applied at dart d: d@hook -> d.
inline std::map<NodeId, Dart> hook_seed(const InstantiatedRule& rule, std::string_view d) {
  return {{instance_name(d, rule.hook), Dart(d)}};
}

}  // namespace gmapkit
