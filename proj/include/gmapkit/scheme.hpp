#pragma once

// Graph schemes and rule schemes, and their instantiation against a concrete
// orbit graph. A scheme node decorated with <o^mu> stands for a copy of the
// orbit relabeled by <o> -> <o^mu>; a scheme arc mu -i- nu links the copies
// of each orbit dart: (u,mu) -i- (u,nu).

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/orbit_type.hpp"
#include "gmapkit/relabel.hpp"

namespace gmapkit {

struct SchemeNode {
  std::string name;
  GeneralizedOrbitType decoration;
  friend bool operator==(const SchemeNode&, const SchemeNode&) = default;
};

struct SchemeArc {
  std::string from;
  std::string to;
  Dim dim = 0;
  friend bool operator==(const SchemeArc&, const SchemeArc&) = default;
};

struct GraphScheme {
  OrbitType parameter;
  std::vector<SchemeNode> nodes;
  std::vector<SchemeArc> arcs;

  const SchemeNode* find(std::string_view name) const {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const SchemeNode& n) { return n.name == name; });
    return it == nodes.end() ? nullptr : &*it;
  }

  friend bool operator==(const GraphScheme&, const GraphScheme&) = default;
};

struct RuleScheme {
  std::string name;
  OrbitType parameter;
  GraphScheme left;
  GraphScheme right;
  std::string hook;

  bool preserves(std::string_view node) const { return left.find(node) && right.find(node); }

  friend bool operator==(const RuleScheme&, const RuleScheme&) = default;
};

/// Instance names render the pair (u, mu) as "u@mu". Scheme node names never
/// contain '@', so the last '@' splits the pair.
inline std::string instance_name(std::string_view dart, std::string_view scheme_node) {
  std::string s(dart);
  s += '@';
  s += scheme_node;
  return s;
}

inline std::pair<std::string, std::string> split_instance_name(std::string_view name) {
  auto at = name.rfind('@');
  if (at == std::string_view::npos) throw Error(ErrorCode::scheme, "'" + std::string(name) + "' is not an instance name");
  return {std::string(name.substr(0, at)), std::string(name.substr(at + 1))};
}

inline void check_graph_scheme(const GraphScheme& s, std::string_view side = "scheme") {
  const std::string where(side);
  std::set<std::string> names;
  for (const auto& n : s.nodes) {
    if (n.name.empty() || n.name.find('@') != std::string::npos) {
      throw Error(ErrorCode::scheme, where + ": invalid node name '" + n.name + "'");
    }
    if (!names.insert(n.name).second) throw Error(ErrorCode::scheme, where + ": duplicate node '" + n.name + "'");
    if (n.decoration.size() != s.parameter.size()) {
      throw Error(ErrorCode::scheme, where + ": node '" + n.name + "' decoration " + n.decoration.to_string() +
                                         " does not have the length of the parameter " + s.parameter.to_string());
    }
  }
  for (const auto& a : s.arcs) {
    for (const auto& end : {a.from, a.to}) {
      if (!names.contains(end)) throw Error(ErrorCode::scheme, where + ": arc references unknown node '" + end + "'");
    }
    if (a.from == a.to) throw Error(ErrorCode::scheme, where + ": self-arc on node '" + a.from + "' is not supported");
    if (a.dim < 0) throw Error(ErrorCode::scheme, where + ": negative arc dimension");
  }
}

inline void check_rule_scheme(const RuleScheme& r) {
  if (r.left.parameter != r.parameter || r.right.parameter != r.parameter) {
    throw Error(ErrorCode::scheme, "rule '" + r.name + "': both sides must use the parameter " + r.parameter.to_string());
  }
  check_graph_scheme(r.left, "left");
  check_graph_scheme(r.right, "right");
  if (r.hook.empty()) throw Error(ErrorCode::scheme, "rule '" + r.name + "': no hook");
  const SchemeNode* hook = r.left.find(r.hook);
  if (!hook) throw Error(ErrorCode::scheme, "rule '" + r.name + "': hook '" + r.hook + "' is not a left node");
  if (hook->decoration.has_remove()) {
    throw Error(ErrorCode::scheme, "rule '" + r.name + "': hook '" + r.hook + "' decoration " +
                                       hook->decoration.to_string() + " contains the removing symbol");
  }
}

namespace detail {

inline void require_orbit_graph(const LabeledGraph& o, const OrbitType& parameter) {
  if (o.node_count() == 0) throw Error(ErrorCode::precondition, "orbit graph is empty");
  for (const Link& l : o.links()) {
    if (!parameter.contains(l.dim)) {
      throw Error(ErrorCode::precondition, "orbit graph has a " + std::to_string(l.dim) + "-link outside " +
                                               parameter.to_string());
    }
  }
  std::unordered_set<NodeId> seen{o.nodes().front()};
  std::deque<NodeId> queue{o.nodes().front()};
  while (!queue.empty()) {
    NodeId x = std::move(queue.front());
    queue.pop_front();
    for (LinkId id : o.incident_ids(x)) {
      const NodeId& y = o.link(id).other(x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  if (seen.size() != o.node_count()) throw Error(ErrorCode::precondition, "orbit graph is not connected");
}

inline void require_dimension(const GraphScheme& s, int n) {
  auto check = [n](Dim d, const std::string& what) {
    if (d > n) {
      throw Error(ErrorCode::scheme, what + " uses dimension " + std::to_string(d) + " above " + std::to_string(n));
    }
  };
  for (const auto& node : s.nodes)
    for (Dim d : node.decoration.entries()) check(d, "node '" + node.name + "'");
  for (const auto& a : s.arcs) check(a.dim, "arc " + a.from + " -" + std::to_string(a.dim) + "- " + a.to);
}

}  // namespace detail

/// iota(mu, O) = [<o> -> <o^mu>](O) with every dart u renamed "u@mu".
inline LabeledGraph instantiate_node(const SchemeNode& node, const LabeledGraph& orbit_graph, const OrbitType& parameter) {
  RelabelingFunction f = relabel_from_types(parameter, node.decoration);
  LabeledGraph renamed(orbit_graph.ambient_dimension());
  for (const NodeId& u : orbit_graph.nodes()) renamed.add_node(instance_name(u, node.name));
  for (const Link& l : orbit_graph.links()) {
    renamed.add_link(instance_name(l.first, node.name), instance_name(l.second, node.name), l.dim);
  }
  return apply_relabeling(f, renamed);
}

/// Union of the node instantiations plus one link (u,mu) -i- (u,nu) per
/// scheme arc mu -i- nu and orbit dart u.
inline LabeledGraph instantiate_scheme(const GraphScheme& scheme, const LabeledGraph& orbit_graph) {
  check_graph_scheme(scheme);
  detail::require_orbit_graph(orbit_graph, scheme.parameter);
  detail::require_dimension(scheme, orbit_graph.ambient_dimension());
  LabeledGraph out(orbit_graph.ambient_dimension());
  for (const auto& node : scheme.nodes) {
    LabeledGraph copy = instantiate_node(node, orbit_graph, scheme.parameter);
    for (const NodeId& n : copy.nodes()) out.add_node(n);
    for (const Link& l : copy.links()) out.add_link(l.first, l.second, l.dim);
  }
  for (const auto& arc : scheme.arcs) {
    for (const NodeId& u : orbit_graph.nodes()) {
      out.add_link(instance_name(u, arc.from), instance_name(u, arc.to), arc.dim);
    }
  }
  return out;
}

/// A concrete rule obtained by instantiating both sides of a rule scheme with
/// the same orbit graph.
struct InstantiatedRule {
  std::string name;
  OrbitType parameter;
  std::string hook;
  LabeledGraph orbit;
  LabeledGraph left;
  LabeledGraph right;
  std::vector<NodeId> preserved;      // instance names present on both sides
  std::vector<NodeId> hook_instance;  // u@hook for every orbit dart u, orbit order

  bool is_preserved(std::string_view n) const {
    return std::find(preserved.begin(), preserved.end(), n) != preserved.end();
  }
};

inline InstantiatedRule instantiate_rule(const RuleScheme& rule, const LabeledGraph& orbit_graph) {
  check_rule_scheme(rule);
  InstantiatedRule out;
  out.name = rule.name;
  out.parameter = rule.parameter;
  out.hook = rule.hook;
  out.orbit = orbit_graph;
  out.left = instantiate_scheme(rule.left, orbit_graph);
  out.right = instantiate_scheme(rule.right, orbit_graph);
  for (const auto& node : rule.left.nodes) {
    if (!rule.right.find(node.name)) continue;
    for (const NodeId& u : orbit_graph.nodes()) out.preserved.push_back(instance_name(u, node.name));
  }
  for (const NodeId& u : orbit_graph.nodes()) out.hook_instance.push_back(instance_name(u, rule.hook));
  return out;
}

/// Instantiates `rule` with the orbit <parameter>(d) of g.
inline InstantiatedRule instantiate_rule(const RuleScheme& rule, const Gmap& g, std::string_view d) {
  require_dart(g, d);
  return instantiate_rule(rule, orbit(g, rule.parameter, d));
}

}  // namespace gmapkit
