#pragma once

// Rule application. Given an instantiated rule L -> R and a total match of L
// into a Gmap: delete left-only darts and every matched left link, add the
// right-only darts and all right links, fill embedding values for the new
// darts from directives, then re-validate the result.

#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/match.hpp"
#include "gmapkit/scheme.hpp"

namespace gmapkit {

/// How a layer gets its values on the darts created for one scheme node.
///   pos:n1=midpoint(n0)      mean of the 0-edge ends at the matching n0 dart
///   pos:n1=midpoint(n0,n2)   mean of the values at the matching n0 and n2 darts
///   col:n1=inherit(n0)       copy the value of the matching n0 dart
///   col:n1=constant(1,0,0)   a literal value
struct EmbeddingDirective {
  enum class Kind { inherit, constant, midpoint };

  std::string layer;
  std::string node;
  Kind kind = Kind::inherit;
  std::vector<std::string> sources;  // scheme node names
  std::string literal;               // constant(...) argument text

  friend bool operator==(const EmbeddingDirective&, const EmbeddingDirective&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.emplace_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline double parse_double(std::string_view text) {
  std::string s(trim(text));
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(x)) {
    throw Error(ErrorCode::directive, "'" + s + "' is not a finite number");
  }
  return x;
}

}  // namespace detail

/// Parses "layer:node=expr".
inline EmbeddingDirective parse_directive(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::directive, "bad embedding directive '" + std::string(text) + "': " + why);
  };
  auto colon = text.find(':');
  auto eq = text.find('=');
  if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon) {
    throw fail("expected layer:node=expr");
  }
  EmbeddingDirective d;
  d.layer = std::string(detail::trim(text.substr(0, colon)));
  d.node = std::string(detail::trim(text.substr(colon + 1, eq - colon - 1)));
  std::string_view expr = detail::trim(text.substr(eq + 1));
  auto open = expr.find('(');
  if (d.layer.empty() || d.node.empty() || open == std::string_view::npos || expr.back() != ')') {
    throw fail("expected layer:node=expr");
  }
  std::string_view fn = detail::trim(expr.substr(0, open));
  std::string_view args = expr.substr(open + 1, expr.size() - open - 2);
  if (fn == "constant") {
    d.kind = EmbeddingDirective::Kind::constant;
    d.literal = std::string(detail::trim(args));
    return d;
  }
  d.sources = detail::split_commas(args);
  for (const auto& s : d.sources) {
    if (s.empty()) throw fail("empty node name");
  }
  if (fn == "inherit" && d.sources.size() == 1) {
    d.kind = EmbeddingDirective::Kind::inherit;
  } else if (fn == "midpoint" && (d.sources.size() == 1 || d.sources.size() == 2)) {
    d.kind = EmbeddingDirective::Kind::midpoint;
  } else {
    throw fail("expected inherit(node), midpoint(node[,node]) or constant(value)");
  }
  return d;
}

/// Parses a literal value of type `type`: "x,y", "x,y,z", "r,g,b", "x", or raw text.
inline EmbeddingValue parse_value(std::string_view text, ValueType type) {
  if (type == ValueType::opaque_string) return std::string(text);
  auto parts = detail::split_commas(text);
  auto expect = [&](std::size_t n) {
    if (parts.size() != n) {
      throw Error(ErrorCode::directive, "a " + std::string(type_name(type)) + " needs " + std::to_string(n) +
                                            " components, got '" + std::string(text) + "'");
    }
  };
  switch (type) {
    case ValueType::point2d:
      expect(2);
      return Point2{detail::parse_double(parts[0]), detail::parse_double(parts[1])};
    case ValueType::point3d:
      expect(3);
      return Point3{detail::parse_double(parts[0]), detail::parse_double(parts[1]), detail::parse_double(parts[2])};
    case ValueType::color_rgb:
      expect(3);
      return ColorRGB{detail::parse_double(parts[0]), detail::parse_double(parts[1]), detail::parse_double(parts[2])};
    case ValueType::scalar:
      expect(1);
      return detail::parse_double(parts[0]);
    default:
      return std::string(text);
  }
}

inline std::string to_string(const EmbeddingDirective& d) {
  std::string s = d.layer + ":" + d.node + "=";
  switch (d.kind) {
    case EmbeddingDirective::Kind::inherit: return s + "inherit(" + d.sources.at(0) + ")";
    case EmbeddingDirective::Kind::constant: return s + "constant(" + d.literal + ")";
    case EmbeddingDirective::Kind::midpoint:
      return s + "midpoint(" + d.sources.at(0) + (d.sources.size() > 1 ? "," + d.sources[1] : std::string()) + ")";
  }
  return s;
}

namespace detail {

// The g link matched by each left link; throws when the match is not a
// morphism.
inline std::set<LinkId> link_images(const LabeledGraph& left, const Gmap& g, const Match& m) {
  std::set<LinkId> images;
  for (const Link& l : left.links()) {
    const Dart& a = m[l.first];
    const Dart& b = m[l.second];
    std::optional<LinkId> hit;
    for (LinkId id : g.graph().incident_ids(a)) {
      const Link& gl = g.graph().link(id);
      if (gl.dim == l.dim && gl.other(a) == b && !images.contains(id)) {
        hit = id;
        break;
      }
    }
    if (!hit) {
      throw Error(ErrorCode::match, "left link " + l.first + " -" + std::to_string(l.dim) + "- " + l.second +
                                        " has no image between '" + a + "' and '" + b + "'");
    }
    images.insert(*hit);
  }
  return images;
}

}  // namespace detail

inline Gmap apply_rule(const InstantiatedRule& rule, const Gmap& g, const Match& m,
                       const std::vector<EmbeddingDirective>& directives = {}) {
  for (const NodeId& x : rule.left.nodes()) {
    const Dart& a = m[x];
    require_dart(g, a);
  }
  if (m.mapping.size() != rule.left.node_count()) throw Error(ErrorCode::match, "the match maps nodes outside the left-hand side");
  {
    std::set<Dart> images;
    for (const auto& [x, a] : m.mapping) {
      if (!images.insert(a).second) throw Error(ErrorCode::match, "the match is not injective at '" + a + "'");
    }
  }
  const std::set<LinkId> matched_links = detail::link_images(rule.left, g, m);

  std::vector<Dart> removed;
  for (const NodeId& x : rule.left.nodes()) {
    if (rule.right.has_node(x)) continue;
    const Dart& a = m[x];
    for (LinkId id : g.graph().incident_ids(a)) {
      if (!matched_links.contains(id)) {
        const Link& l = g.graph().link(id);
        throw Error(ErrorCode::dangling, "deleting '" + a + "' would leave its " + std::to_string(l.dim) +
                                             "-link to '" + l.other(a) + "' dangling");
      }
    }
    removed.push_back(a);
  }

  LabeledGraph graph = g.graph();
  for (LinkId id : matched_links) graph.remove_link(id);
  for (const Dart& a : removed) graph.remove_node(a);

  // Right node name -> dart of the result.
  std::map<NodeId, Dart> place;
  std::vector<std::pair<NodeId, Dart>> created;
  for (const NodeId& x : rule.right.nodes()) {
    if (rule.left.has_node(x)) {
      place.emplace(x, m[x]);
      continue;
    }
    Dart fresh = x;
    for (int k = 1; graph.has_node(fresh); ++k) fresh = x + "#" + std::to_string(k);
    graph.add_node(fresh);
    place.emplace(x, fresh);
    created.emplace_back(x, fresh);
  }
  for (const Link& l : rule.right.links()) graph.add_link(place.at(l.first), place.at(l.second), l.dim);

  // Index directives by (layer, scheme node).
  std::map<std::pair<std::string, std::string>, const EmbeddingDirective*> by_target;
  std::set<std::string> created_scheme_nodes;
  for (const auto& [x, fresh] : created) created_scheme_nodes.insert(split_instance_name(x).second);
  for (const auto& d : directives) {
    if (!g.has_layer(d.layer)) throw Error(ErrorCode::directive, "directive for unknown layer '" + d.layer + "'");
    if (!created_scheme_nodes.contains(d.node)) {
      throw Error(ErrorCode::directive, "directive targets '" + d.node + "', which creates no darts");
    }
    if (!by_target.emplace(std::pair{d.layer, d.node}, &d).second) {
      throw Error(ErrorCode::directive, "two directives for " + d.layer + " on " + d.node);
    }
  }

  std::vector<EmbeddingLayer> layers;
  for (const auto& [name, old] : g.layers()) {
    EmbeddingLayer layer{old.name, old.domain, old.type, {}};
    for (const auto& [dart, value] : old.values) {
      if (graph.has_node(dart)) layer.values.emplace(dart, value);
    }
    for (const auto& [x, fresh] : created) {
      auto [u, scheme_node] = split_instance_name(x);
      auto it = by_target.find({name, scheme_node});
      if (it == by_target.end()) {
        throw Error(ErrorCode::directive, "no embedding directive for layer '" + name + "' on new node '" + scheme_node + "'");
      }
      const EmbeddingDirective& d = *it->second;
      auto source_dart = [&](const std::string& node) -> const Dart& {
        const NodeId src = instance_name(u, node);
        if (!rule.left.has_node(src)) {
          throw Error(ErrorCode::directive, to_string(d) + ": '" + node + "' is not a left-hand side node");
        }
        return m[src];
      };
      switch (d.kind) {
        case EmbeddingDirective::Kind::constant:
          layer.values.emplace(fresh, parse_value(d.literal, old.type));
          break;
        case EmbeddingDirective::Kind::inherit:
          layer.values.emplace(fresh, old.at(source_dart(d.sources[0])));
          break;
        case EmbeddingDirective::Kind::midpoint: {
          const Dart& a = source_dart(d.sources[0]);
          const Dart& b = d.sources.size() > 1 ? source_dart(d.sources[1]) : alpha(g, a, 0);
          layer.values.emplace(fresh, midpoint(old.at(a), old.at(b)));
          break;
        }
      }
    }
    layers.push_back(std::move(layer));
  }

  Gmap result(std::move(graph), std::move(layers));
  ValidationReport report = validate(result);
  if (!report.ok()) {
    std::string message =
        "rule '" + rule.name + "' produced an invalid Gmap (" + std::to_string(report.size()) + " violations)";
    throw ValidationError(ErrorCode::post_validation, message, std::move(report));
  }
  return result;
}

}  // namespace gmapkit
