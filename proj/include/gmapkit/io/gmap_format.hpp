#pragma once

// .gmap documents: a JSON object with the keys dimension, darts, links and
// embeddings. serialize_gmap always emits the canonical layout (darts
// lexicographic, links by (dim, ends), layers by name, one entry per line),
// so parse followed by serialize is byte-stable.

#include <algorithm>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"

namespace gmapkit::io {

namespace detail {

using nlohmann::json;

inline std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Errors inside a well-formed JSON document are located by their JSON path.
[[noreturn]] inline void fail_at(const std::string& path, const std::string& message) {
  throw SyntaxError("at " + path + ": " + message, 0, 0);
}

inline const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(path, std::string("missing key \"") + key + "\"");
  return *it;
}

inline void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) == keys.end()) {
      fail_at(path, "unexpected key \"" + it.key() + "\"");
    }
  }
}

inline int as_dim(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000) {
    fail_at(path, "expected a non-negative integer");
  }
  return static_cast<int>(v.get<long long>());
}

inline double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail_at(path, "expected a number");
  return v.get<double>();
}

inline EmbeddingValue as_value(const json& v, ValueType type, const std::string& path) {
  auto components = [&](std::size_t n) {
    if (!v.is_array() || v.size() != n) fail_at(path, "expected an array of " + std::to_string(n) + " numbers");
    std::vector<double> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(as_number(v[k], path + "[" + std::to_string(k) + "]"));
    return out;
  };
  switch (type) {
    case ValueType::point2d: {
      auto c = components(2);
      return Point2{c[0], c[1]};
    }
    case ValueType::point3d: {
      auto c = components(3);
      return Point3{c[0], c[1], c[2]};
    }
    case ValueType::color_rgb: {
      auto c = components(3);
      return ColorRGB{c[0], c[1], c[2]};
    }
    case ValueType::scalar:
      return as_number(v, path);
    case ValueType::opaque_string:
      if (!v.is_string()) fail_at(path, "expected a string");
      return v.get<std::string>();
  }
  fail_at(path, "unknown value type");
}

inline std::string value_json(const EmbeddingValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Point2>) {
          return "[" + format_number(x[0]) + ", " + format_number(x[1]) + "]";
        } else if constexpr (std::is_same_v<T, Point3>) {
          return "[" + format_number(x[0]) + ", " + format_number(x[1]) + ", " + format_number(x[2]) + "]";
        } else if constexpr (std::is_same_v<T, ColorRGB>) {
          return "[" + format_number(x.r) + ", " + format_number(x.g) + ", " + format_number(x.b) + "]";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(x);
        } else {
          return quote(x);
        }
      },
      v);
}

}  // namespace detail

inline Gmap parse_gmap(std::string_view text) {
  using detail::fail_at;
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    auto colon = what.find("; ");
    throw SyntaxError(colon == std::string::npos ? what : what.substr(colon + 2), line, col);
  }
  if (!doc.is_object()) fail_at("$", "expected an object");
  detail::only_keys(doc, {"dimension", "darts", "links", "embeddings"}, "$");

  LabeledGraph graph(detail::as_dim(detail::field(doc, "dimension", "$"), "$.dimension"));

  const json& darts = detail::field(doc, "darts", "$");
  if (!darts.is_array()) fail_at("$.darts", "expected an array");
  for (std::size_t k = 0; k < darts.size(); ++k) {
    const std::string path = "$.darts[" + std::to_string(k) + "]";
    if (!darts[k].is_string() || darts[k].get<std::string>().empty()) fail_at(path, "expected a non-empty string");
    if (graph.has_node(darts[k].get<std::string>())) fail_at(path, "duplicate dart " + darts[k].dump());
    graph.add_node(darts[k].get<std::string>());
  }

  const json& links = detail::field(doc, "links", "$");
  if (!links.is_array()) fail_at("$.links", "expected an array");
  for (std::size_t k = 0; k < links.size(); ++k) {
    const std::string path = "$.links[" + std::to_string(k) + "]";
    const json& l = links[k];
    if (!l.is_object()) fail_at(path, "expected an object");
    detail::only_keys(l, {"dim", "ends"}, path);
    int dim = detail::as_dim(detail::field(l, "dim", path), path + ".dim");
    if (dim > graph.ambient_dimension()) fail_at(path + ".dim", "dimension exceeds " + std::to_string(graph.ambient_dimension()));
    const json& ends = detail::field(l, "ends", path);
    if (!ends.is_array() || ends.empty() || ends.size() > 2) fail_at(path + ".ends", "expected 1 or 2 darts");
    std::vector<NodeId> names;
    for (std::size_t e = 0; e < ends.size(); ++e) {
      const std::string epath = path + ".ends[" + std::to_string(e) + "]";
      if (!ends[e].is_string()) fail_at(epath, "expected a dart name");
      if (!graph.has_node(ends[e].get<std::string>())) {
        throw Error(ErrorCode::unknown_dart, "at " + epath + ": unknown dart " + ends[e].dump());
      }
      names.push_back(ends[e].get<std::string>());
    }
    if (names.size() == 2 && names[0] == names[1]) fail_at(path + ".ends", "a loop lists its dart once");
    graph.add_link(names, dim);
  }

  std::vector<EmbeddingLayer> layers;
  if (auto it = doc.find("embeddings"); it != doc.end()) {
    if (!it->is_array()) fail_at("$.embeddings", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "$.embeddings[" + std::to_string(k) + "]";
      const json& e = (*it)[k];
      if (!e.is_object()) fail_at(path, "expected an object");
      detail::only_keys(e, {"name", "orbit", "type", "values"}, path);
      EmbeddingLayer layer;
      const json& name = detail::field(e, "name", path);
      if (!name.is_string()) fail_at(path + ".name", "expected a string");
      layer.name = name.get<std::string>();
      const json& orbit = detail::field(e, "orbit", path);
      if (!orbit.is_array()) fail_at(path + ".orbit", "expected an array of dimensions");
      std::vector<Dim> dims;
      for (std::size_t d = 0; d < orbit.size(); ++d) dims.push_back(detail::as_dim(orbit[d], path + ".orbit"));
      try {
        layer.domain = OrbitType(std::move(dims));
      } catch (const Error& err) {
        fail_at(path + ".orbit", err.what());
      }
      const json& type = detail::field(e, "type", path);
      auto vt = type.is_string() ? parse_value_type(type.get<std::string>()) : std::nullopt;
      if (!vt) fail_at(path + ".type", "expected one of point2d, point3d, color_rgb, scalar, string");
      layer.type = *vt;
      const json& values = detail::field(e, "values", path);
      if (!values.is_object()) fail_at(path + ".values", "expected an object keyed by dart");
      for (auto v = values.begin(); v != values.end(); ++v) {
        const std::string vpath = path + ".values." + v.key();
        if (!graph.has_node(v.key())) throw Error(ErrorCode::unknown_dart, "at " + vpath + ": unknown dart");
        layer.values.emplace(v.key(), detail::as_value(v.value(), layer.type, vpath));
      }
      for (const NodeId& d : graph.nodes()) {
        if (!layer.values.contains(d)) fail_at(path + ".values", "no value for dart \"" + d + "\"");
      }
      layers.push_back(std::move(layer));
    }
  }
  try {
    return Gmap(std::move(graph), std::move(layers));
  } catch (const Error& err) {
    fail_at("$.embeddings", err.what());
  }
}

/// Canonical text of a graph and optional layers.
inline std::string serialize_graph(const LabeledGraph& graph, const std::vector<const EmbeddingLayer*>& layers = {}) {
  using detail::quote;
  std::vector<NodeId> darts = graph.nodes();
  std::sort(darts.begin(), darts.end());

  std::vector<std::tuple<Dim, NodeId, NodeId>> links;
  for (const Link& l : graph.links()) links.emplace_back(l.dim, l.first, l.second);
  std::sort(links.begin(), links.end());

  std::string out = "{\n  \"dimension\": " + std::to_string(graph.ambient_dimension()) + ",\n";
  out += "  \"darts\": [";
  for (std::size_t k = 0; k < darts.size(); ++k) out += (k ? ",\n    " : "\n    ") + quote(darts[k]);
  out += darts.empty() ? "],\n" : "\n  ],\n";

  out += "  \"links\": [";
  for (std::size_t k = 0; k < links.size(); ++k) {
    const auto& [dim, a, b] = links[k];
    out += k ? ",\n    " : "\n    ";
    out += "{\"dim\": " + std::to_string(dim) + ", \"ends\": [" + quote(a);
    if (a != b) out += ", " + quote(b);
    out += "]}";
  }
  out += links.empty() ? "],\n" : "\n  ],\n";

  out += "  \"embeddings\": [";
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const EmbeddingLayer& layer = *layers[k];
    out += k ? ",\n    {\n" : "\n    {\n";
    out += "      \"name\": " + quote(layer.name) + ",\n";
    out += "      \"orbit\": [";
    for (std::size_t d = 0; d < layer.domain.size(); ++d) {
      out += (d ? ", " : "") + std::to_string(layer.domain.dims()[d]);
    }
    out += "],\n";
    out += "      \"type\": " + quote(type_name(layer.type)) + ",\n";
    out += "      \"values\": {";
    bool first = true;
    for (const auto& [dart, value] : layer.values) {
      out += first ? "\n        " : ",\n        ";
      out += quote(dart) + ": " + detail::value_json(value);
      first = false;
    }
    out += first ? "}\n    }" : "\n      }\n    }";
  }
  out += layers.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline std::string serialize_gmap(const Gmap& g) {
  std::vector<const EmbeddingLayer*> layers;
  for (const auto& [name, layer] : g.layers()) layers.push_back(&layer);
  return serialize_graph(g.graph(), layers);
}

}  // namespace gmapkit::io
