#pragma once

// Dimensional unification: build the 2-Gmap of a polygonal mesh by taking
// every incident (vertex, edge, face) triple as a dart.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"

namespace gmapkit {

struct PolygonalMesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<std::size_t>> faces;
};

/// Checks indices, face lengths and consecutive-distinct vertices.
inline void check_faces(const PolygonalMesh& mesh) {
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    const std::string where = "face " + std::to_string(f);
    if (face.size() < 3) throw Error(ErrorCode::mesh, where + " has fewer than 3 vertices");
    for (std::size_t k = 0; k < face.size(); ++k) {
      if (face[k] >= mesh.vertices.size()) {
        throw Error(ErrorCode::mesh, where + " references vertex " + std::to_string(face[k]) + " out of range");
      }
      if (face[k] == face[(k + 1) % face.size()]) {
        throw Error(ErrorCode::mesh, where + " repeats vertex " + std::to_string(face[k]) + " consecutively");
      }
    }
  }
}

inline std::string dart_name(std::size_t v, std::size_t a, std::size_t b, std::size_t f) {
  return "v" + std::to_string(v) + "e" + std::to_string(a) + "-" + std::to_string(b) + "f" + std::to_string(f);
}

/// The 2-Gmap of `mesh` with a point3d layer `pos` on <1,2>. Boundary edges
/// get 2-loops. Darts are named v{i}e{j}-{k}f{m} where j < k are the edge's
/// endpoints.
inline Gmap unify(const PolygonalMesh& mesh) {
  check_faces(mesh);

  using Edge = std::pair<std::size_t, std::size_t>;
  auto edge_of = [](std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; };

  // Faces using each undirected edge.
  std::map<Edge, std::vector<std::size_t>> edge_faces;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    for (std::size_t k = 0; k < face.size(); ++k) {
      auto& users = edge_faces[edge_of(face[k], face[(k + 1) % face.size()])];
      if (!users.empty() && users.back() == f) {
        throw Error(ErrorCode::mesh, "face " + std::to_string(f) + " uses edge " + std::to_string(face[k]) + "-" +
                                         std::to_string(face[(k + 1) % face.size()]) + " twice");
      }
      users.push_back(f);
    }
  }
  for (const auto& [e, users] : edge_faces) {
    if (users.size() > 2) {
      throw Error(ErrorCode::mesh, "non-manifold edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                       " is shared by " + std::to_string(users.size()) + " faces");
    }
  }

  LabeledGraph graph(2);
  EmbeddingLayer pos{"pos", OrbitType({1, 2}), ValueType::point3d, {}};

  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    const std::size_t len = face.size();
    for (std::size_t k = 0; k < len; ++k) {
      auto [a, b] = edge_of(face[k], face[(k + 1) % len]);
      for (std::size_t v : {face[k], face[(k + 1) % len]}) {
        const std::string name = dart_name(v, a, b, f);
        graph.add_node(name);
        pos.values.emplace(name, mesh.vertices[v]);
      }
    }
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t v = face[k];
      std::size_t w = face[(k + 1) % len];
      auto [a, b] = edge_of(v, w);
      // 0-link along the edge inside the face
      graph.add_link(dart_name(v, a, b, f), dart_name(w, a, b, f), 0);
      // 1-link at corner w between this edge and the next one
      std::size_t x = face[(k + 2) % len];
      auto [c, d] = edge_of(w, x);
      graph.add_link(dart_name(w, a, b, f), dart_name(w, c, d, f), 1);
    }
  }

  for (const auto& [e, users] : edge_faces) {
    for (std::size_t v : {e.first, e.second}) {
      const std::string here = dart_name(v, e.first, e.second, users[0]);
      if (users.size() == 1) {
        graph.add_link(here, here, 2);
      } else {
        graph.add_link(here, dart_name(v, e.first, e.second, users[1]), 2);
      }
    }
  }

  std::vector<EmbeddingLayer> layers;
  layers.push_back(std::move(pos));
  return Gmap(std::move(graph), std::move(layers));
}

}  // namespace gmapkit
