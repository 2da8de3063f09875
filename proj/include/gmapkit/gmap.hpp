#pragma once

// Generalized maps: an arc-labeled graph over darts whose links satisfy the
// incidence constraint (one i-link per dart and dimension) and the cycle
// constraint (ijij paths close whenever i + 2 <= j), plus embedding layers.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/orbit_type.hpp"

namespace gmapkit {

using Dart = NodeId;

class Gmap {
 public:
  explicit Gmap(int dimension = 2) : graph_(dimension) {}

  /// Checks the type-level invariants of every layer (domain fits the
  /// dimension, values are total over the darts and well-typed). The
  /// topological constraints are checked separately by validate().
  explicit Gmap(LabeledGraph graph, std::vector<EmbeddingLayer> layers = {}) : graph_(std::move(graph)) {
    for (auto& layer : layers) add_layer(std::move(layer));
  }

  int dimension() const noexcept { return graph_.ambient_dimension(); }
  const LabeledGraph& graph() const noexcept { return graph_; }
  const std::vector<Dart>& darts() const noexcept { return graph_.nodes(); }
  std::size_t dart_count() const noexcept { return graph_.node_count(); }
  bool has_dart(std::string_view d) const { return graph_.has_node(d); }

  /// Darts in lexicographic order; the canonical iteration order.
  std::vector<Dart> sorted_darts() const {
    std::vector<Dart> out = graph_.nodes();
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::map<std::string, EmbeddingLayer, std::less<>>& layers() const noexcept { return layers_; }
  bool has_layer(std::string_view name) const { return layers_.find(name) != layers_.end(); }

  const EmbeddingLayer& layer(std::string_view name) const {
    auto it = layers_.find(name);
    if (it == layers_.end()) throw Error(ErrorCode::embedding, "unknown embedding layer '" + std::string(name) + "'");
    return it->second;
  }

  void add_layer(EmbeddingLayer layer) {
    if (layer.name.empty()) throw Error(ErrorCode::embedding, "embedding layers need a name");
    if (layers_.contains(layer.name)) throw Error(ErrorCode::embedding, "duplicate embedding layer '" + layer.name + "'");
    if (!layer.domain.fits(dimension())) {
      throw Error(ErrorCode::embedding, "layer '" + layer.name + "' domain " + layer.domain.to_string() +
                                            " exceeds dimension " + std::to_string(dimension()));
    }
    if (layer.values.size() != graph_.node_count()) {
      throw Error(ErrorCode::embedding, "layer '" + layer.name + "' must give exactly one value per dart");
    }
    for (const auto& [dart, value] : layer.values) {
      if (!graph_.has_node(dart)) {
        throw Error(ErrorCode::unknown_dart, "layer '" + layer.name + "' names unknown dart '" + dart + "'");
      }
      if (type_of(value) != layer.type) {
        throw Error(ErrorCode::embedding, "layer '" + layer.name + "' value for '" + dart + "' is not a " +
                                              std::string(type_name(layer.type)));
      }
    }
    std::string key = layer.name;
    layers_.emplace(std::move(key), std::move(layer));
  }

 private:
  LabeledGraph graph_;
  std::map<std::string, EmbeddingLayer, std::less<>> layers_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { incidence, cycle, embedding };

struct Violation {
  ViolationKind kind = ViolationKind::incidence;
  Dart dart;                  // incidence dart, cycle start, or least dart of the offending orbit
  Dim dim = -1;               // incidence
  std::size_t count = 0;      // incidence: number of dim-links found at dart
  Dim i = -1;                 // cycle
  Dim j = -1;                 // cycle
  std::vector<Dart> witness;  // cycle: u0..u4; embedding: sorted orbit darts
  std::string layer;          // embedding
  Dart other;                 // embedding: least dart disagreeing with `dart`

  ErrorCode code() const noexcept {
    switch (kind) {
      case ViolationKind::incidence: return ErrorCode::incidence;
      case ViolationKind::cycle: return ErrorCode::cycle;
      case ViolationKind::embedding: return ErrorCode::embedding;
    }
    return ErrorCode::incidence;
  }

  std::string describe() const {
    std::ostringstream os;
    os << code_name(code());
    switch (kind) {
      case ViolationKind::incidence:
        os << " dart=" << dart << " dim=" << dim << " links=" << count;
        break;
      case ViolationKind::cycle:
        os << " dims=" << i << "," << j << " path=";
        for (std::size_t k = 0; k < witness.size(); ++k) {
          if (k) os << '-' << (k % 2 ? i : j) << '-';
          os << witness[k];
        }
        break;
      case ViolationKind::embedding:
        os << " layer=" << layer << " orbit=" << dart << " darts=" << dart << "," << other;
        break;
    }
    return os.str();
  }

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t size() const noexcept { return violations.size(); }

  std::size_t count(ViolationKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
  }

  std::string to_string() const {
    std::string s;
    for (const auto& v : violations) s += v.describe() + "\n";
    return s;
  }
};

/// Thrown when an operation requires a valid Gmap and receives one that is not.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, const std::string& message, ValidationReport report)
      : Error(code, with_report(message, report)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string with_report(const std::string& message, const ValidationReport& report) {
    std::string text = report.to_string();
    if (!text.empty()) text.pop_back();
    return text.empty() ? message : message + "\n" + text;
  }

  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Traversal

inline void require_dart(const Gmap& g, std::string_view d) {
  if (!g.has_dart(d)) throw Error(ErrorCode::unknown_dart, "unknown dart '" + std::string(d) + "'");
}

/// The dart linked to `d` by its unique i-link; `d` itself for an i-loop.
inline const Dart& alpha(const Gmap& g, std::string_view d, Dim i) {
  require_dart(g, d);
  if (i < 0 || i > g.dimension()) {
    throw Error(ErrorCode::graph, "dimension " + std::to_string(i) + " outside [0," + std::to_string(g.dimension()) + "]");
  }
  const Link* found = nullptr;
  std::size_t n = 0;
  for (LinkId id : g.graph().incident_ids(d)) {
    const Link& l = g.graph().link(id);
    if (l.dim == i) {
      found = &l;
      ++n;
    }
  }
  if (n != 1) {
    throw Error(ErrorCode::incidence,
                "dart '" + std::string(d) + "' has " + std::to_string(n) + " " + std::to_string(i) + "-links");
  }
  return found->other(d);
}

/// Darts of the <o>-orbit of d, in BFS order (dimensions ascending).
inline std::vector<Dart> orbit_darts(const Gmap& g, const OrbitType& o, std::string_view d) {
  require_dart(g, d);
  std::vector<Dart> out{Dart(d)};
  std::unordered_set<Dart> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    // out may reallocate below; copy the current name first
    const Dart x = out[head];
    for (Dim dim : o.dims()) {
      for (LinkId id : g.graph().incident_ids(x)) {
        const Link& l = g.graph().link(id);
        if (l.dim != dim) continue;
        const Dart& y = l.other(x);
        if (seen.insert(y).second) out.push_back(y);
      }
    }
  }
  return out;
}

/// The sub-Gmap G<o>(d): the orbit darts and every link of g with a
/// dimension in o between them.
inline LabeledGraph orbit(const Gmap& g, const OrbitType& o, std::string_view d) {
  if (!o.fits(g.dimension())) {
    throw Error(ErrorCode::graph, "orbit type " + o.to_string() + " exceeds dimension " + std::to_string(g.dimension()));
  }
  LabeledGraph out(g.dimension());
  std::vector<LinkId> ids;
  for (const Dart& x : orbit_darts(g, o, d)) {
    out.add_node(x);
    for (LinkId id : g.graph().incident_ids(x)) {
      if (o.contains(g.graph().link(id).dim)) ids.push_back(id);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (LinkId id : ids) {
    const Link& l = g.graph().link(id);
    out.add_link(l.first, l.second, l.dim);
  }
  return out;
}

/// Partition of the darts into orbits of type `o`. Each orbit is sorted and
/// orbits are ordered by their least dart.
inline std::vector<std::vector<Dart>> orbits(const Gmap& g, const OrbitType& o) {
  std::vector<std::vector<Dart>> out;
  std::unordered_set<Dart> seen;
  for (const Dart& d : g.sorted_darts()) {
    if (seen.contains(d)) continue;
    auto darts = orbit_darts(g, o, d);
    std::sort(darts.begin(), darts.end());
    seen.insert(darts.begin(), darts.end());
    out.push_back(std::move(darts));
  }
  return out;
}

/// The i-cells of g: orbits of type <0..n> without i.
inline std::vector<std::vector<Dart>> cells(const Gmap& g, int i) {
  if (i < 0 || i > g.dimension()) {
    throw Error(ErrorCode::graph, "cell dimension " + std::to_string(i) + " outside [0," + std::to_string(g.dimension()) + "]");
  }
  return orbits(g, OrbitType::cell(g.dimension(), i));
}

/// Number of i-cells for every i in 0..n.
inline std::vector<std::size_t> cell_counts(const Gmap& g) {
  std::vector<std::size_t> counts;
  for (int i = 0; i <= g.dimension(); ++i) counts.push_back(cells(g, i).size());
  return counts;
}

// ---------------------------------------------------------------------------
// Constraint checks

namespace detail {

inline void check_layer(const Gmap& g, const EmbeddingLayer& layer, std::vector<Violation>& out) {
  for (const auto& orbit_set : orbits(g, layer.domain)) {
    const EmbeddingValue& ref = layer.at(orbit_set.front());
    for (const Dart& d : orbit_set) {
      if (!embedding_equal(ref, layer.at(d))) {
        Violation v;
        v.kind = ViolationKind::embedding;
        v.dart = orbit_set.front();
        v.other = d;
        v.layer = layer.name;
        v.witness = orbit_set;
        out.push_back(std::move(v));
        break;
      }
    }
  }
}

// Ends reachable from x through one dim-link; a loop stays on x.
inline std::vector<Dart> steps(const Gmap& g, const Dart& x, Dim dim) {
  std::vector<Dart> out;
  for (LinkId id : g.graph().incident_ids(x)) {
    const Link& l = g.graph().link(id);
    if (l.dim == dim) out.push_back(l.other(x));
  }
  return out;
}

}  // namespace detail

/// Embedding-condition violations of one layer.
inline ValidationReport check_embedding(const Gmap& g, std::string_view layer_name) {
  ValidationReport report;
  detail::check_layer(g, g.layer(layer_name), report.violations);
  return report;
}

/// Exhaustive check of both topological constraints and of every layer's
/// embedding condition. Violations are sorted: incidence, cycle, embedding.
inline ValidationReport validate(const Gmap& g) {
  ValidationReport report;
  const int n = g.dimension();
  const auto darts = g.sorted_darts();

  for (const Dart& d : darts) {
    std::vector<std::size_t> per_dim(static_cast<std::size_t>(n) + 1, 0);
    for (LinkId id : g.graph().incident_ids(d)) ++per_dim[static_cast<std::size_t>(g.graph().link(id).dim)];
    for (Dim i = 0; i <= n; ++i) {
      if (per_dim[static_cast<std::size_t>(i)] != 1) {
        Violation v;
        v.kind = ViolationKind::incidence;
        v.dart = d;
        v.dim = i;
        v.count = per_dim[static_cast<std::size_t>(i)];
        report.violations.push_back(std::move(v));
      }
    }
  }

  std::vector<Violation> cycles;
  for (Dim i = 0; i <= n; ++i) {
    for (Dim j = i + 2; j <= n; ++j) {
      for (const Dart& u : darts) {
        std::set<std::vector<Dart>> open;
        for (const Dart& x1 : detail::steps(g, u, i))
          for (const Dart& x2 : detail::steps(g, x1, j))
            for (const Dart& x3 : detail::steps(g, x2, i))
              for (const Dart& x4 : detail::steps(g, x3, j))
                if (x4 != u) open.insert({u, x1, x2, x3, x4});
        for (const auto& path : open) {
          Violation v;
          v.kind = ViolationKind::cycle;
          v.dart = u;
          v.i = i;
          v.j = j;
          v.witness = path;
          cycles.push_back(std::move(v));
        }
      }
    }
  }
  std::sort(cycles.begin(), cycles.end());
  report.violations.insert(report.violations.end(), cycles.begin(), cycles.end());

  for (const auto& [name, layer] : g.layers()) detail::check_layer(g, layer, report.violations);
  return report;
}

}  // namespace gmapkit
