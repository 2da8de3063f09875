#pragma once

// Relabeling functions: partial, dimension-injective maps from dimensions to
// dimensions or the removing symbol '_'. Applied to a graph they rename link
// labels and drop the links whose label maps to '_'.

#include <optional>
#include <string>
#include <vector>

#include "gmapkit/error.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/orbit_type.hpp"

namespace gmapkit {

/// A sequence over dimensions and the removing symbol, e.g. <_,2>.
class GeneralizedOrbitType {
 public:
  static constexpr Dim kRemove = -1;

  GeneralizedOrbitType() = default;

  explicit GeneralizedOrbitType(std::vector<Dim> entries) : entries_(std::move(entries)) {
    std::vector<Dim> seen;
    for (Dim d : entries_) {
      if (d == kRemove) continue;
      if (d < 0) throw Error(ErrorCode::relabel, "invalid dimension " + std::to_string(d));
      if (std::find(seen.begin(), seen.end(), d) != seen.end()) {
        throw Error(ErrorCode::relabel, "dimension " + std::to_string(d) + " appears twice in " + to_string());
      }
      seen.push_back(d);
    }
  }

  explicit GeneralizedOrbitType(const OrbitType& o) : entries_(o.dims().begin(), o.dims().end()) {}

  std::span<const Dim> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Dim operator[](std::size_t k) const { return entries_.at(k); }

  bool has_remove() const noexcept { return std::find(entries_.begin(), entries_.end(), kRemove) != entries_.end(); }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ',';
      s += entries_[k] == kRemove ? std::string("_") : std::to_string(entries_[k]);
    }
    return s + ">";
  }

  friend bool operator==(const GeneralizedOrbitType&, const GeneralizedOrbitType&) = default;

 private:
  std::vector<Dim> entries_;
};

/// Positional map source[k] -> target[k].
class RelabelingFunction {
 public:
  RelabelingFunction(OrbitType source, GeneralizedOrbitType target)
      : source_(std::move(source)), target_(std::move(target)) {
    if (source_.size() != target_.size()) {
      throw Error(ErrorCode::relabel, "cannot relabel " + source_.to_string() + " to " + target_.to_string() +
                                          ": lengths differ");
    }
  }

  const OrbitType& source() const noexcept { return source_; }
  const GeneralizedOrbitType& target() const noexcept { return target_; }

  /// Image of `d`; nullopt for the removing symbol. Throws for dimensions
  /// outside the source.
  std::optional<Dim> operator()(Dim d) const {
    std::size_t k = source_.position(d);
    if (k == source_.size()) {
      throw Error(ErrorCode::relabel, "dimension " + std::to_string(d) + " is not in the domain " + source_.to_string());
    }
    Dim t = target_[k];
    if (t == GeneralizedOrbitType::kRemove) return std::nullopt;
    return t;
  }

  bool removes_anything() const noexcept { return target_.has_remove(); }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < source_.size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(source_.dims()[k]) + "->" +
           (target_[k] == GeneralizedOrbitType::kRemove ? std::string("_") : std::to_string(target_[k]));
    }
    return s + "}";
  }

 private:
  OrbitType source_;
  GeneralizedOrbitType target_;
};

/// Reconstructs the relabeling function from a reference orbit type and its
/// relabeled version, e.g. <0,2> and <1,2> give {0->1, 2->2}.
inline RelabelingFunction relabel_from_types(const OrbitType& source, const GeneralizedOrbitType& target) {
  return RelabelingFunction(source, target);
}

inline RelabelingFunction relabel_from_types(const GeneralizedOrbitType& source, const GeneralizedOrbitType& target) {
  if (source.has_remove()) {
    throw Error(ErrorCode::relabel, "the domain " + source.to_string() + " contains the removing symbol");
  }
  std::vector<Dim> dims(source.entries().begin(), source.entries().end());
  if (!std::is_sorted(dims.begin(), dims.end())) {
    throw Error(ErrorCode::relabel, "the domain " + source.to_string() + " must be increasing");
  }
  return RelabelingFunction(OrbitType(std::move(dims)), target);
}

/// The composition `second` after `first`. `first` must not remove anything
/// and its image must be the domain of `second`.
inline RelabelingFunction compose(const RelabelingFunction& second, const RelabelingFunction& first) {
  if (first.removes_anything()) throw Error(ErrorCode::relabel, "cannot compose after a removing relabeling");
  std::vector<Dim> out;
  for (Dim d : first.target().entries()) {
    auto t = second(d);
    out.push_back(t ? *t : GeneralizedOrbitType::kRemove);
  }
  return RelabelingFunction(first.source(), GeneralizedOrbitType(std::move(out)));
}

/// f(H): same nodes; links labeled with '_' are dropped, others relabeled.
inline LabeledGraph apply_relabeling(const RelabelingFunction& f, const LabeledGraph& h) {
  int ambient = h.ambient_dimension();
  for (Dim d : f.target().entries()) ambient = std::max(ambient, d);
  LabeledGraph out(ambient);
  for (const NodeId& n : h.nodes()) out.add_node(n);
  for (const Link& l : h.links()) {
    if (auto d = f(l.dim)) out.add_link(l.first, l.second, *d);
  }
  return out;
}

}  // namespace gmapkit
