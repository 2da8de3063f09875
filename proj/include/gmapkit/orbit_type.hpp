#pragma once

#include <span>
#include <string>
#include <vector>

#include "gmapkit/error.hpp"
#include "gmapkit/graph.hpp"

namespace gmapkit {

/// A strictly increasing set of dimensions, written <0,2>.
class OrbitType {
 public:
  OrbitType() = default;

  explicit OrbitType(std::vector<Dim> dims) : dims_(std::move(dims)) {
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (dims_[k] < 0) throw Error(ErrorCode::graph, "orbit type dimensions must be non-negative");
      if (k > 0 && dims_[k] <= dims_[k - 1]) {
        throw Error(ErrorCode::graph, "orbit type " + to_string() + " must be strictly increasing");
      }
    }
  }

  /// <0,...,n>
  static OrbitType full(int n) {
    std::vector<Dim> dims;
    for (Dim d = 0; d <= n; ++d) dims.push_back(d);
    return OrbitType(std::move(dims));
  }

  /// <0,...,n> without `excluded`; the orbit type of `excluded`-cells.
  static OrbitType cell(int n, Dim excluded) {
    std::vector<Dim> dims;
    for (Dim d = 0; d <= n; ++d) {
      if (d != excluded) dims.push_back(d);
    }
    return OrbitType(std::move(dims));
  }

  std::span<const Dim> dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  bool empty() const noexcept { return dims_.empty(); }

  bool contains(Dim d) const noexcept { return std::binary_search(dims_.begin(), dims_.end(), d); }

  // Position of `d`, or size() when absent.
  std::size_t position(Dim d) const noexcept {
    auto it = std::lower_bound(dims_.begin(), dims_.end(), d);
    return (it != dims_.end() && *it == d) ? static_cast<std::size_t>(it - dims_.begin()) : dims_.size();
  }

  bool fits(int n) const noexcept { return dims_.empty() || dims_.back() <= n; }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(dims_[k]);
    }
    return s + ">";
  }

  friend bool operator==(const OrbitType&, const OrbitType&) = default;

 private:
  std::vector<Dim> dims_;
};

}  // namespace gmapkit
