#pragma once

// Embeddings attach data (positions, colors, ...) to the orbits of a fixed
// type. Each dart stores a value; darts of one orbit must agree.

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gmapkit/error.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/orbit_type.hpp"

namespace gmapkit {

enum class ValueType { point2d, point3d, color_rgb, scalar, opaque_string };

using Point2 = std::array<double, 2>;
using Point3 = std::array<double, 3>;

struct ColorRGB {
  double r = 0;
  double g = 0;
  double b = 0;
  friend bool operator==(const ColorRGB&, const ColorRGB&) = default;
};

using EmbeddingValue = std::variant<Point2, Point3, ColorRGB, double, std::string>;

inline constexpr double kPointTolerance = 1e-9;

inline std::string_view type_name(ValueType t) noexcept {
  switch (t) {
    case ValueType::point2d: return "point2d";
    case ValueType::point3d: return "point3d";
    case ValueType::color_rgb: return "color_rgb";
    case ValueType::scalar: return "scalar";
    case ValueType::opaque_string: return "string";
  }
  return "?";
}

inline std::optional<ValueType> parse_value_type(std::string_view s) noexcept {
  for (ValueType t : {ValueType::point2d, ValueType::point3d, ValueType::color_rgb, ValueType::scalar,
                      ValueType::opaque_string}) {
    if (type_name(t) == s) return t;
  }
  return std::nullopt;
}

inline ValueType type_of(const EmbeddingValue& v) noexcept {
  switch (v.index()) {
    case 0: return ValueType::point2d;
    case 1: return ValueType::point3d;
    case 2: return ValueType::color_rgb;
    case 3: return ValueType::scalar;
    default: return ValueType::opaque_string;
  }
}

/// Equality used by the embedding condition: exact for colors and strings,
/// componentwise within kPointTolerance for points and scalars.
inline bool embedding_equal(const EmbeddingValue& a, const EmbeddingValue& b) {
  if (a.index() != b.index()) return false;
  auto close = [](double x, double y) { return std::fabs(x - y) <= kPointTolerance; };
  if (auto* p = std::get_if<Point2>(&a)) {
    const auto& q = std::get<Point2>(b);
    return close((*p)[0], q[0]) && close((*p)[1], q[1]);
  }
  if (auto* p = std::get_if<Point3>(&a)) {
    const auto& q = std::get<Point3>(b);
    return close((*p)[0], q[0]) && close((*p)[1], q[1]) && close((*p)[2], q[2]);
  }
  if (auto* s = std::get_if<double>(&a)) return close(*s, std::get<double>(b));
  return a == b;
}

/// Shortest decimal text that parses back to the same double.
inline std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string to_string(const EmbeddingValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Point2>) {
          return "(" + format_number(x[0]) + "," + format_number(x[1]) + ")";
        } else if constexpr (std::is_same_v<T, Point3>) {
          return "(" + format_number(x[0]) + "," + format_number(x[1]) + "," + format_number(x[2]) + ")";
        } else if constexpr (std::is_same_v<T, ColorRGB>) {
          return "rgb(" + format_number(x.r) + "," + format_number(x.g) + "," + format_number(x.b) + ")";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(x);
        } else {
          return "\"" + x + "\"";
        }
      },
      v);
}

/// Component-wise mean of two values of the same numeric type.
inline EmbeddingValue midpoint(const EmbeddingValue& a, const EmbeddingValue& b) {
  if (a.index() != b.index()) throw Error(ErrorCode::directive, "midpoint of values with different types");
  return std::visit(
      [&](const auto& x) -> EmbeddingValue {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Point2> || std::is_same_v<T, Point3>) {
          T m{};
          for (std::size_t k = 0; k < m.size(); ++k) m[k] = (x[k] + y[k]) / 2;
          return m;
        } else if constexpr (std::is_same_v<T, ColorRGB>) {
          return ColorRGB{(x.r + y.r) / 2, (x.g + y.g) / 2, (x.b + y.b) / 2};
        } else if constexpr (std::is_same_v<T, double>) {
          return (x + y) / 2;
        } else {
          throw Error(ErrorCode::directive, "midpoint is undefined for string values");
        }
      },
      a);
}

/// One embedding function ebd : <o_ebd> -> type, stored per dart.
struct EmbeddingLayer {
  std::string name;
  OrbitType domain;
  ValueType type = ValueType::point3d;
  std::map<NodeId, EmbeddingValue, std::less<>> values;

  const EmbeddingValue& at(std::string_view dart) const {
    auto it = values.find(dart);
    if (it == values.end()) {
      throw Error(ErrorCode::embedding, "layer '" + name + "' has no value for dart '" + std::string(dart) + "'");
    }
    return it->second;
  }
};

}  // namespace gmapkit
