#pragma once

// OFF import and OBJ export.

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/mesh.hpp"

namespace gmapkit::io {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string w; in >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
    start = end + 1;
  }
  return out;
}

inline double off_number(const Line& l, std::size_t k) {
  const std::string& w = l.words[k];
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || !std::isfinite(x)) throw SyntaxError("'" + w + "' is not a number", l.number, 1);
  return x;
}

inline std::size_t off_index(const Line& l, std::size_t k) {
  const std::string& w = l.words[k];
  if (w.empty() || w.size() > 12 || w.find_first_not_of("0123456789") != std::string::npos) {
    throw SyntaxError("'" + w + "' is not a non-negative integer", l.number, 1);
  }
  return std::stoull(w);
}

}  // namespace detail

/// Parses an OFF polygon mesh. Trailing per-face values (colors) are ignored.
inline PolygonalMesh import_off(std::string_view text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty() || lines[0].words[0] != "OFF") {
    throw SyntaxError("expected the OFF header", lines.empty() ? 1 : lines[0].number, 1);
  }
  // Counts may follow the header on the same line.
  std::vector<std::string> counts(lines[0].words.begin() + 1, lines[0].words.end());
  std::size_t next = 1;
  std::size_t counts_line = lines[0].number;
  if (counts.empty()) {
    if (lines.size() < 2) throw SyntaxError("missing the counts line", lines[0].number + 1, 1);
    counts = lines[1].words;
    counts_line = lines[1].number;
    next = 2;
  }
  if (counts.size() < 2) throw SyntaxError("expected 'vertices faces [edges]'", counts_line, 1);
  detail::Line count_line{counts_line, counts};
  std::size_t nv = detail::off_index(count_line, 0);
  std::size_t nf = detail::off_index(count_line, 1);
  if (lines.size() < next + nv + nf) {
    throw SyntaxError("expected " + std::to_string(nv) + " vertices and " + std::to_string(nf) + " faces",
                      lines.back().number + 1, 1);
  }

  PolygonalMesh mesh;
  for (std::size_t k = 0; k < nv; ++k) {
    const auto& l = lines[next + k];
    if (l.words.size() != 3) throw SyntaxError("a vertex needs exactly 3 coordinates", l.number, 1);
    mesh.vertices.push_back({detail::off_number(l, 0), detail::off_number(l, 1), detail::off_number(l, 2)});
  }
  next += nv;
  for (std::size_t k = 0; k < nf; ++k) {
    const auto& l = lines[next + k];
    std::size_t len = detail::off_index(l, 0);
    if (len < 3) throw SyntaxError("a face needs at least 3 vertices", l.number, 1);
    if (l.words.size() < len + 1) throw SyntaxError("face lists fewer than " + std::to_string(len) + " indices", l.number, 1);
    std::vector<std::size_t> face;
    for (std::size_t i = 1; i <= len; ++i) {
      std::size_t v = detail::off_index(l, i);
      if (v >= nv) throw SyntaxError("vertex index " + std::to_string(v) + " out of range", l.number, 1);
      face.push_back(v);
    }
    mesh.faces.push_back(std::move(face));
  }
  if (lines.size() != next + nf) {
    throw SyntaxError("unexpected content after the last face", lines[next + nf].number, 1);
  }
  return mesh;
}

/// Emits one "v" line per vertex cell (ordered by least dart) and one "f" line
/// per face, walking alpha0/alpha1 from the face's least dart. Indices are
/// 1-based.
inline std::string export_obj(const Gmap& g, std::string_view pos_layer) {
  if (g.dimension() != 2) throw Error(ErrorCode::precondition, "OBJ export needs a 2-Gmap");
  const EmbeddingLayer& pos = g.layer(pos_layer);
  if (pos.type != ValueType::point3d || pos.domain != OrbitType({1, 2})) {
    throw Error(ErrorCode::embedding, "layer '" + pos.name + "' must be a point3d layer on <1,2>");
  }
  ValidationReport report = validate(g);
  if (!report.ok()) throw ValidationError(report.violations.front().code(), "cannot export an invalid Gmap", report);

  std::string out;
  std::map<Dart, std::size_t> vertex_of;
  auto vertices = cells(g, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& p = std::get<Point3>(pos.at(vertices[k].front()));
    out += "v " + format_number(p[0]) + " " + format_number(p[1]) + " " + format_number(p[2]) + "\n";
    for (const Dart& d : vertices[k]) vertex_of.emplace(d, k + 1);
  }
  for (const auto& face : cells(g, 2)) {
    const Dart& start = face.front();
    out += "f";
    Dart d = start;
    do {
      out += " " + std::to_string(vertex_of.at(d));
      d = alpha(g, alpha(g, d, 0), 1);
    } while (d != start);
    out += "\n";
  }
  return out;
}

}  // namespace gmapkit::io
