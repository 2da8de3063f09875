#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmapkit/gmapkit.hpp"

namespace gmapkit::test {

inline std::filesystem::path fixture_path(const std::string& name) { return std::filesystem::path(GMAPKIT_FIXTURES) / name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Gmap load_gmap(const std::string& name) { return io::parse_gmap(read_fixture(name)); }
inline RuleScheme load_rule(const std::string& name) { return io::parse_rule_scheme(read_fixture(name)); }
inline Gmap load_off(const std::string& name) { return unify(io::import_off(read_fixture(name))); }

// a -0- b with 2-loops: the <0,2>-orbit of a boundary edge.
inline LabeledGraph free_edge_orbit() {
  LabeledGraph g(2);
  g.add_node("a");
  g.add_node("b");
  g.add_link("a", "b", 0);
  g.add_link("a", "a", 2);
  g.add_link("b", "b", 2);
  return g;
}

// The <0,2>-orbit of an edge shared by two faces.
inline LabeledGraph sewn_edge_orbit() {
  LabeledGraph g(2);
  for (const char* d : {"a", "b", "c", "d"}) g.add_node(d);
  g.add_link("a", "b", 0);
  g.add_link("c", "d", 0);
  g.add_link("a", "c", 2);
  g.add_link("b", "d", 2);
  return g;
}

// Expected right-hand side of vertex insertion on a free edge, written out by
// hand: x -0- x', x' -1- y', y' -0- y, every dart 2-looped.
inline LabeledGraph vertex_insertion_free_rhs() {
  LabeledGraph g(2);
  for (const char* d : {"x", "x1", "y1", "y"}) {
    g.add_node(d);
    g.add_link(d, d, 2);
  }
  g.add_link("x", "x1", 0);
  g.add_link("x1", "y1", 1);
  g.add_link("y1", "y", 0);
  return g;
}

// Expected right-hand side of vertex insertion on a sewn edge.
inline LabeledGraph vertex_insertion_sewn_rhs() {
  LabeledGraph g(2);
  for (const char* d : {"a", "b", "c", "d", "a1", "b1", "c1", "d1"}) g.add_node(d);
  g.add_link("a", "a1", 0);
  g.add_link("b", "b1", 0);
  g.add_link("c", "c1", 0);
  g.add_link("d", "d1", 0);
  g.add_link("a1", "b1", 1);
  g.add_link("c1", "d1", 1);
  g.add_link("a", "c", 2);
  g.add_link("b", "d", 2);
  g.add_link("a1", "c1", 2);
  g.add_link("b1", "d1", 2);
  return g;
}

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a gmapkit::Error");
}

}  // namespace gmapkit::test
