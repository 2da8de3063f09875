#include <gtest/gtest.h>

#include <set>

#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace gmapkit;
using test::load_gmap;

namespace {

std::set<Dart> as_set(const std::vector<Dart>& v) { return {v.begin(), v.end()}; }

Gmap free_edge_with_one_loops() {
  LabeledGraph g = test::free_edge_orbit();
  g.add_link("a", "a", 1);
  g.add_link("b", "b", 1);
  return Gmap(std::move(g));
}

}  // namespace

TEST(OrbitType, ConstructionAndPrinting) {
  EXPECT_EQ(OrbitType({0, 2}).to_string(), "<0,2>");
  EXPECT_EQ(OrbitType().to_string(), "<>");
  EXPECT_EQ(OrbitType::cell(2, 0), OrbitType({1, 2}));
  EXPECT_EQ(OrbitType::cell(2, 2), OrbitType({0, 1}));
  EXPECT_EQ(OrbitType::full(3).size(), 4u);
  EXPECT_EQ(OrbitType({0, 2}).position(2), 1u);
  EXPECT_TRUE(OrbitType({1, 3}).fits(3));
  EXPECT_FALSE(OrbitType({1, 3}).fits(2));
  EXPECT_THROW(OrbitType({2, 0}), Error);
  EXPECT_THROW(OrbitType({1, 1}), Error);
  EXPECT_THROW(OrbitType({-1}), Error);
}

TEST(Alpha, FreeEdge) {
  Gmap g = free_edge_with_one_loops();
  EXPECT_EQ(alpha(g, "a", 0), "b");
  EXPECT_EQ(alpha(g, "a", 2), "a");
}

TEST(Alpha, SewnEdge) {
  LabeledGraph h = test::sewn_edge_orbit();
  for (const char* d : {"a", "b", "c", "d"}) h.add_link(d, d, 1);
  Gmap g(std::move(h));
  EXPECT_EQ(alpha(g, "b", 2), "d");
}

TEST(Alpha, Errors) {
  Gmap g(test::free_edge_orbit());
  EXPECT_EQ(test::error_code_of([&] { alpha(g, "a", 1); }), ErrorCode::incidence);
  EXPECT_EQ(test::error_code_of([&] { alpha(g, "z", 0); }), ErrorCode::unknown_dart);
  EXPECT_THROW(alpha(g, "a", 3), Error);
}

TEST(Orbit, SquareFace) {
  Gmap g = load_gmap("square.gmap");
  for (const Dart& d : g.darts()) {
    LabeledGraph face = orbit(g, OrbitType({0, 1}), d);
    EXPECT_EQ(face.node_count(), 8u);
    EXPECT_EQ(face.link_count(), 8u);
    EXPECT_EQ(face.nodes().front(), d);
    EXPECT_EQ(as_set(face.nodes()), oracle::oracle_orbit(g, OrbitType({0, 1}), d));
  }
}

TEST(Orbit, EmptyType) {
  Gmap g = load_gmap("square.gmap");
  LabeledGraph o = orbit(g, OrbitType(), "v1e1-2f0");
  EXPECT_EQ(o.nodes(), std::vector<Dart>{"v1e1-2f0"});
  EXPECT_EQ(o.link_count(), 0u);
}

TEST(Orbit, VertexSharedByThreeEdges) {
  Gmap g = load_gmap("fan3.gmap");
  // Vertex 0 is the interior vertex of the fan: 3 edges, 3 faces.
  auto vertex = orbit_darts(g, OrbitType({1, 2}), "v0e0-1f0");
  EXPECT_EQ(vertex.size(), 6u);
  EXPECT_EQ(as_set(vertex), oracle::oracle_orbit(g, OrbitType({1, 2}), "v0e0-1f0"));
  for (const Dart& d : vertex) EXPECT_EQ(d.substr(0, 2), "v0");
  EXPECT_EQ(orbit(g, OrbitType({1, 2}), "v0e0-1f0").link_count(), 6u);
}

TEST(Orbit, BreadthFirstOrderDimsAscending) {
  Gmap g = load_gmap("square.gmap");
  auto o = orbit_darts(g, OrbitType({0, 1}), "v0e0-1f0");
  ASSERT_GE(o.size(), 3u);
  EXPECT_EQ(o[1], "v1e0-1f0");  // via 0 first
  EXPECT_EQ(o[2], "v0e0-3f0");  // then 1
}

TEST(Orbit, Errors) {
  Gmap g = load_gmap("square.gmap");
  EXPECT_EQ(test::error_code_of([&] { orbit(g, OrbitType({0}), "nope"); }), ErrorCode::unknown_dart);
  EXPECT_THROW(orbit(g, OrbitType({0, 3}), "v0e0-1f0"), Error);
}

TEST(Cells, Square) {
  Gmap g = load_gmap("square.gmap");
  EXPECT_EQ(cell_counts(g), (std::vector<std::size_t>{4, 4, 1}));
  std::set<Dart> covered;
  for (int i = 0; i <= 2; ++i) {
    covered.clear();
    std::size_t total = 0;
    for (const auto& c : cells(g, i)) {
      total += c.size();
      covered.insert(c.begin(), c.end());
    }
    EXPECT_EQ(total, 8u);
    EXPECT_EQ(covered.size(), 8u);
  }
  EXPECT_THROW(cells(g, 3), Error);
  EXPECT_THROW(cells(g, -1), Error);
}

TEST(Cells, Segment) {
  Gmap g = load_gmap("segment.gmap");
  EXPECT_EQ(g.dimension(), 1);
  EXPECT_EQ(cell_counts(g), (std::vector<std::size_t>{2, 1}));
}

TEST(Cells, AfterVertexInsertion) {
  EXPECT_EQ(cell_counts(load_gmap("square_vertex_inserted.gmap")), (std::vector<std::size_t>{5, 5, 1}));
}

TEST(Cells, ClosedCube) {
  EXPECT_EQ(cell_counts(load_gmap("cube.gmap")), (std::vector<std::size_t>{8, 12, 6}));
}

TEST(CheckEmbedding, SquarePositions) {
  Gmap g = load_gmap("square.gmap");
  EXPECT_TRUE(check_embedding(g, "pos").ok());
}

TEST(CheckEmbedding, PerturbedPosition) {
  Gmap g = load_gmap("square_bad_pos.gmap");
  ValidationReport r = check_embedding(g, "pos");
  ASSERT_EQ(r.size(), 1u);
  const Violation& v = r.violations[0];
  EXPECT_EQ(v.code(), ErrorCode::embedding);
  EXPECT_EQ(v.layer, "pos");
  EXPECT_EQ(v.witness, (std::vector<Dart>{"v2e1-2f0", "v2e2-3f0"}));
  EXPECT_EQ(v.other, "v2e2-3f0");
  EXPECT_EQ(validate(g).violations, r.violations);
}

TEST(CheckEmbedding, FaceColor) {
  Gmap g = load_gmap("square_colored.gmap");
  EXPECT_TRUE(check_embedding(g, "col").ok());
  EXPECT_TRUE(check_embedding(g, "label").ok());
  EXPECT_EQ(test::error_code_of([&] { check_embedding(g, "nope"); }), ErrorCode::embedding);
}

TEST(CheckEmbedding, PointToleranceButExactColors) {
  auto with_layer = [](ValueType type, EmbeddingValue a, EmbeddingValue b) {
    Gmap g = free_edge_with_one_loops();
    EmbeddingLayer layer{"x", OrbitType({0}), type, {}};
    layer.values.emplace("a", a);
    layer.values.emplace("b", b);
    g.add_layer(layer);
    return check_embedding(g, "x").ok();
  };
  EXPECT_TRUE(with_layer(ValueType::point3d, Point3{1, 2, 3}, Point3{1 + 5e-10, 2, 3}));
  EXPECT_FALSE(with_layer(ValueType::point3d, Point3{1, 2, 3}, Point3{1 + 2e-9, 2, 3}));
  EXPECT_TRUE(with_layer(ValueType::point2d, Point2{0, 0}, Point2{0, -1e-9}));
  EXPECT_TRUE(with_layer(ValueType::scalar, 0.5, 0.5 + 1e-10));
  EXPECT_FALSE(with_layer(ValueType::color_rgb, ColorRGB{1, 0, 0}, ColorRGB{1, 0, 1e-12}));
  EXPECT_FALSE(with_layer(ValueType::opaque_string, std::string("p"), std::string("q")));
}

TEST(Gmap, LayerInvariants) {
  Gmap g = free_edge_with_one_loops();
  EmbeddingLayer partial{"x", OrbitType({0}), ValueType::scalar, {}};
  partial.values.emplace("a", 1.0);
  EXPECT_THROW(g.add_layer(partial), Error);
  EmbeddingLayer wrong_type{"x", OrbitType({0}), ValueType::scalar, {}};
  wrong_type.values.emplace("a", 1.0);
  wrong_type.values.emplace("b", std::string("s"));
  EXPECT_THROW(g.add_layer(wrong_type), Error);
  EmbeddingLayer too_high{"x", OrbitType({3}), ValueType::scalar, {}};
  too_high.values.emplace("a", 1.0);
  too_high.values.emplace("b", 1.0);
  EXPECT_THROW(g.add_layer(too_high), Error);
  EmbeddingLayer ok{"x", OrbitType({0}), ValueType::scalar, {}};
  ok.values.emplace("a", 1.0);
  ok.values.emplace("b", 1.0);
  g.add_layer(ok);
  EXPECT_THROW(g.add_layer(ok), Error);
}

TEST(Validate, ValidFixtures) {
  for (const char* f : {"square.gmap", "triangle.gmap", "two_triangles.gmap", "fan3.gmap", "cube.gmap", "segment.gmap",
                        "square_colored.gmap", "square_vertex_inserted.gmap", "two_triangles_vertex_inserted.gmap"}) {
    Gmap g = load_gmap(f);
    EXPECT_TRUE(validate(g).ok()) << f << "\n" << validate(g).to_string();
  }
}

TEST(Validate, BrokenIncidence) {
  ValidationReport r = validate(load_gmap("broken_incidence.gmap"));
  EXPECT_EQ(r.size(), 4u);
  EXPECT_EQ(r.count(ViolationKind::incidence), 4u);
  EXPECT_EQ(r.violations[0].describe(), "E_INCIDENCE dart=a dim=1 links=0");
}

TEST(Validate, ThreeFacesOnAnEdge) {
  ValidationReport r = validate(load_gmap("three_faces_edge.gmap"));
  EXPECT_EQ(r.count(ViolationKind::incidence), 6u);
  for (const auto& v : r.violations) {
    if (v.kind == ViolationKind::incidence) {
      EXPECT_EQ(v.dim, 2);
      EXPECT_EQ(v.count, 2u);
    }
  }
}

TEST(Validate, Open02Path) {
  ValidationReport r = validate(load_gmap("open_02_path.gmap"));
  EXPECT_EQ(r.count(ViolationKind::incidence), 0u);
  ASSERT_EQ(r.count(ViolationKind::cycle), 4u);
  EXPECT_EQ(r.violations[0].describe(), "E_CYCLE dims=0,2 path=a-0-b-2-c-0-d-2-d");
}

TEST(Validate, LoopsCloseCycles) {
  // A free edge with 1-loops: walking 0,2,0,2 returns through the 2-loops.
  EXPECT_TRUE(validate(free_edge_with_one_loops()).ok());
}

TEST(Validate, OrbitGraphsAreNotGmaps) {
  ValidationReport r = validate(Gmap(test::free_edge_orbit()));
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.violations[1].dart, "b");
}

TEST(Validate, MatchesOracleOnFixtures) {
  for (const char* f : {"square.gmap", "broken_incidence.gmap", "three_faces_edge.gmap", "open_02_path.gmap",
                        "square_bad_pos.gmap", "free_edge_orbit.gmap", "sewn_edge_orbit.gmap", "fan3.gmap"}) {
    Gmap g = load_gmap(f);
    EXPECT_EQ(validate(g).violations, oracle::oracle_validate(g).violations) << f;
  }
}

TEST(Properties, InvolutionAndPartitionOnRandomGmaps) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Gmap g = oracle::random_valid_gmap(seed, static_cast<int>(seed % 4), 24);
    ASSERT_TRUE(validate(g).ok());
    for (const Dart& d : g.darts()) {
      for (Dim i = 0; i <= g.dimension(); ++i) EXPECT_EQ(alpha(g, alpha(g, d, i), i), d);
    }
    std::mt19937_64 rng(seed);
    OrbitType o = oracle::random_orbit_type(rng, g.dimension());
    std::set<Dart> covered;
    for (const auto& orb : orbits(g, o)) {
      for (const Dart& x : orb) {
        EXPECT_TRUE(covered.insert(x).second);
        EXPECT_EQ(as_set(orbit_darts(g, o, x)), as_set(orb));
      }
      EXPECT_EQ(as_set(orb), oracle::oracle_orbit(g, o, orb.front()));
    }
    EXPECT_EQ(covered.size(), g.dart_count());
  }
}

TEST(Properties, ZeroTwoClosureOnSurfaces) {
  for (const char* f : {"square.gmap", "two_triangles.gmap", "fan3.gmap", "cube.gmap"}) {
    Gmap g = load_gmap(f);
    for (const Dart& d : g.darts()) EXPECT_EQ(alpha(g, alpha(g, alpha(g, alpha(g, d, 0), 2), 0), 2), d);
  }
}
