#include <gtest/gtest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace gmapkit;

namespace {

std::size_t count_links(const Gmap& g, Dim dim, bool loops) {
  std::size_t n = 0;
  for (const Link& l : g.graph().links()) n += (l.dim == dim && l.is_loop() == loops);
  return n;
}

PolygonalMesh triangle() { return {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}}}; }

}  // namespace

TEST(Unify, Triangle) {
  Gmap g = unify(triangle());
  EXPECT_EQ(g.dart_count(), 6u);
  EXPECT_EQ(count_links(g, 0, false), 3u);
  EXPECT_EQ(count_links(g, 1, false), 3u);
  EXPECT_EQ(count_links(g, 2, true), 6u);
  EXPECT_EQ(g.graph().link_count(), 12u);
  EXPECT_EQ(cell_counts(g), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_TRUE(validate(g).ok());
}

TEST(Unify, DartsAreIncidentTriples) {
  Gmap g = unify(triangle());
  std::set<Dart> expected;
  const std::size_t face[3] = {0, 1, 2};
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t a = std::min(face[k], face[(k + 1) % 3]);
    std::size_t b = std::max(face[k], face[(k + 1) % 3]);
    expected.insert(dart_name(a, a, b, 0));
    expected.insert(dart_name(b, a, b, 0));
  }
  EXPECT_EQ(std::set<Dart>(g.darts().begin(), g.darts().end()), expected);
  EXPECT_EQ(alpha(g, "v0e0-1f0", 0), "v1e0-1f0");
  EXPECT_EQ(alpha(g, "v0e0-1f0", 1), "v0e0-2f0");
}

TEST(Unify, TwoTrianglesShareOneEdge) {
  Gmap g = test::load_off("two_triangles.off");
  EXPECT_EQ(g.dart_count(), 12u);
  EXPECT_EQ(count_links(g, 2, false), 2u);
  EXPECT_EQ(alpha(g, "v1e1-2f0", 2), "v1e1-2f1");
  EXPECT_EQ(alpha(g, "v2e1-2f0", 2), "v2e1-2f1");
  EXPECT_EQ(cell_counts(g), (std::vector<std::size_t>{4, 5, 2}));
  EXPECT_TRUE(validate(g).ok());
}

TEST(Unify, Square) {
  Gmap g = test::load_off("square.off");
  EXPECT_EQ(g.dart_count(), 8u);
  EXPECT_TRUE(validate(g).ok());
  EXPECT_EQ(g.layer("pos").domain, OrbitType({1, 2}));
  EXPECT_EQ(std::get<Point3>(g.layer("pos").at("v2e1-2f0")), (Point3{1, 1, 0}));
}

TEST(Unify, MatchesFixtureDocuments) {
  for (const char* name : {"triangle", "square", "two_triangles", "fan3", "cube"}) {
    Gmap g = test::load_off(std::string(name) + ".off");
    EXPECT_EQ(io::serialize_gmap(g), test::read_fixture(std::string(name) + ".gmap")) << name;
  }
}

TEST(Unify, RejectsMalformedMeshes) {
  PolygonalMesh short_face{{{0, 0, 0}, {1, 0, 0}}, {{0, 1}}};
  EXPECT_EQ(test::error_code_of([&] { unify(short_face); }), ErrorCode::mesh);

  PolygonalMesh bad_index = triangle();
  bad_index.faces[0][2] = 9;
  EXPECT_EQ(test::error_code_of([&] { unify(bad_index); }), ErrorCode::mesh);

  PolygonalMesh repeated = triangle();
  repeated.faces[0] = {0, 0, 1};
  EXPECT_EQ(test::error_code_of([&] { unify(repeated); }), ErrorCode::mesh);

  PolygonalMesh folded{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 0, 2}}};
  EXPECT_EQ(test::error_code_of([&] { unify(folded); }), ErrorCode::mesh);

  PolygonalMesh fin{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}}, {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}}};
  EXPECT_EQ(test::error_code_of([&] { unify(fin); }), ErrorCode::mesh);
}

TEST(Unify, PinchedVertexIsStillAGmap) {
  // Two triangles touching at vertex 0 only.
  PolygonalMesh bowtie{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {-1, 0, 0}, {-1, -1, 0}}, {{0, 1, 2}, {0, 3, 4}}};
  Gmap g = unify(bowtie);
  EXPECT_TRUE(validate(g).ok());
  EXPECT_EQ(cell_counts(g), (std::vector<std::size_t>{6, 6, 2}));
}

// Random manifold patches: triangulated grid cells, some dropped, some merged
// into quads.
TEST(Unify, RandomPatchesAlwaysValidate) {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    const std::size_t w = 1 + rng() % 4, h = 1 + rng() % 4;
    PolygonalMesh mesh;
    for (std::size_t y = 0; y <= h; ++y)
      for (std::size_t x = 0; x <= w; ++x) mesh.vertices.push_back({double(x), double(y), 0});
    auto id = [&](std::size_t x, std::size_t y) { return y * (w + 1) + x; };
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        switch (rng() % 4) {
          case 0: break;
          case 1: mesh.faces.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)}); break;
          default:
            mesh.faces.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1)});
            mesh.faces.push_back({id(x, y), id(x + 1, y + 1), id(x, y + 1)});
        }
      }
    }
    Gmap g = unify(mesh);
    ASSERT_TRUE(validate(g).ok()) << "round " << round;
    EXPECT_EQ(cells(g, 2).size(), mesh.faces.size());
    std::size_t corners = 0;
    for (const auto& f : mesh.faces) corners += f.size();
    EXPECT_EQ(g.dart_count(), 2 * corners);
    if (g.dart_count() <= oracle::kMaxDarts) {
      EXPECT_EQ(oracle::oracle_validate(g).size(), 0u);
    }
  }
}
