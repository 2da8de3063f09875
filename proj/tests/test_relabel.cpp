#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace gmapkit;

namespace {
constexpr Dim R = GeneralizedOrbitType::kRemove;
}

TEST(GeneralizedOrbitType, PrintsRemoveSymbol) {
  GeneralizedOrbitType t({R, 2});
  EXPECT_EQ(t.to_string(), "<_,2>");
  EXPECT_TRUE(t.has_remove());
  EXPECT_FALSE(GeneralizedOrbitType(OrbitType({0, 2})).has_remove());
  EXPECT_NO_THROW(GeneralizedOrbitType({R, R}));
  EXPECT_EQ(test::error_code_of([] { GeneralizedOrbitType({1, 1}); }), ErrorCode::relabel);
  EXPECT_THROW(GeneralizedOrbitType({-3}), Error);
}

TEST(RelabelFromTypes, VertexInsertionDecorations) {
  RelabelingFunction f = relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({1, 2}));
  EXPECT_EQ(f(0), 1);
  EXPECT_EQ(f(2), 2);
  EXPECT_EQ(f.to_string(), "{0->1, 2->2}");

  RelabelingFunction r = relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({R, 2}));
  EXPECT_EQ(r(0), std::nullopt);
  EXPECT_EQ(r(2), 2);
  EXPECT_TRUE(r.removes_anything());
  EXPECT_THROW(r(1), Error);
}

TEST(RelabelFromTypes, Errors) {
  EXPECT_EQ(test::error_code_of([] { relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({1})); }),
            ErrorCode::relabel);
  EXPECT_THROW(relabel_from_types(GeneralizedOrbitType({R, 2}), GeneralizedOrbitType({0, 1})), Error);
  EXPECT_THROW(relabel_from_types(GeneralizedOrbitType({2, 0}), GeneralizedOrbitType({0, 1})), Error);
  EXPECT_NO_THROW(relabel_from_types(GeneralizedOrbitType({0, 2}), GeneralizedOrbitType({2, 0})));
}

TEST(ApplyRelabeling, FreeEdge) {
  LabeledGraph h = test::free_edge_orbit();
  LabeledGraph to12 = apply_relabeling(relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({1, 2})), h);
  EXPECT_EQ(to12.link_count(), 3u);
  EXPECT_EQ(to12.incident_links("a", 1).size(), 1u);
  EXPECT_EQ(to12.incident_links("a", 0).size(), 0u);

  LabeledGraph removed = apply_relabeling(relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({R, 2})), h);
  EXPECT_EQ(removed.node_count(), 2u);
  EXPECT_EQ(removed.link_count(), 2u);
  for (const Link& l : removed.links()) EXPECT_TRUE(l.is_loop());
}

TEST(ApplyRelabeling, Swap) {
  LabeledGraph h = test::sewn_edge_orbit();
  LabeledGraph swapped = apply_relabeling(relabel_from_types(OrbitType({0, 2}), GeneralizedOrbitType({2, 0})), h);
  EXPECT_EQ(swapped.incident_links("a", 0).front().other("a"), "c");
  EXPECT_EQ(swapped.incident_links("a", 2).front().other("a"), "b");
}

TEST(ApplyRelabeling, CompositionLaw) {
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    // Random orbit type o over 0..3 and two permutation-style relabelings.
    std::vector<Dim> dims;
    for (Dim d = 0; d <= 3; ++d)
      if (rng() % 2) dims.push_back(d);
    OrbitType o(dims);
    auto random_target = [&](std::size_t k) {
      std::vector<Dim> pool{0, 1, 2, 3, 4};
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(k);
      return pool;
    };
    std::vector<Dim> mid = random_target(o.size());
    RelabelingFunction f(o, GeneralizedOrbitType(mid));
    std::vector<Dim> mid_sorted = mid;
    std::sort(mid_sorted.begin(), mid_sorted.end());
    std::vector<Dim> last = random_target(o.size());
    if (rng() % 3 == 0 && !last.empty()) last[rng() % last.size()] = R;
    RelabelingFunction g{OrbitType(mid_sorted), GeneralizedOrbitType(last)};

    LabeledGraph h(4);
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) h.add_node("u" + std::to_string(k));
    if (!dims.empty()) {
      for (int k = 0; k < 2 * n; ++k) {
        h.add_link("u" + std::to_string(rng() % n), "u" + std::to_string(rng() % n), dims[rng() % dims.size()]);
      }
    }
    LabeledGraph stepwise = apply_relabeling(g, apply_relabeling(f, h));
    LabeledGraph composed = apply_relabeling(compose(g, f), h);
    EXPECT_EQ(stepwise, composed) << "round " << round;
  }
}

TEST(Compose, RejectsRemovingFirstStep) {
  RelabelingFunction f(OrbitType({0, 2}), GeneralizedOrbitType({R, 2}));
  RelabelingFunction g(OrbitType({2}), GeneralizedOrbitType({1}));
  EXPECT_THROW(compose(g, f), Error);
}
