#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qwalk/error.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/random_fixtures.hpp"
#include "support/error_kind.hpp"

namespace qwalk {
namespace {

using testing::kind_of;

TEST(PortedGraph, TriangleDefaultPorts) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const auto g = PortedGraph::from_edges(edges);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.dimension(), 6u);
  EXPECT_EQ(g.neighbor(0, 1), 1);
  EXPECT_EQ(g.neighbor(0, 2), 2);
  EXPECT_EQ(g.neighbor(1, 1), 0);
  EXPECT_EQ(g.neighbor(2, 2), 1);
  EXPECT_EQ(g.reciprocal(0, 1), 1);
  EXPECT_EQ(g.reciprocal(0, 2), 1);
  EXPECT_EQ(g.reciprocal(1, 2), 2);
  EXPECT_EQ(g.port_toward(2, 0), 1);
  EXPECT_TRUE(validate(g).empty());
}

TEST(PortedGraph, PathEndpointsHaveDegreeOne) {
  const auto g = fixtures::path_graph(3);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree(2), 1);
  EXPECT_EQ(g.neighbor(1, 1), 0);
  EXPECT_EQ(g.neighbor(1, 2), 2);
  EXPECT_EQ(g.reciprocal(0, 1), 1);
  EXPECT_EQ(g.reciprocal(2, 1), 2);
}

TEST(PortedGraph, ExplicitPortOrder) {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
  const auto g = PortedGraph::from_edges(edges, {{0, {3, 1, 2}}});
  EXPECT_EQ(g.neighbor(0, 1), 3);
  EXPECT_EQ(g.neighbor(0, 3), 2);
  EXPECT_EQ(g.reciprocal(3, 1), 1);
  EXPECT_EQ(g.port_order(0), (std::vector<NodeId>{3, 1, 2}));
  EXPECT_TRUE(validate(g).empty());
}

TEST(PortedGraph, Errors) {
  EXPECT_EQ(kind_of([] {
              const std::vector<Edge> e{{0, 0}};
              PortedGraph::from_edges(e);
            }),
            ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] {
              const std::vector<Edge> e{{0, 1}, {1, 0}};
              PortedGraph::from_edges(e);
            }),
            ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { PortedGraph::from_edges(std::vector<Edge>{}); }), ErrorKind::EmptyGraph);
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  EXPECT_EQ(kind_of([&] { PortedGraph::from_edges(edges, {{1, {0, 0}}}); }), ErrorKind::InvalidPortOrder);
  EXPECT_EQ(kind_of([&] { PortedGraph::from_edges(edges, {{1, {0}}}); }), ErrorKind::InvalidPortOrder);
  EXPECT_EQ(kind_of([&] { PortedGraph::from_edges(edges, {{7, {0}}}); }), ErrorKind::UnknownNode);
  const auto g = PortedGraph::from_edges(edges);
  EXPECT_EQ(kind_of([&] { g.neighbor(0, 2); }), ErrorKind::PortOutOfRange);
  EXPECT_EQ(kind_of([&] { g.neighbor(0, 0); }), ErrorKind::PortOutOfRange);
  EXPECT_EQ(kind_of([&] { g.degree(9); }), ErrorKind::UnknownNode);
  EXPECT_EQ(kind_of([&] { g.port_toward(0, 2); }), ErrorKind::NotSameEdge);
}

TEST(PortedGraph, ErrorMessageNamesTheEdge) {
  try {
    const std::vector<Edge> e{{0, 1}, {4, 4}};
    PortedGraph::from_edges(e);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find('4'), std::string::npos);
  }
}

TEST(PortedGraph, ValidateCatchesTamperedReciprocal) {
  // 0 - 1 - 2 with γ(1;2) pointing at the port of node 1 that leads to 0.
  const std::map<NodeId, std::vector<NodeId>> neighbors{{0, {1}}, {1, {0, 2}}, {2, {1}}};
  const std::map<NodeId, std::vector<Port>> good{{0, {1}}, {1, {1, 1}}, {2, {2}}};
  EXPECT_TRUE(validate(PortedGraph::from_tables(neighbors, good)).empty());

  const std::map<NodeId, std::vector<Port>> bad{{0, {1}}, {1, {1, 1}}, {2, {1}}};
  const auto violations = validate(PortedGraph::from_tables(neighbors, bad));
  ASSERT_FALSE(violations.empty());
  EXPECT_TRUE(std::any_of(violations.begin(), violations.end(), [](const GraphViolation& v) { return v.node == 2; }));
}

TEST(PortedGraph, ValidateCatchesDanglingNeighbor) {
  const std::map<NodeId, std::vector<NodeId>> neighbors{{0, {5}}};
  const std::map<NodeId, std::vector<Port>> recips{{0, {1}}};
  EXPECT_FALSE(validate(PortedGraph::from_tables(neighbors, recips)).empty());
}

TEST(PortedGraph, DegreeSumIsTwiceEdgeCount) {
  fixtures::Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = fixtures::erdos_renyi(12, 0.35, rng);
    std::size_t sum = 0;
    for (NodeId j : g.nodes()) sum += static_cast<std::size_t>(g.degree(j));
    EXPECT_EQ(sum, 2 * g.edges().size());
    EXPECT_EQ(sum, g.dimension());
  }
}

TEST(PortedGraph, StructuralInvariantsOnRandomLabelings) {
  fixtures::Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = fixtures::shuffled_ports(fixtures::erdos_renyi(15, 0.3, rng), rng);
    EXPECT_TRUE(validate(g).empty());
    for (NodeId j : g.nodes())
      for (Port s = 1; s <= g.degree(j); ++s) {
        const NodeId k = g.neighbor(j, s);
        EXPECT_NE(k, j);
        EXPECT_EQ(g.neighbor(k, g.reciprocal(j, s)), j);
        EXPECT_EQ(g.reciprocal(k, g.reciprocal(j, s)), s);
      }
    for (std::size_t b = 0; b < g.dimension(); ++b) EXPECT_EQ(g.twin(g.twin(b)), b);
  }
}

TEST(PortedGraph, IndependentOfEdgeInputOrder) {
  fixtures::Rng rng(3);
  const auto g = fixtures::erdos_renyi(14, 0.4, rng);
  auto edges = g.edges();
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
      if (rng() & 1u) std::swap(e.first, e.second);
    EXPECT_EQ(PortedGraph::from_edges(edges), g);
  }
}

TEST(PortedGraph, BasisIndexRoundTrip) {
  const auto g = fixtures::complete_graph(5);
  for (std::size_t b = 0; b < g.dimension(); ++b) {
    const NodeId j = g.node_id(g.node_of(b));
    EXPECT_EQ(g.basis_index(j, g.port_of(b)), b);
  }
}

}  // namespace
}  // namespace qwalk
