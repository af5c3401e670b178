#include "qwalk/random_fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwalk::fixtures {

PortedGraph path_graph(int nodes) {
  std::vector<Edge> edges;
  for (int j = 0; j + 1 < nodes; ++j) edges.emplace_back(j, j + 1);
  return PortedGraph::from_edges(edges);
}

PortedGraph cycle_graph(int nodes) {
  std::vector<Edge> edges;
  for (int j = 0; j < nodes; ++j) edges.emplace_back(j, (j + 1) % nodes);
  return PortedGraph::from_edges(edges);
}

PortedGraph complete_graph(int nodes) {
  std::vector<Edge> edges;
  for (int j = 0; j < nodes; ++j)
    for (int k = j + 1; k < nodes; ++k) edges.emplace_back(j, k);
  return PortedGraph::from_edges(edges);
}

PortedGraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int k = 1; k <= leaves; ++k) edges.emplace_back(0, k);
  return PortedGraph::from_edges(edges);
}

PortedGraph erdos_renyi(int nodes, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (int j = 0; j < nodes; ++j)
      for (int k = j + 1; k < nodes; ++k)
        if (coin(rng)) edges.emplace_back(j, k);
    if (!edges.empty()) return PortedGraph::from_edges(edges);
  }
}

PortedGraph shuffled_ports(const PortedGraph& graph, Rng& rng) {
  std::map<NodeId, std::vector<NodeId>> order;
  for (NodeId j : graph.nodes()) {
    auto list = graph.port_order(j);
    std::shuffle(list.begin(), list.end(), rng);
    order[j] = std::move(list);
  }
  const auto edges = graph.edges();
  return PortedGraph::from_edges(edges, order);
}

Matrix random_unitary(int size, Rng& rng) {
  std::normal_distribution<double> gauss;
  Matrix z(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) z(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < size; ++c) {
    const Complex d = rr(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

LocalUnitaryFamily random_family(const PortedGraph& graph, UnitaryRole role, Rng& rng) {
  std::vector<Matrix> matrices;
  for (std::size_t n = 0; n < graph.node_count(); ++n) matrices.push_back(random_unitary(graph.degree_at(n), rng));
  return LocalUnitaryFamily(role, std::move(matrices));
}

ShiftPermutation random_shift(const PortedGraph& graph, Rng& rng) {
  PortTable table;
  for (NodeId j : graph.nodes()) {
    std::vector<Port> labels(static_cast<std::size_t>(graph.degree(j)));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    // the walker coming in along port σ of j leaves k = e(σ;j) through γ(σ;j)
    for (Port s = 1; s <= graph.degree(j); ++s)
      table[graph.neighbor(j, s)][graph.reciprocal(j, s)] = labels[static_cast<std::size_t>(s - 1)];
  }
  return ShiftPermutation::from_table(graph, table);
}

WalkState random_state(Model model, std::size_t dimension, Rng& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amplitudes(dimension);
  double sq = 0.0;
  for (auto& a : amplitudes) {
    a = Complex(gauss(rng), gauss(rng));
    sq += std::norm(a);
  }
  for (auto& a : amplitudes) a /= std::sqrt(sq);
  return WalkState::normalized(model, std::move(amplitudes));
}

}  // namespace qwalk::fixtures
