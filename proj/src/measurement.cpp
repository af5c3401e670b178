#include "qwalk/measurement.hpp"

#include <algorithm>
#include <iterator>

#include "qwalk/error.hpp"

namespace qwalk {

Projector::Projector(Model basis, std::size_t dimension, std::vector<std::size_t> indices, std::string label)
    : basis_(basis), dimension_(dimension), indices_(std::move(indices)), label_(std::move(label)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= dimension_)
    throw Error(ErrorKind::DimensionMismatch, "projector index beyond dimension " + std::to_string(dimension_));
}

bool Projector::retains(std::size_t b) const {
  return std::binary_search(indices_.begin(), indices_.end(), b);
}

Matrix Projector::dense() const {
  const auto d = static_cast<Eigen::Index>(dimension_);
  Matrix p = Matrix::Zero(d, d);
  for (auto b : indices_) p(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = 1.0;
  return p;
}

Projector product(const Projector& a, const Projector& b) {
  if (a.basis() != b.basis() || a.dimension() != b.dimension())
    throw Error(ErrorKind::DimensionMismatch, "projectors act on different spaces");
  std::vector<std::size_t> both;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                        std::back_inserter(both));
  return Projector(a.basis(), a.dimension(), std::move(both), a.label() + "*" + b.label());
}

std::string node_label(NodeId j) {
  return "n" + std::to_string(j);
}

std::string edge_label(NodeId j, Port sigma) {
  return "e" + std::to_string(j) + ":" + std::to_string(sigma);
}

namespace {

// Endpoint of the edge with the smaller node id, with its port.
std::pair<NodeId, Port> canonical_end(const PortedGraph& g, NodeId j, Port sigma) {
  const NodeId k = g.neighbor(j, sigma);
  if (j < k) return {j, sigma};
  return {k, g.reciprocal(j, sigma)};
}

}  // namespace

Projector projector_coin(const PortedGraph& coin_graph, NodeId j) {
  const std::size_t n = coin_graph.node_index(j);
  std::vector<std::size_t> kept;
  for (int p = 0; p < coin_graph.degree_at(n); ++p) kept.push_back(coin_graph.offset(n) + static_cast<std::size_t>(p));
  return Projector(Model::Coin, coin_graph.dimension(), std::move(kept), node_label(j));
}

Projector projector_scattering(const PortedGraph& scattering_graph, NodeId j, Port sigma) {
  const std::size_t b = scattering_graph.basis_index(j, sigma);
  const auto [cj, cs] = canonical_end(scattering_graph, j, sigma);
  return Projector(Model::Scattering, scattering_graph.dimension(), {b, scattering_graph.twin(b)},
                   edge_label(cj, cs));
}

double probability(const WalkState& state, const Projector& projector) {
  require_model(state, projector.basis());
  require_dimension(state, projector.dimension());
  double p = 0.0;
  for (auto b : projector.indices()) p += std::norm(state[b]);
  return p;
}

Projector cross_projector_s_in_c(const EquivalenceMap& map, NodeId j) {
  const Projector coin = projector_coin(map.coin_graph(), j);
  std::vector<std::size_t> kept;
  for (auto c : coin.indices()) kept.push_back(map.preimage(c));
  return Projector(Model::Scattering, map.dimension(), std::move(kept), coin.label());
}

Projector cross_projector_c_in_s(const EquivalenceMap& map, NodeId j, Port sigma) {
  const Projector edge = projector_scattering(map.scattering_graph(), j, sigma);
  std::vector<std::size_t> kept;
  for (auto b : edge.indices()) kept.push_back(map.image(b));
  return Projector(Model::Coin, map.dimension(), std::move(kept), edge.label());
}

const char* to_string(Partition partition) {
  switch (partition) {
    case Partition::CoinNodes: return "nodes";
    case Partition::ScatteringEdges: return "edges";
    case Partition::Cross: return "cross";
  }
  return "unknown";
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [label, p] : entries) sum += p;
  return sum;
}

double Distribution::at(const std::string& label) const {
  for (const auto& [l, p] : entries)
    if (l == label) return p;
  throw Error(ErrorKind::UnknownNode, "no entry labeled " + label);
}

std::vector<Projector> node_partition(const PortedGraph& coin_graph) {
  std::vector<Projector> out;
  for (NodeId j : coin_graph.nodes()) out.push_back(projector_coin(coin_graph, j));
  return out;
}

std::vector<Projector> edge_partition(const PortedGraph& scattering_graph) {
  std::vector<Projector> out;
  for (NodeId j : scattering_graph.nodes())
    for (Port s = 1; s <= scattering_graph.degree(j); ++s)
      if (j < scattering_graph.neighbor(j, s)) out.push_back(projector_scattering(scattering_graph, j, s));
  return out;
}

namespace {

Distribution measure(const WalkState& state, const std::vector<Projector>& family) {
  Distribution d;
  d.entries.reserve(family.size());
  for (const auto& p : family) d.entries.emplace_back(p.label(), probability(state, p));
  return d;
}

}  // namespace

Distribution node_distribution(const WalkState& coin_state, const PortedGraph& coin_graph) {
  if (coin_state.model() != Model::Coin)
    throw Error(ErrorKind::ModeMismatch, "node distribution of a scattering state needs the cross mode");
  return measure(coin_state, node_partition(coin_graph));
}

Distribution edge_distribution(const WalkState& scattering_state, const PortedGraph& scattering_graph) {
  if (scattering_state.model() != Model::Scattering)
    throw Error(ErrorKind::ModeMismatch, "edge distribution of a coin state needs the cross mode");
  return measure(scattering_state, edge_partition(scattering_graph));
}

Distribution distribution(const WalkState& state, Partition mode, const EquivalenceMap& map) {
  switch (mode) {
    case Partition::CoinNodes:
      return node_distribution(state, map.coin_graph());
    case Partition::ScatteringEdges:
      return edge_distribution(state, map.scattering_graph());
    case Partition::Cross: {
      std::vector<Projector> family;
      if (state.model() == Model::Scattering) {
        for (NodeId j : map.coin_graph().nodes()) family.push_back(cross_projector_s_in_c(map, j));
      } else {
        const PortedGraph& g = map.scattering_graph();
        for (NodeId j : g.nodes())
          for (Port s = 1; s <= g.degree(j); ++s)
            if (j < g.neighbor(j, s)) family.push_back(cross_projector_c_in_s(map, j, s));
      }
      return measure(state, family);
    }
  }
  throw Error(ErrorKind::ModeMismatch, "unknown partition");
}

}  // namespace qwalk
