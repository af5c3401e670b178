#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/equivalence.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Orthogonal projector onto a set of basis states. Every projector used by
/// the walks is diagonal in the half-edge basis, so it is stored as the
/// sorted set of indices it keeps.
class Projector {
 public:
  Projector(Model basis, std::size_t dimension, std::vector<std::size_t> indices, std::string label);

  Model basis() const { return basis_; }
  std::size_t dimension() const { return dimension_; }
  std::span<const std::size_t> indices() const { return indices_; }
  const std::string& label() const { return label_; }
  bool retains(std::size_t b) const;
  Matrix dense() const;

  bool operator==(const Projector& other) const {
    return basis_ == other.basis_ && dimension_ == other.dimension_ && indices_ == other.indices_;
  }

 private:
  Model basis_;
  std::size_t dimension_;
  std::vector<std::size_t> indices_;
  std::string label_;
};

/// Product of two commuting diagonal projectors.
Projector product(const Projector& a, const Projector& b);

std::string node_label(NodeId j);
std::string edge_label(NodeId j, Port sigma);

/// All coin states on node j.
Projector projector_coin(const PortedGraph& coin_graph, NodeId j);
/// Both scattering states of the edge leaving j through σ.
Projector projector_scattering(const PortedGraph& scattering_graph, NodeId j, Port sigma);

/// ⟨ψ|P|ψ⟩. Throws DimensionMismatch or ModelMismatch.
double probability(const WalkState& state, const Projector& projector);

/// E† P_c^(j) E, a scattering-basis projector whose expectation on a
/// scattering state gives the coin walk's node probability.
Projector cross_projector_s_in_c(const EquivalenceMap& map, NodeId j);
/// E P_s^(j,σ) E†, a coin-basis projector whose expectation on a coin state
/// gives the scattering walk's edge probability. (j, σ) uses the scattering
/// labeling.
Projector cross_projector_c_in_s(const EquivalenceMap& map, NodeId j, Port sigma);

enum class Partition { CoinNodes, ScatteringEdges, Cross };

const char* to_string(Partition partition);

struct Distribution {
  std::vector<std::pair<std::string, double>> entries;

  double total() const;
  /// Probability for a label; throws UnknownNode if the label is absent.
  double at(const std::string& label) const;
};

/// Edges are labeled once, by their endpoint with the smaller node id.
std::vector<Projector> node_partition(const PortedGraph& coin_graph);
std::vector<Projector> edge_partition(const PortedGraph& scattering_graph);

Distribution node_distribution(const WalkState& coin_state, const PortedGraph& coin_graph);
Distribution edge_distribution(const WalkState& scattering_state, const PortedGraph& scattering_graph);

/// CoinNodes wants a coin state and ScatteringEdges a scattering state.
/// Cross turns a scattering state into node probabilities and a coin state
/// into edge probabilities. Throws ModeMismatch otherwise.
Distribution distribution(const WalkState& state, Partition mode, const EquivalenceMap& map);

}  // namespace qwalk
