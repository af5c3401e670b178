#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qwalk/ported_graph.hpp"

namespace qwalk {

/// Per-node table of port labels: node -> (port -> label).
using PortTable = std::map<NodeId, std::map<Port, Port>>;

/// The shift rule of the coin walk.
///
/// A walker leaving j through port σ arrives at e(σ;j) on the port
/// μ(σ;j) = arrival_port(j, σ). Admissible tables send the N_j walkers
/// arriving at each node j onto N_j distinct ports, which makes the shift a
/// permutation of half-edges. The inverse is described by
/// departure_node = a and departure_port = ν:
///
///   a(μ(σ;j); e(σ;j)) = j      ν(μ(σ;j); e(σ;j)) = σ
///   e(ν(σ;j); a(σ;j)) = j      μ(ν(σ;j); a(σ;j)) = σ
class ShiftPermutation {
 public:
  /// μ = γ: the walker lands on the reversed half-edge of the same edge.
  static ShiftPermutation flip_flop(PortedGraph graph);

  /// Entries missing from `arrival` keep the flip-flop value.
  /// Throws RangeViolated for a label outside Λ_{e(σ;j)} and
  /// RestrictionViolated when two walkers land on the same port of a node.
  static ShiftPermutation from_table(PortedGraph graph, const PortTable& arrival);

  const PortedGraph& graph() const { return graph_; }

  Port arrival_port(NodeId j, Port sigma) const;
  NodeId departure_node(NodeId j, Port sigma) const;
  Port departure_port(NodeId j, Port sigma) const;

  /// Half-edge reached by the shift from b.
  std::size_t image(std::size_t b) const { return image_[b]; }
  /// Half-edge whose shift lands on b.
  std::size_t preimage(std::size_t b) const { return preimage_[b]; }

  /// Arrival labels as a table, suitable for serialization.
  PortTable table() const;

  bool operator==(const ShiftPermutation&) const = default;

 private:
  ShiftPermutation(PortedGraph graph, std::vector<Port> arrival);

  PortedGraph graph_;
  std::vector<Port> arrival_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

/// Integer check of the four inverse identities listed above, plus the
/// restriction. Empty on success.
std::vector<GraphViolation> check_identities(const ShiftPermutation& shift);

}  // namespace qwalk
