#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using NodeId = std::int64_t;
/// Port label at a node, 1-based: a node of degree N owns ports 1..N.
using Port = int;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Undirected simple graph whose nodes carry port labels.
///
/// Each node j of degree N_j labels its incident edges with the ports
/// 1..N_j. The neighbor map e(σ;j) sends a port to the adjacent node and the
/// reciprocal map γ(σ;j) gives the label of the same edge as seen from that
/// neighbor.
///
/// Internally every directed pair (j, σ) is a half-edge with a dense
/// basis index: nodes in ascending id order, ports ascending within a node.
/// The same index space backs walk states in both walk models.
class PortedGraph {
 public:
  PortedGraph() = default;

  /// Ports assigned in ascending order of neighbor id.
  static PortedGraph from_edges(std::span<const Edge> edges);

  /// As above, but nodes listed in `port_order` take their ports from the
  /// given neighbor sequence (port σ = position σ-1). Each listed sequence
  /// must be a permutation of that node's neighbors.
  static PortedGraph from_edges(std::span<const Edge> edges,
                                const std::map<NodeId, std::vector<NodeId>>& port_order);

  /// Raw neighbor and reciprocal tables, taken as-is without validation.
  /// Intended for loading suspect data and inspecting it with validate().
  static PortedGraph from_tables(const std::map<NodeId, std::vector<NodeId>>& neighbors,
                                 const std::map<NodeId, std::vector<Port>>& reciprocals);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t dimension() const { return owner_.size(); }
  std::size_t edge_count() const { return owner_.size() / 2; }
  std::span<const NodeId> nodes() const { return ids_; }

  bool contains(NodeId j) const;
  std::size_t node_index(NodeId j) const;
  NodeId node_id(std::size_t index) const { return ids_[index]; }

  int degree(NodeId j) const { return degree_at(node_index(j)); }
  /// e(σ;j)
  NodeId neighbor(NodeId j, Port sigma) const;
  /// γ(σ;j)
  Port reciprocal(NodeId j, Port sigma) const;
  /// The port of j whose edge leads to k.
  Port port_toward(NodeId j, NodeId k) const;

  /// Neighbor ids of j in port order.
  std::vector<NodeId> port_order(NodeId j) const;
  /// Canonical edge list: (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;
  /// Degree shared by all nodes, or 0 when the graph is not regular.
  int regular_degree() const;

  // Half-edge view.
  std::size_t offset(std::size_t node_index) const { return offsets_[node_index]; }
  int degree_at(std::size_t node_index) const {
    return static_cast<int>(offsets_[node_index + 1] - offsets_[node_index]);
  }
  std::size_t basis_index(NodeId j, Port sigma) const;
  std::size_t node_of(std::size_t b) const { return owner_[b]; }
  Port port_of(std::size_t b) const { return static_cast<Port>(b - offsets_[owner_[b]]) + 1; }
  /// Node index of e(σ;j), or npos for a dangling table entry.
  std::size_t neighbor_at(std::size_t b) const { return target_[b]; }
  Port reciprocal_at(std::size_t b) const { return reciprocal_[b]; }
  /// Basis index of (e(σ;j), γ(σ;j)), or npos when the tables are broken.
  std::size_t twin(std::size_t b) const { return twin_[b]; }

  bool operator==(const PortedGraph&) const = default;

 private:
  static PortedGraph from_ordered_lists(const std::map<NodeId, std::vector<NodeId>>& lists);
  void check_port(std::size_t node_index, Port sigma) const;
  void link_twins();

  std::vector<NodeId> ids_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> target_;
  std::vector<Port> reciprocal_;
  std::vector<std::size_t> twin_;
};

struct GraphViolation {
  NodeId node;
  Port port;
  std::string what;
};

/// Checks every structural invariant of a ported graph. Empty on success.
std::vector<GraphViolation> validate(const PortedGraph& graph);

}  // namespace qwalk
