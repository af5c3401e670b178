#include "qwalk/shift_permutation.hpp"

#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

std::vector<Port> flip_flop_labels(const PortedGraph& graph) {
  std::vector<Port> labels(graph.dimension());
  for (std::size_t b = 0; b < labels.size(); ++b) labels[b] = graph.reciprocal_at(b);
  return labels;
}

}  // namespace

ShiftPermutation::ShiftPermutation(PortedGraph graph, std::vector<Port> arrival)
    : graph_(std::move(graph)), arrival_(std::move(arrival)) {
  if (auto broken = validate(graph_); !broken.empty()) {
    throw Error(ErrorKind::InvalidPortOrder, "graph tables are inconsistent at node " +
                                                 std::to_string(broken.front().node) + ": " +
                                                 broken.front().what);
  }
  const std::size_t dim = graph_.dimension();
  image_.assign(dim, npos);
  preimage_.assign(dim, npos);
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t k = graph_.neighbor_at(b);
    if (arrival_[b] < 1 || arrival_[b] > graph_.degree_at(k)) {
      throw Error(ErrorKind::RangeViolated,
                  "arrival port " + std::to_string(arrival_[b]) + " for (node " +
                      std::to_string(graph_.node_id(graph_.node_of(b))) + ", port " +
                      std::to_string(graph_.port_of(b)) + ") is outside the ports of node " +
                      std::to_string(graph_.node_id(k)));
    }
    image_[b] = graph_.offset(k) + static_cast<std::size_t>(arrival_[b] - 1);
  }
  // Restriction, node by node: {μ(γ(σ;j); e(σ;j)) : σ ∈ Λ_j} must be Λ_j.
  for (std::size_t n = 0; n < graph_.node_count(); ++n) {
    std::vector<bool> hit(static_cast<std::size_t>(graph_.degree_at(n)), false);
    const std::size_t end = graph_.offset(n) + static_cast<std::size_t>(graph_.degree_at(n));
    for (std::size_t b = graph_.offset(n); b < end; ++b) {
      const std::size_t incoming = graph_.twin(b);
      const Port label = arrival_[incoming];
      if (hit[static_cast<std::size_t>(label - 1)]) {
        throw Error(ErrorKind::RestrictionViolated,
                    "node " + std::to_string(graph_.node_id(n)) + ": two walkers arrive on port " +
                        std::to_string(label));
      }
      hit[static_cast<std::size_t>(label - 1)] = true;
      preimage_[image_[incoming]] = incoming;
    }
  }
}

ShiftPermutation ShiftPermutation::flip_flop(PortedGraph graph) {
  auto labels = flip_flop_labels(graph);
  return ShiftPermutation(std::move(graph), std::move(labels));
}

ShiftPermutation ShiftPermutation::from_table(PortedGraph graph, const PortTable& arrival) {
  auto labels = flip_flop_labels(graph);
  for (const auto& [node, ports] : arrival) {
    for (const auto& [sigma, label] : ports) {
      const std::size_t b = graph.basis_index(node, sigma);
      labels[b] = label;
    }
  }
  return ShiftPermutation(std::move(graph), std::move(labels));
}

Port ShiftPermutation::arrival_port(NodeId j, Port sigma) const {
  return arrival_[graph_.basis_index(j, sigma)];
}

NodeId ShiftPermutation::departure_node(NodeId j, Port sigma) const {
  return graph_.node_id(graph_.node_of(preimage_[graph_.basis_index(j, sigma)]));
}

Port ShiftPermutation::departure_port(NodeId j, Port sigma) const {
  return graph_.port_of(preimage_[graph_.basis_index(j, sigma)]);
}

PortTable ShiftPermutation::table() const {
  PortTable out;
  for (std::size_t b = 0; b < arrival_.size(); ++b)
    out[graph_.node_id(graph_.node_of(b))][graph_.port_of(b)] = arrival_[b];
  return out;
}

std::vector<GraphViolation> check_identities(const ShiftPermutation& shift) {
  const PortedGraph& g = shift.graph();
  std::vector<GraphViolation> out;
  for (NodeId j : g.nodes()) {
    std::vector<bool> hit(static_cast<std::size_t>(g.degree(j)) + 1, false);
    for (Port s = 1; s <= g.degree(j); ++s) {
      const NodeId next = g.neighbor(j, s);
      const Port landed = shift.arrival_port(j, s);
      if (shift.departure_node(next, landed) != j) out.push_back({j, s, "a(mu(s;j); e(s;j)) != j"});
      if (shift.departure_port(next, landed) != s) out.push_back({j, s, "nu(mu(s;j); e(s;j)) != s"});
      const NodeId prev = shift.departure_node(j, s);
      const Port left = shift.departure_port(j, s);
      if (g.neighbor(prev, left) != j) out.push_back({j, s, "e(nu(s;j); a(s;j)) != j"});
      if (shift.arrival_port(prev, left) != s) out.push_back({j, s, "mu(nu(s;j); a(s;j)) != s"});
      const Port incoming = shift.arrival_port(next, g.reciprocal(j, s));
      if (incoming < 1 || incoming > g.degree(j) || hit[static_cast<std::size_t>(incoming)])
        out.push_back({j, s, "restriction set is not all ports"});
      else
        hit[static_cast<std::size_t>(incoming)] = true;
    }
  }
  return out;
}

}  // namespace qwalk
