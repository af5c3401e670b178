#include "qwalk/ported_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

std::string edge_str(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::map<NodeId, std::vector<NodeId>> sorted_adjacency(std::span<const Edge> edges) {
  if (edges.empty()) throw Error(ErrorKind::EmptyGraph, "edge list is empty");
  std::set<Edge> seen;
  std::map<NodeId, std::vector<NodeId>> adjacency;
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorKind::SelfLoop, "edge " + edge_str(u, v));
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) throw Error(ErrorKind::DuplicateEdge, "edge " + edge_str(u, v));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& [node, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());
  return adjacency;
}

}  // namespace

PortedGraph PortedGraph::from_edges(std::span<const Edge> edges) {
  return from_ordered_lists(sorted_adjacency(edges));
}

PortedGraph PortedGraph::from_edges(std::span<const Edge> edges,
                                    const std::map<NodeId, std::vector<NodeId>>& port_order) {
  auto adjacency = sorted_adjacency(edges);
  for (const auto& [node, order] : port_order) {
    auto it = adjacency.find(node);
    if (it == adjacency.end())
      throw Error(ErrorKind::UnknownNode, "port order given for node " + std::to_string(node) +
                                              " which has no edges");
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != it->second)
      throw Error(ErrorKind::InvalidPortOrder,
                  "port order at node " + std::to_string(node) + " is not a permutation of its neighbors");
    it->second = order;
  }
  return from_ordered_lists(adjacency);
}

PortedGraph PortedGraph::from_ordered_lists(const std::map<NodeId, std::vector<NodeId>>& lists) {
  PortedGraph g;
  g.ids_.reserve(lists.size());
  for (const auto& [node, nbrs] : lists) {
    g.ids_.push_back(node);
    g.offsets_.push_back(g.offsets_.back() + nbrs.size());
  }
  const std::size_t dim = g.offsets_.back();
  g.owner_.resize(dim);
  g.target_.resize(dim, npos);
  g.reciprocal_.resize(dim, 0);
  std::size_t node = 0;
  for (const auto& [id, nbrs] : lists) {
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      const std::size_t b = g.offsets_[node] + p;
      g.owner_[b] = node;
      if (!g.contains(nbrs[p])) continue;
      g.target_[b] = g.node_index(nbrs[p]);
      const auto& back = lists.at(nbrs[p]);
      auto pos = std::find(back.begin(), back.end(), id);
      if (pos != back.end()) g.reciprocal_[b] = static_cast<Port>(pos - back.begin()) + 1;
    }
    ++node;
  }
  g.link_twins();
  return g;
}

PortedGraph PortedGraph::from_tables(const std::map<NodeId, std::vector<NodeId>>& neighbors,
                                     const std::map<NodeId, std::vector<Port>>& reciprocals) {
  PortedGraph g;
  for (const auto& [node, nbrs] : neighbors) {
    g.ids_.push_back(node);
    g.offsets_.push_back(g.offsets_.back() + nbrs.size());
  }
  const std::size_t dim = g.offsets_.back();
  g.owner_.resize(dim);
  g.target_.resize(dim, npos);
  g.reciprocal_.resize(dim, 0);
  std::size_t node = 0;
  for (const auto& [id, nbrs] : neighbors) {
    auto rec = reciprocals.find(id);
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      const std::size_t b = g.offsets_[node] + p;
      g.owner_[b] = node;
      if (g.contains(nbrs[p])) g.target_[b] = g.node_index(nbrs[p]);
      if (rec != reciprocals.end() && p < rec->second.size()) g.reciprocal_[b] = rec->second[p];
    }
    ++node;
  }
  g.link_twins();
  return g;
}

void PortedGraph::link_twins() {
  twin_.assign(owner_.size(), npos);
  for (std::size_t b = 0; b < owner_.size(); ++b) {
    const std::size_t k = target_[b];
    if (k == npos) continue;
    const Port r = reciprocal_[b];
    if (r >= 1 && r <= degree_at(k)) twin_[b] = offsets_[k] + static_cast<std::size_t>(r - 1);
  }
}

bool PortedGraph::contains(NodeId j) const {
  return std::binary_search(ids_.begin(), ids_.end(), j);
}

std::size_t PortedGraph::node_index(NodeId j) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), j);
  if (it == ids_.end() || *it != j)
    throw Error(ErrorKind::UnknownNode, "node " + std::to_string(j) + " is not in the graph");
  return static_cast<std::size_t>(it - ids_.begin());
}

void PortedGraph::check_port(std::size_t node_index, Port sigma) const {
  if (sigma < 1 || sigma > degree_at(node_index))
    throw Error(ErrorKind::PortOutOfRange, "port " + std::to_string(sigma) + " at node " +
                                               std::to_string(ids_[node_index]) + " of degree " +
                                               std::to_string(degree_at(node_index)));
}

std::size_t PortedGraph::basis_index(NodeId j, Port sigma) const {
  const std::size_t n = node_index(j);
  check_port(n, sigma);
  return offsets_[n] + static_cast<std::size_t>(sigma - 1);
}

NodeId PortedGraph::neighbor(NodeId j, Port sigma) const {
  const std::size_t k = target_[basis_index(j, sigma)];
  if (k == npos)
    throw Error(ErrorKind::UnknownNode, "port " + std::to_string(sigma) + " at node " + std::to_string(j) +
                                            " points outside the graph");
  return ids_[k];
}

Port PortedGraph::reciprocal(NodeId j, Port sigma) const {
  return reciprocal_[basis_index(j, sigma)];
}

Port PortedGraph::port_toward(NodeId j, NodeId k) const {
  const std::size_t n = node_index(j);
  const std::size_t target = node_index(k);
  for (std::size_t b = offsets_[n]; b < offsets_[n + 1]; ++b)
    if (target_[b] == target) return port_of(b);
  throw Error(ErrorKind::NotSameEdge,
              "no edge between nodes " + std::to_string(j) + " and " + std::to_string(k));
}

std::vector<NodeId> PortedGraph::port_order(NodeId j) const {
  const std::size_t n = node_index(j);
  std::vector<NodeId> out;
  for (std::size_t b = offsets_[n]; b < offsets_[n + 1]; ++b)
    out.push_back(target_[b] == npos ? j : ids_[target_[b]]);
  return out;
}

std::vector<Edge> PortedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t b = 0; b < owner_.size(); ++b) {
    if (target_[b] == npos) continue;
    const NodeId u = ids_[owner_[b]];
    const NodeId v = ids_[target_[b]];
    if (u < v) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PortedGraph::regular_degree() const {
  if (ids_.empty()) return 0;
  const int d = degree_at(0);
  for (std::size_t n = 1; n < ids_.size(); ++n)
    if (degree_at(n) != d) return 0;
  return d;
}

std::vector<GraphViolation> validate(const PortedGraph& graph) {
  std::vector<GraphViolation> out;
  for (std::size_t n = 0; n < graph.node_count(); ++n) {
    const NodeId j = graph.node_id(n);
    std::set<std::size_t> reached;
    for (Port s = 1; s <= graph.degree_at(n); ++s) {
      const std::size_t b = graph.offset(n) + static_cast<std::size_t>(s - 1);
      const std::size_t k = graph.neighbor_at(b);
      if (k == npos) {
        out.push_back({j, s, "neighbor is not a node of the graph"});
        continue;
      }
      if (k == n) out.push_back({j, s, "self-loop"});
      if (!reached.insert(k).second) out.push_back({j, s, "second port to the same neighbor"});
      const Port r = graph.reciprocal_at(b);
      if (r < 1 || r > graph.degree_at(k)) {
        out.push_back({j, s, "reciprocal port out of range at the neighbor"});
        continue;
      }
      const std::size_t back = graph.offset(k) + static_cast<std::size_t>(r - 1);
      if (graph.neighbor_at(back) != n) out.push_back({j, s, "reciprocal port does not lead back"});
      if (graph.reciprocal_at(back) != s) out.push_back({j, s, "reciprocal map is not an involution"});
    }
  }
  return out;
}

}  // namespace qwalk
