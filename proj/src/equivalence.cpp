#include "qwalk/equivalence.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

std::string at_str(NodeId j, Port s) {
  return "(node " + std::to_string(j) + ", port " + std::to_string(s) + ")";
}

void require_same_edges(const PortedGraph& a, const PortedGraph& b) {
  if (a.edges() != b.edges())
    throw Error(ErrorKind::EdgeSetMismatch, "coin and scattering labelings describe different edge sets");
}

}  // namespace

// ---------------------------------------------------------------------------
// EdgeLabelBijection

EdgeLabelBijection::EdgeLabelBijection(PortedGraph domain, std::vector<Port> forward)
    : domain_(std::move(domain)), forward_(std::move(forward)), backward_(forward_.size(), 0) {
  for (std::size_t b = 0; b < forward_.size(); ++b) {
    const std::size_t n = domain_.node_of(b);
    const Port label = forward_[b];
    const NodeId j = domain_.node_id(n);
    if (label < 1 || label > domain_.degree_at(n))
      throw Error(ErrorKind::PortOutOfRange, "label " + std::to_string(label) + " for " + at_str(j, domain_.port_of(b)));
    const std::size_t slot = domain_.offset(n) + static_cast<std::size_t>(label - 1);
    if (backward_[slot] != 0)
      throw Error(ErrorKind::RestrictionViolated,
                  "node " + std::to_string(j) + ": label " + std::to_string(label) + " is used twice");
    backward_[slot] = domain_.port_of(b);
  }
}

EdgeLabelBijection EdgeLabelBijection::from_labels(PortedGraph domain, std::vector<Port> labels) {
  if (labels.size() != domain.dimension())
    throw Error(ErrorKind::DimensionMismatch, "one label per port is required");
  return EdgeLabelBijection(std::move(domain), std::move(labels));
}

EdgeLabelBijection EdgeLabelBijection::identity(const PortedGraph& domain) {
  std::vector<Port> forward(domain.dimension());
  for (std::size_t b = 0; b < forward.size(); ++b) forward[b] = domain.port_of(b);
  return EdgeLabelBijection(domain, std::move(forward));
}

EdgeLabelBijection EdgeLabelBijection::from_table(const PortedGraph& domain, const PortTable& table) {
  std::vector<Port> forward(domain.dimension());
  for (std::size_t b = 0; b < forward.size(); ++b) forward[b] = domain.port_of(b);
  for (const auto& [node, ports] : table)
    for (const auto& [sigma, label] : ports) forward[domain.basis_index(node, sigma)] = label;
  return EdgeLabelBijection(domain, std::move(forward));
}

EdgeLabelBijection EdgeLabelBijection::between(const PortedGraph& from, const PortedGraph& to) {
  require_same_edges(from, to);
  std::vector<Port> forward(from.dimension());
  for (std::size_t b = 0; b < forward.size(); ++b) {
    const NodeId j = from.node_id(from.node_of(b));
    forward[b] = to.port_toward(j, from.node_id(from.neighbor_at(b)));
  }
  return EdgeLabelBijection(from, std::move(forward));
}

Port EdgeLabelBijection::operator()(NodeId j, Port sigma) const {
  return forward_[domain_.basis_index(j, sigma)];
}

Port EdgeLabelBijection::inverse(NodeId j, Port label) const {
  return backward_[domain_.basis_index(j, label)];
}

bool EdgeLabelBijection::is_identity() const {
  for (std::size_t b = 0; b < forward_.size(); ++b)
    if (forward_[b] != domain_.port_of(b)) return false;
  return true;
}

PortTable EdgeLabelBijection::table() const {
  PortTable out;
  for (std::size_t b = 0; b < forward_.size(); ++b)
    out[domain_.node_id(domain_.node_of(b))][domain_.port_of(b)] = forward_[b];
  return out;
}

PortedGraph relabel_ports(const PortedGraph& graph, const EdgeLabelBijection& relabel) {
  std::map<NodeId, std::vector<NodeId>> order;
  for (std::size_t n = 0; n < graph.node_count(); ++n) {
    const NodeId j = graph.node_id(n);
    auto& list = order[j];
    list.resize(static_cast<std::size_t>(graph.degree_at(n)));
    for (Port s = 1; s <= graph.degree_at(n); ++s)
      list[static_cast<std::size_t>(relabel(j, s) - 1)] = graph.neighbor(j, s);
  }
  const auto edges = graph.edges();
  return PortedGraph::from_edges(edges, order);
}

// ---------------------------------------------------------------------------
// Relabeling and coefficient correspondence

EdgeLabelBijection build_phi(const PortedGraph& scattering_graph, const EdgeLabelBijection& edge_map,
                             const ShiftPermutation& coin_shift) {
  const PortedGraph& coin = coin_shift.graph();
  require_same_edges(scattering_graph, coin);
  if (!(edge_map.domain() == scattering_graph))
    throw Error(ErrorKind::EdgeSetMismatch, "edge map was built for a different scattering labeling");

  std::vector<Port> forward(scattering_graph.dimension());
  for (std::size_t b = 0; b < forward.size(); ++b) {
    const NodeId j = scattering_graph.node_id(scattering_graph.node_of(b));
    const Port sigma = scattering_graph.port_of(b);
    const Port tau = edge_map.at(b);
    const NodeId k = coin.neighbor(j, tau);
    if (k != scattering_graph.node_id(scattering_graph.neighbor_at(b)))
      throw Error(ErrorKind::NotSameEdge, at_str(j, sigma) + " is mapped to coin port " + std::to_string(tau) +
                                              " which leads to node " + std::to_string(k));
    forward[b] = coin_shift.arrival_port(k, coin.reciprocal(j, tau));
  }
  return EdgeLabelBijection::from_labels(scattering_graph, std::move(forward));
}

LocalUnitaryFamily gamma_from_coin(const LocalUnitaryFamily& coins, const ShiftPermutation& coin_shift) {
  const PortedGraph& g = coin_shift.graph();
  coins.check_dimensions(g);
  std::vector<Matrix> out;
  out.reserve(coins.size());
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const NodeId j = g.node_id(n);
    const Matrix& c = coins[n];
    Matrix gamma(c.rows(), c.cols());
    for (Port row = 1; row <= g.degree_at(n); ++row) {
      const NodeId from = coin_shift.departure_node(j, row);
      const Port source = g.reciprocal(from, coin_shift.departure_port(j, row));
      gamma.row(row - 1) = c.row(source - 1);
    }
    out.push_back(std::move(gamma));
  }
  return LocalUnitaryFamily::unchecked(UnitaryRole::Scattering, std::move(out));
}

LocalUnitaryFamily coin_from_gamma(const LocalUnitaryFamily& gammas, const ShiftPermutation& coin_shift) {
  const PortedGraph& g = coin_shift.graph();
  gammas.check_dimensions(g);
  std::vector<Matrix> out;
  out.reserve(gammas.size());
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const NodeId j = g.node_id(n);
    const Matrix& gamma = gammas[n];
    Matrix c(gamma.rows(), gamma.cols());
    for (Port row = 1; row <= g.degree_at(n); ++row) {
      const Port source = coin_shift.arrival_port(g.neighbor(j, row), g.reciprocal(j, row));
      c.row(row - 1) = gamma.row(source - 1);
    }
    out.push_back(std::move(c));
  }
  return LocalUnitaryFamily::unchecked(UnitaryRole::Coin, std::move(out));
}

// ---------------------------------------------------------------------------
// EquivalenceMap

EquivalenceMap::EquivalenceMap(ShiftPermutation coin_shift)
    : EquivalenceMap(coin_shift, coin_shift.graph(), EdgeLabelBijection::identity(coin_shift.graph())) {}

EquivalenceMap::EquivalenceMap(ShiftPermutation coin_shift, PortedGraph scattering_graph)
    : EquivalenceMap(coin_shift, scattering_graph,
                     EdgeLabelBijection::between(scattering_graph, coin_shift.graph())) {}

EquivalenceMap::EquivalenceMap(ShiftPermutation coin_shift, PortedGraph scattering_graph,
                               const EdgeLabelBijection& edge_map)
    : shift_(std::move(coin_shift)),
      scattering_(std::move(scattering_graph)),
      edge_map_(edge_map),
      relabeling_(build_phi(scattering_, edge_map_, shift_)) {
  const std::size_t dim = scattering_.dimension();
  image_.resize(dim);
  preimage_.resize(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t c = scattering_.offset(scattering_.node_of(b)) + static_cast<std::size_t>(relabeling_.at(b) - 1);
    image_[b] = c;
    preimage_[c] = b;
  }
}

PortedGraph EquivalenceMap::relabeled_scattering_graph() const {
  return relabel_ports(scattering_, relabeling_);
}

WalkState EquivalenceMap::apply(const WalkState& scattering) const {
  require_model(scattering, Model::Scattering);
  require_dimension(scattering, dimension());
  std::vector<Complex> out(dimension());
  for (std::size_t b = 0; b < out.size(); ++b) out[image_[b]] = scattering[b];
  return WalkState::raw(Model::Coin, std::move(out));
}

WalkState EquivalenceMap::apply_adjoint(const WalkState& coin) const {
  require_model(coin, Model::Coin);
  require_dimension(coin, dimension());
  std::vector<Complex> out(dimension());
  for (std::size_t c = 0; c < out.size(); ++c) out[preimage_[c]] = coin[c];
  return WalkState::raw(Model::Scattering, std::move(out));
}

Matrix EquivalenceMap::dense(std::size_t cap) const {
  const std::size_t dim = dimension();
  if (dim > cap)
    throw Error(ErrorKind::DimensionCapExceeded,
                "dimension " + std::to_string(dim) + " exceeds the dense cap " + std::to_string(cap));
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix e = Matrix::Zero(d, d);
  for (std::size_t b = 0; b < dim; ++b) e(static_cast<Eigen::Index>(image_[b]), static_cast<Eigen::Index>(b)) = 1.0;
  return e;
}

LocalUnitaryFamily EquivalenceMap::to_native_labels(const LocalUnitaryFamily& retagged) const {
  retagged.check_dimensions(scattering_);
  std::vector<Matrix> out;
  out.reserve(retagged.size());
  for (std::size_t n = 0; n < scattering_.node_count(); ++n) {
    const Eigen::Index deg = scattering_.degree_at(n);
    const std::size_t off = scattering_.offset(n);
    Matrix native(deg, deg);
    for (Eigen::Index a = 0; a < deg; ++a)
      for (Eigen::Index s = 0; s < deg; ++s)
        native(a, s) = retagged[n](relabeling_.at(off + static_cast<std::size_t>(a)) - 1,
                                   relabeling_.at(off + static_cast<std::size_t>(s)) - 1);
    out.push_back(std::move(native));
  }
  return LocalUnitaryFamily::unchecked(UnitaryRole::Scattering, std::move(out));
}

LocalUnitaryFamily EquivalenceMap::to_retagged_labels(const LocalUnitaryFamily& native) const {
  native.check_dimensions(scattering_);
  std::vector<Matrix> out;
  out.reserve(native.size());
  for (std::size_t n = 0; n < scattering_.node_count(); ++n) {
    const Eigen::Index deg = scattering_.degree_at(n);
    const std::size_t off = scattering_.offset(n);
    Matrix retagged(deg, deg);
    for (Eigen::Index a = 0; a < deg; ++a)
      for (Eigen::Index s = 0; s < deg; ++s)
        retagged(relabeling_.at(off + static_cast<std::size_t>(a)) - 1,
                 relabeling_.at(off + static_cast<std::size_t>(s)) - 1) = native[n](a, s);
    out.push_back(std::move(retagged));
  }
  return LocalUnitaryFamily::unchecked(UnitaryRole::Scattering, std::move(out));
}

LocalUnitaryFamily EquivalenceMap::scattering_from_coin(const LocalUnitaryFamily& coins) const {
  return to_native_labels(gamma_from_coin(coins, shift_));
}

LocalUnitaryFamily EquivalenceMap::coin_from_scattering(const LocalUnitaryFamily& gammas) const {
  return coin_from_gamma(to_retagged_labels(gammas), shift_);
}

// ---------------------------------------------------------------------------
// Verification

EquivalenceReport verify_equivalence(const CoinWalkOperator& coin_op, const ScatteringWalkOperator& scattering_op,
                                     const EquivalenceMap& map, const EquivalenceOptions& options) {
  if (!(coin_op.shift() == map.coin_shift()))
    throw Error(ErrorKind::EdgeSetMismatch, "coin operator uses a different labeling or shift than the map");
  if (!(scattering_op.graph() == map.scattering_graph()))
    throw Error(ErrorKind::EdgeSetMismatch, "scattering operator uses a different labeling than the map");

  EquivalenceReport report;
  report.dimension = map.dimension();
  report.tolerance = options.tolerance;

  if (report.dimension <= options.dense_cap) {
    const Matrix coin = dense_matrix(coin_op, options.dense_cap);
    const Matrix scattering = dense_matrix(scattering_op, options.dense_cap);
    double worst = 0.0;
    const auto dim = static_cast<Eigen::Index>(report.dimension);
    // (E† U_c E)(r, k) = U_c(E r, E k) since E is a basis permutation
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto ek = static_cast<Eigen::Index>(map.image(static_cast<std::size_t>(k)));
      for (Eigen::Index r = 0; r < dim; ++r) {
        const auto er = static_cast<Eigen::Index>(map.image(static_cast<std::size_t>(r)));
        worst = std::max(worst, std::abs(scattering(r, k) - coin(er, ek)));
      }
    }
    report.dense_checked = true;
    report.dense_deviation = worst;
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  for (std::size_t t = 0; t < options.trials; ++t) {
    std::vector<Complex> amplitudes(report.dimension);
    double sq = 0.0;
    for (auto& a : amplitudes) {
      a = {gauss(rng), gauss(rng)};
      sq += std::norm(a);
    }
    for (auto& a : amplitudes) a /= std::sqrt(sq);
    const auto psi = WalkState::normalized(Model::Scattering, std::move(amplitudes));
    const auto direct = step_scattering(psi, scattering_op);
    const auto routed = map.apply_adjoint(step_coin(map.apply(psi), coin_op));
    double gap = 0.0;
    for (std::size_t b = 0; b < report.dimension; ++b) gap += std::norm(direct[b] - routed[b]);
    report.sparse_deviation = std::max(report.sparse_deviation, std::sqrt(gap));
  }
  report.trials = options.trials;

  report.passed = report.sparse_deviation < options.tolerance &&
                  (!report.dense_checked || report.dense_deviation < options.tolerance);
  return report;
}

double spectral_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "spectra of differently sized matrices");
  const Eigen::ComplexEigenSolver<Matrix> sa(a, false);
  const Eigen::ComplexEigenSolver<Matrix> sb(b, false);
  const Eigen::VectorXcd la = sa.eigenvalues();
  const Eigen::VectorXcd lb = sb.eigenvalues();
  std::vector<bool> used(static_cast<std::size_t>(lb.size()), false);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < la.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index pick = -1;
    for (Eigen::Index k = 0; k < lb.size(); ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const double d = std::abs(la(i) - lb(k));
      if (d < best) {
        best = d;
        pick = k;
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace qwalk
