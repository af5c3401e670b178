#include "qwalk/scattering_walk.hpp"

#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

ScatteringWalkOperator::ScatteringWalkOperator(PortedGraph graph, LocalUnitaryFamily gammas)
    : graph_(std::move(graph)), gammas_(std::move(gammas)) {
  if (gammas_.role() != UnitaryRole::Scattering)
    throw Error(ErrorKind::ModelMismatch, "scattering walk needs scattering matrices, got coins");
  if (auto broken = validate(graph_); !broken.empty())
    throw Error(ErrorKind::InvalidPortOrder,
                "graph tables are inconsistent at node " + std::to_string(broken.front().node));
  gammas_.check_dimensions(graph_);
}

WalkState step_scattering(const WalkState& state, const ScatteringWalkOperator& op) {
  require_model(state, Model::Scattering);
  const PortedGraph& g = op.graph();
  require_dimension(state, g.dimension());
  std::vector<Complex> out(state.dimension());
  Eigen::VectorXcd scattered;
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const std::size_t off = g.offset(n);
    const Eigen::Index deg = g.degree_at(n);
    Eigen::Map<const Eigen::VectorXcd> incoming(state.amplitudes().data() + off, deg);
    scattered.noalias() = op.gammas()[n] * incoming;
    // outgoing through α is the state entering e(α;j) through γ(α;j)
    for (Eigen::Index alpha = 0; alpha < deg; ++alpha)
      out[g.twin(off + static_cast<std::size_t>(alpha))] = scattered(alpha);
  }
  return WalkState::raw(Model::Scattering, std::move(out));
}

WalkState step_scattering_adjoint(const WalkState& state, const ScatteringWalkOperator& op) {
  require_model(state, Model::Scattering);
  const PortedGraph& g = op.graph();
  require_dimension(state, g.dimension());
  std::vector<Complex> out(state.dimension());
  Eigen::VectorXcd gathered;
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const std::size_t off = g.offset(k);
    const Eigen::Index deg = g.degree_at(k);
    // gathered(γ-1) holds the amplitude of the state (j, σ) with
    // e(σ;j) = k and γ(σ;j) = γ, i.e. the twin of (k, γ)
    gathered.resize(deg);
    for (Eigen::Index p = 0; p < deg; ++p) gathered(p) = state[g.twin(off + static_cast<std::size_t>(p))];
    Eigen::Map<Eigen::VectorXcd>(out.data() + off, deg).noalias() = op.gammas()[k].adjoint() * gathered;
  }
  return WalkState::raw(Model::Scattering, std::move(out));
}

Matrix dense_matrix(const ScatteringWalkOperator& op, std::size_t cap) {
  const std::size_t dim = op.dimension();
  if (dim > cap)
    throw Error(ErrorKind::DimensionCapExceeded,
                "dimension " + std::to_string(dim) + " exceeds the dense cap " + std::to_string(cap));
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto column = step_scattering(WalkState::basis(Model::Scattering, dim, k), op);
    for (std::size_t r = 0; r < dim; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = column[r];
  }
  return m;
}

}  // namespace qwalk
