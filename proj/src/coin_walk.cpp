#include "qwalk/coin_walk.hpp"

#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

CoinWalkOperator::CoinWalkOperator(ShiftPermutation shift, LocalUnitaryFamily coins)
    : shift_(std::move(shift)), coins_(std::move(coins)) {
  if (coins_.role() != UnitaryRole::Coin)
    throw Error(ErrorKind::ModelMismatch, "coin walk needs a coin family, got scattering matrices");
  coins_.check_dimensions(shift_.graph());
}

WalkState apply_shift(const WalkState& state, const ShiftPermutation& shift) {
  require_model(state, Model::Coin);
  require_dimension(state, shift.graph().dimension());
  std::vector<Complex> out(state.dimension());
  for (std::size_t b = 0; b < out.size(); ++b) out[shift.image(b)] = state[b];
  return WalkState::raw(Model::Coin, std::move(out));
}

WalkState apply_shift_adjoint(const WalkState& state, const ShiftPermutation& shift) {
  require_model(state, Model::Coin);
  require_dimension(state, shift.graph().dimension());
  std::vector<Complex> out(state.dimension());
  for (std::size_t b = 0; b < out.size(); ++b) out[shift.preimage(b)] = state[b];
  return WalkState::raw(Model::Coin, std::move(out));
}

WalkState apply_coin(const WalkState& state, const PortedGraph& graph, const LocalUnitaryFamily& coins) {
  require_model(state, Model::Coin);
  require_dimension(state, graph.dimension());
  coins.check_dimensions(graph);
  std::vector<Complex> out(state.dimension());
  for (std::size_t n = 0; n < graph.node_count(); ++n) {
    const auto off = static_cast<Eigen::Index>(graph.offset(n));
    const Eigen::Index deg = graph.degree_at(n);
    Eigen::Map<const Eigen::VectorXcd> in(state.amplitudes().data() + off, deg);
    Eigen::Map<Eigen::VectorXcd>(out.data() + off, deg).noalias() = coins[n] * in;
  }
  return WalkState::raw(Model::Coin, std::move(out));
}

WalkState step_coin(const WalkState& state, const CoinWalkOperator& op) {
  return apply_shift(apply_coin(state, op.graph(), op.coins()), op.shift());
}

Matrix dense_matrix(const CoinWalkOperator& op, std::size_t cap) {
  const std::size_t dim = op.dimension();
  if (dim > cap)
    throw Error(ErrorKind::DimensionCapExceeded,
                "dimension " + std::to_string(dim) + " exceeds the dense cap " + std::to_string(cap));
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const auto column = step_coin(WalkState::basis(Model::Coin, dim, k), op);
    for (std::size_t r = 0; r < dim; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = column[r];
  }
  return m;
}

DecompositionReport tensor_decomposition_check(const CoinWalkOperator& op, double tolerance) {
  const PortedGraph& g = op.graph();
  const int degree = g.regular_degree();
  if (degree == 0) throw Error(ErrorKind::NotRegular, "node degrees differ");
  if (!op.coins().is_uniform())
    throw Error(ErrorKind::NonUniformCoin, "the coin differs between nodes");

  const auto nodes = static_cast<Eigen::Index>(g.node_count());
  const auto deg = static_cast<Eigen::Index>(degree);
  const Eigen::Index dim = nodes * deg;
  // factorized index of |σ⟩ ⊗ |j⟩
  auto factor = [nodes](Eigen::Index port0, Eigen::Index node) { return port0 * nodes + node; };

  Matrix shift = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < nodes; ++j) {
    const NodeId id = g.node_id(static_cast<std::size_t>(j));
    for (Port s = 1; s <= degree; ++s) {
      const auto target = static_cast<Eigen::Index>(g.node_index(g.neighbor(id, s)));
      const Port landed = op.shift().arrival_port(id, s);
      shift(factor(landed - 1, target), factor(s - 1, j)) = 1.0;
    }
  }
  const Matrix& c = op.coins()[0];
  Matrix coin_block = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < deg; ++a)
    for (Eigen::Index b = 0; b < deg; ++b)
      for (Eigen::Index j = 0; j < nodes; ++j) coin_block(factor(a, j), factor(b, j)) = c(a, b);
  const Matrix factorized = shift * coin_block;

  const Matrix engine = dense_matrix(op);
  double worst = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      // node-major index j * N + (σ-1) back to the factorized one
      const Eigen::Index fr = factor(r % deg, r / deg);
      const Eigen::Index fk = factor(k % deg, k / deg);
      worst = std::max(worst, std::abs(engine(r, k) - factorized(fr, fk)));
    }
  }
  return {degree, worst, worst < tolerance};
}

}  // namespace qwalk
