#pragma once

#include <cstddef>

#include "qwalk/coin_walk.hpp"
#include "qwalk/local_unitary.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// One step of the scattering walk, U_s = R + T.
///
/// Basis state (j, σ) is the walker entering node j through its port σ. At
/// node j the incoming amplitude on σ leaves through every port α with
/// weight Γ^(j)_{ασ} and becomes the state entering e(α;j) through γ(α;j).
/// The diagonal of Γ^(j) is the reflection part R, the off-diagonal the
/// transmission part T.
class ScatteringWalkOperator {
 public:
  ScatteringWalkOperator(PortedGraph graph, LocalUnitaryFamily gammas);

  const PortedGraph& graph() const { return graph_; }
  const LocalUnitaryFamily& gammas() const { return gammas_; }
  std::size_t dimension() const { return graph_.dimension(); }

 private:
  PortedGraph graph_;
  LocalUnitaryFamily gammas_;
};

WalkState step_scattering(const WalkState& state, const ScatteringWalkOperator& op);

/// R† + T†: the state entering j through σ is sent back to the node
/// k = e(σ;j) it came from, spread over the ports α of k with weight
/// conj(Γ^(k)_{γ(σ;j), α}).
WalkState step_scattering_adjoint(const WalkState& state, const ScatteringWalkOperator& op);

Matrix dense_matrix(const ScatteringWalkOperator& op, std::size_t cap = kDefaultDenseCap);

}  // namespace qwalk
