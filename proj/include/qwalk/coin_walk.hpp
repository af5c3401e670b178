#pragma once

#include <cstddef>

#include "qwalk/local_unitary.hpp"
#include "qwalk/shift_permutation.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

inline constexpr std::size_t kDefaultDenseCap = 4096;

/// One step of the coin walk: U_c = S · (⊕_j C^(j)).
class CoinWalkOperator {
 public:
  /// Throws DimensionMismatch if a coin does not match its node's degree and
  /// ModelMismatch if the family is not tagged as coins.
  CoinWalkOperator(ShiftPermutation shift, LocalUnitaryFamily coins);

  const PortedGraph& graph() const { return shift_.graph(); }
  const ShiftPermutation& shift() const { return shift_; }
  const LocalUnitaryFamily& coins() const { return coins_; }
  std::size_t dimension() const { return shift_.graph().dimension(); }

 private:
  ShiftPermutation shift_;
  LocalUnitaryFamily coins_;
};

/// |j,σ⟩ -> |e(σ;j), μ(σ;j)⟩
WalkState apply_shift(const WalkState& state, const ShiftPermutation& shift);
/// |j,σ⟩ -> |a(σ;j), ν(σ;j)⟩
WalkState apply_shift_adjoint(const WalkState& state, const ShiftPermutation& shift);
/// Block-diagonal coin: C^(j)|j,σ⟩ = Σ_σ' c_{σ'σ} |j,σ'⟩.
WalkState apply_coin(const WalkState& state, const PortedGraph& graph, const LocalUnitaryFamily& coins);

WalkState step_coin(const WalkState& state, const CoinWalkOperator& op);

/// Column k is step_coin of basis vector k. DimensionCapExceeded above `cap`.
Matrix dense_matrix(const CoinWalkOperator& op, std::size_t cap = kDefaultDenseCap);

struct DecompositionReport {
  int degree = 0;
  double max_deviation = 0.0;
  bool passed = false;
};

/// On an N-regular graph with a single coin C the coin space factorizes as
/// |σ⟩ ⊗ |j⟩ and the coin block becomes C ⊗ I. Builds S · (C ⊗ I) directly
/// in that factorized order, reorders it to node-major order and compares
/// with dense_matrix(op).
///
/// Throws NotRegular or NonUniformCoin when the premise does not hold.
DecompositionReport tensor_decomposition_check(const CoinWalkOperator& op, double tolerance = 1e-12);

}  // namespace qwalk
