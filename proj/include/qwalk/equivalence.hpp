#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qwalk/coin_walk.hpp"
#include "qwalk/local_unitary.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/scattering_walk.hpp"
#include "qwalk/shift_permutation.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// A bijection of the port labels of every node onto themselves.
class EdgeLabelBijection {
 public:
  static EdgeLabelBijection identity(const PortedGraph& domain);
  /// One label per basis index of `domain`.
  static EdgeLabelBijection from_labels(PortedGraph domain, std::vector<Port> labels);
  /// Ports missing from `table` map to themselves. Throws PortOutOfRange or
  /// RestrictionViolated (two ports with the same image).
  static EdgeLabelBijection from_table(const PortedGraph& domain, const PortTable& table);
  /// Sends port σ of `from` to the port of `to` on the same physical edge.
  /// Throws EdgeSetMismatch unless the graphs have the same edges.
  static EdgeLabelBijection between(const PortedGraph& from, const PortedGraph& to);

  const PortedGraph& domain() const { return domain_; }
  Port operator()(NodeId j, Port sigma) const;
  Port inverse(NodeId j, Port label) const;
  /// Dense view: basis index of (j, σ) to the port it maps to.
  Port at(std::size_t b) const { return forward_[b]; }
  Port inverse_at(std::size_t b) const { return backward_[b]; }
  bool is_identity() const;
  PortTable table() const;

 private:
  EdgeLabelBijection(PortedGraph domain, std::vector<Port> forward);

  PortedGraph domain_;
  std::vector<Port> forward_;
  std::vector<Port> backward_;
};

/// Same ports, relabeled: port `relabel(σ;j)` of the result is port σ of
/// `graph`.
PortedGraph relabel_ports(const PortedGraph& graph, const EdgeLabelBijection& relabel);

/// Retags the scattering states so that each one shares its label with the
/// coin state it corresponds to. A scattering state entering j from k along
/// an edge whose coin port at j is τ = φ(σ;j) gets the label of the coin
/// port at j on which a walker shifted out of k along that edge lands:
///
///   ϕ(σ;j) = μ(γ_c(τ;j); e_c(τ;j))
///
/// `edge_map` is φ (scattering port -> coin port of the same edge); it is
/// checked against both labelings. Throws EdgeSetMismatch or NotSameEdge.
EdgeLabelBijection build_phi(const PortedGraph& scattering_graph, const EdgeLabelBijection& edge_map,
                             const ShiftPermutation& coin_shift);

/// Scattering matrices from coins, expressed in the retagged scattering
/// labels (rows permuted, columns untouched):
///
///   Γ^(j)_{ba} = c^(j)_{γ_c(ν(b;j); a(b;j)), a}
LocalUnitaryFamily gamma_from_coin(const LocalUnitaryFamily& coins, const ShiftPermutation& coin_shift);

/// The inverse row permutation:
///
///   c^(j)_{ba} = Γ^(j)_{μ(γ_c(b;j); e_c(b;j)), a}
LocalUnitaryFamily coin_from_gamma(const LocalUnitaryFamily& gammas, const ShiftPermutation& coin_shift);

/// The unitary E taking scattering states to coin states, together with the
/// labelings it connects. E sends the scattering state (j, σ) to the coin
/// state (j, ϕ(σ;j)); it is a permutation of basis indices that never
/// changes the node.
class EquivalenceMap {
 public:
  /// Both models share the coin labeling (φ = identity).
  explicit EquivalenceMap(ShiftPermutation coin_shift);
  /// φ is read off the two labelings.
  EquivalenceMap(ShiftPermutation coin_shift, PortedGraph scattering_graph);
  /// φ supplied explicitly and validated against both labelings.
  EquivalenceMap(ShiftPermutation coin_shift, PortedGraph scattering_graph, const EdgeLabelBijection& edge_map);

  const ShiftPermutation& coin_shift() const { return shift_; }
  const PortedGraph& coin_graph() const { return shift_.graph(); }
  const PortedGraph& scattering_graph() const { return scattering_; }
  /// φ
  const EdgeLabelBijection& edge_map() const { return edge_map_; }
  /// ϕ
  const EdgeLabelBijection& relabeling() const { return relabeling_; }

  /// The scattering labeling after retagging by ϕ. On it E is the identity
  /// index map and gamma_from_coin applies directly.
  PortedGraph relabeled_scattering_graph() const;

  std::size_t dimension() const { return image_.size(); }
  /// Coin index of E applied to scattering index b.
  std::size_t image(std::size_t b) const { return image_[b]; }
  std::size_t preimage(std::size_t b) const { return preimage_[b]; }

  /// E: scattering state -> coin state.
  WalkState apply(const WalkState& scattering) const;
  /// E†: coin state -> scattering state.
  WalkState apply_adjoint(const WalkState& coin) const;
  Matrix dense(std::size_t cap = kDefaultDenseCap) const;

  /// Scattering family in native scattering labels <-> retagged labels.
  LocalUnitaryFamily to_native_labels(const LocalUnitaryFamily& retagged) const;
  LocalUnitaryFamily to_retagged_labels(const LocalUnitaryFamily& native) const;

  /// gamma_from_coin followed by the change to native scattering labels.
  LocalUnitaryFamily scattering_from_coin(const LocalUnitaryFamily& coins) const;
  LocalUnitaryFamily coin_from_scattering(const LocalUnitaryFamily& gammas) const;

 private:
  ShiftPermutation shift_;
  PortedGraph scattering_;
  EdgeLabelBijection edge_map_;
  EdgeLabelBijection relabeling_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

struct EquivalenceOptions {
  double tolerance = 1e-12;
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t trials = 200;
  std::uint64_t seed = 20240601;
};

struct EquivalenceReport {
  std::size_t dimension = 0;
  bool dense_checked = false;
  /// max |U_s - E† U_c E| entrywise
  double dense_deviation = 0.0;
  std::size_t trials = 0;
  /// max over random ψ of ‖U_s ψ - E† U_c E ψ‖
  double sparse_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Compares the scattering step with E† U_c E, densely when the dimension is
/// within the cap and always on random states. Throws EdgeSetMismatch if the
/// operators were built on other labelings than `map`.
EquivalenceReport verify_equivalence(const CoinWalkOperator& coin_op, const ScatteringWalkOperator& scattering_op,
                                     const EquivalenceMap& map, const EquivalenceOptions& options = {});

/// Largest distance between matched eigenvalues of two square matrices.
/// Eigenvalues are paired greedily by proximity.
double spectral_deviation(const Matrix& a, const Matrix& b);

}  // namespace qwalk
