#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <vector>

#include "qwalk/ported_graph.hpp"

namespace qwalk {

using Matrix = Eigen::MatrixXcd;

/// Coin matrices C^(j) act on the directions at a node; scattering
/// matrices Γ^(j) send incoming amplitude on port σ to outgoing amplitude on
/// port α with weight Γ_{ασ} (diagonal: reflection, off-diagonal:
/// transmission).
enum class UnitaryRole { Coin, Scattering };

enum class StandardUnitary { Identity, Hadamard, Grover, Dft };

const char* to_string(UnitaryRole role);

/// Max entry of |M†M - I|.
double unitarity_deviation(const Matrix& m);

/// Identity, Hadamard (size 2 only), Grover (2/N)J - I, or the DFT
/// F_{ab} = exp(2πi a b / N) / √N with a, b running over 1..N.
Matrix standard_matrix(StandardUnitary kind, int size);

/// One N_j x N_j unitary per node, in node-index order.
class LocalUnitaryFamily {
 public:
  static constexpr double kUnitarityTolerance = 1e-12;

  /// Throws UnitarityViolation if any matrix misses the tolerance.
  LocalUnitaryFamily(UnitaryRole role, std::vector<Matrix> matrices);

  /// Skips the unitarity check. Only for diagnostics on suspect input.
  static LocalUnitaryFamily unchecked(UnitaryRole role, std::vector<Matrix> matrices);

  /// `kind` at every node, replaced by `overrides` where given.
  static LocalUnitaryFamily standard(const PortedGraph& graph, UnitaryRole role, StandardUnitary kind,
                                     const std::map<NodeId, Matrix>& overrides = {});

  UnitaryRole role() const { return role_; }
  std::size_t size() const { return matrices_.size(); }
  const Matrix& operator[](std::size_t node_index) const { return matrices_[node_index]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// DimensionMismatch unless there is one matrix per node of size N_j.
  void check_dimensions(const PortedGraph& graph) const;
  double max_unitarity_deviation() const;
  /// True when every node carries exactly the same matrix.
  bool is_uniform() const;

  bool operator==(const LocalUnitaryFamily& other) const;

 private:
  LocalUnitaryFamily(UnitaryRole role, std::vector<Matrix> matrices, bool check);

  UnitaryRole role_;
  std::vector<Matrix> matrices_;
};

}  // namespace qwalk
