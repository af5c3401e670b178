#include "qwalk/local_unitary.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(UnitaryRole role) {
  return role == UnitaryRole::Coin ? "coin" : "gamma";
}

double unitarity_deviation(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

Matrix standard_matrix(StandardUnitary kind, int size) {
  const double n = static_cast<double>(size);
  switch (kind) {
    case StandardUnitary::Identity:
      return Matrix::Identity(size, size);
    case StandardUnitary::Hadamard: {
      if (size != 2)
        throw Error(ErrorKind::DimensionMismatch,
                    "Hadamard coin needs degree 2, got " + std::to_string(size));
      Matrix h(2, 2);
      const double s = std::numbers::sqrt2 / 2.0;
      h << s, s, s, -s;
      return h;
    }
    case StandardUnitary::Grover:
      return Matrix::Constant(size, size, 2.0 / n) - Matrix::Identity(size, size);
    case StandardUnitary::Dft: {
      Matrix f(size, size);
      const double scale = 1.0 / std::sqrt(n);
      for (int a = 1; a <= size; ++a) {
        for (int b = 1; b <= size; ++b) {
          // Reduce the exponent first so large degrees keep full accuracy.
          const double turn = static_cast<double>((a * b) % size) / n;
          f(a - 1, b - 1) = std::polar(scale, 2.0 * std::numbers::pi * turn);
        }
      }
      return f;
    }
  }
  return {};
}

LocalUnitaryFamily::LocalUnitaryFamily(UnitaryRole role, std::vector<Matrix> matrices)
    : LocalUnitaryFamily(role, std::move(matrices), true) {}

LocalUnitaryFamily::LocalUnitaryFamily(UnitaryRole role, std::vector<Matrix> matrices, bool check)
    : role_(role), matrices_(std::move(matrices)) {
  if (!check) return;
  for (std::size_t n = 0; n < matrices_.size(); ++n) {
    const double dev = unitarity_deviation(matrices_[n]);
    if (!(dev < kUnitarityTolerance))
      throw Error(ErrorKind::UnitarityViolation, std::string(to_string(role_)) + " matrix at node index " +
                                                     std::to_string(n) + " deviates from unitary by " +
                                                     std::to_string(dev));
  }
}

LocalUnitaryFamily LocalUnitaryFamily::unchecked(UnitaryRole role, std::vector<Matrix> matrices) {
  return LocalUnitaryFamily(role, std::move(matrices), false);
}

LocalUnitaryFamily LocalUnitaryFamily::standard(const PortedGraph& graph, UnitaryRole role,
                                                StandardUnitary kind,
                                                const std::map<NodeId, Matrix>& overrides) {
  for (const auto& [node, m] : overrides) {
    if (!graph.contains(node))
      throw Error(ErrorKind::UnknownNode, "override for node " + std::to_string(node));
  }
  std::vector<Matrix> matrices;
  matrices.reserve(graph.node_count());
  for (std::size_t n = 0; n < graph.node_count(); ++n) {
    const NodeId j = graph.node_id(n);
    if (auto it = overrides.find(j); it != overrides.end()) {
      matrices.push_back(it->second);
      continue;
    }
    try {
      matrices.push_back(standard_matrix(kind, graph.degree_at(n)));
    } catch (const Error& e) {
      throw Error(e.kind(), "node " + std::to_string(j) + ": " + e.detail());
    }
  }
  const auto shaped = unchecked(role, std::move(matrices));
  shaped.check_dimensions(graph);
  return LocalUnitaryFamily(role, shaped.matrices_);
}

void LocalUnitaryFamily::check_dimensions(const PortedGraph& graph) const {
  if (matrices_.size() != graph.node_count())
    throw Error(ErrorKind::DimensionMismatch, std::to_string(matrices_.size()) + " matrices for " +
                                                  std::to_string(graph.node_count()) + " nodes");
  for (std::size_t n = 0; n < matrices_.size(); ++n) {
    const auto d = graph.degree_at(n);
    if (matrices_[n].rows() != d || matrices_[n].cols() != d)
      throw Error(ErrorKind::DimensionMismatch,
                  "node " + std::to_string(graph.node_id(n)) + " has degree " + std::to_string(d) + " but its " +
                      to_string(role_) + " matrix is " + std::to_string(matrices_[n].rows()) + "x" +
                      std::to_string(matrices_[n].cols()));
  }
}

double LocalUnitaryFamily::max_unitarity_deviation() const {
  double worst = 0.0;
  for (const auto& m : matrices_) worst = std::max(worst, unitarity_deviation(m));
  return worst;
}

bool LocalUnitaryFamily::is_uniform() const {
  for (const auto& m : matrices_) {
    if (m.rows() != matrices_.front().rows() || m.cols() != matrices_.front().cols() || m != matrices_.front())
      return false;
  }
  return true;
}

bool LocalUnitaryFamily::operator==(const LocalUnitaryFamily& other) const {
  if (role_ != other.role_ || matrices_.size() != other.matrices_.size()) return false;
  for (std::size_t n = 0; n < matrices_.size(); ++n) {
    const auto& a = matrices_[n];
    const auto& b = other.matrices_[n];
    if (a.rows() != b.rows() || a.cols() != b.cols() || a != b) return false;
  }
  return true;
}

}  // namespace qwalk
