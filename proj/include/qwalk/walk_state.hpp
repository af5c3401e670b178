#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

/// Which walk a state vector belongs to. Coin states index (j, σ) as the
/// walker sitting on node j with direction σ; scattering states index
/// (j, σ) as the walker travelling into node j along its port σ.
enum class Model { Coin, Scattering };

const char* to_string(Model model);

/// Amplitudes over the half-edge basis of a ported graph.
class WalkState {
 public:
  /// Inputs whose norm is off by more than this are rejected.
  static constexpr double kNormTolerance = 1e-9;

  /// Throws NormViolation when |‖ψ‖ - 1| > kNormTolerance, otherwise
  /// rescales to unit norm.
  static WalkState normalized(Model model, std::vector<Complex> amplitudes);
  static WalkState basis(Model model, std::size_t dimension, std::size_t index);
  /// Takes the amplitudes as they are. Used for operator outputs.
  static WalkState raw(Model model, std::vector<Complex> amplitudes);

  Model model() const { return model_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t b) const { return amplitudes_[b]; }
  double norm() const;

 private:
  WalkState(Model model, std::vector<Complex> amplitudes)
      : model_(model), amplitudes_(std::move(amplitudes)) {}

  Model model_ = Model::Coin;
  std::vector<Complex> amplitudes_;
};

void require_model(const WalkState& state, Model expected);
void require_dimension(const WalkState& state, std::size_t expected);

}  // namespace qwalk
