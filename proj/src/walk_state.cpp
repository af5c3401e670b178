#include "qwalk/walk_state.hpp"

#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(Model model) {
  return model == Model::Coin ? "coin" : "scattering";
}

WalkState WalkState::normalized(Model model, std::vector<Complex> amplitudes) {
  WalkState state(model, std::move(amplitudes));
  const double n = state.norm();
  if (!(std::abs(n - 1.0) <= kNormTolerance))
    throw Error(ErrorKind::NormViolation, "state norm " + std::to_string(n) + " is not 1");
  for (auto& a : state.amplitudes_) a /= n;
  return state;
}

WalkState WalkState::basis(Model model, std::size_t dimension, std::size_t index) {
  if (index >= dimension)
    throw Error(ErrorKind::DimensionMismatch,
                "basis index " + std::to_string(index) + " in dimension " + std::to_string(dimension));
  std::vector<Complex> amplitudes(dimension);
  amplitudes[index] = 1.0;
  return WalkState(model, std::move(amplitudes));
}

WalkState WalkState::raw(Model model, std::vector<Complex> amplitudes) {
  return WalkState(model, std::move(amplitudes));
}

double WalkState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void require_model(const WalkState& state, Model expected) {
  if (state.model() != expected)
    throw Error(ErrorKind::ModelMismatch, std::string("expected a ") + to_string(expected) + " state, got a " +
                                              to_string(state.model()) + " state");
}

void require_dimension(const WalkState& state, std::size_t expected) {
  if (state.dimension() != expected)
    throw Error(ErrorKind::DimensionMismatch, "state has dimension " + std::to_string(state.dimension()) +
                                                  ", operator expects " + std::to_string(expected));
}

}  // namespace qwalk
