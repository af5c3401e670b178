#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwalk {

enum class ErrorKind {
  // graph construction and configuration
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
  UnknownNode,
  PortOutOfRange,
  InvalidPortOrder,
  RangeViolated,
  RestrictionViolated,
  EdgeSetMismatch,
  NotSameEdge,
  NotRegular,
  NonUniformCoin,
  ModeMismatch,
  ModelMismatch,
  ParseError,
  // numerical validation
  UnitarityViolation,
  NormViolation,
  // dimensions
  DimensionMismatch,
  DimensionCapExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Coarse grouping used by the CLI to pick an exit status.
enum class ErrorCategory { Config, Numerical, Dimension };

ErrorCategory category_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace qwalk
