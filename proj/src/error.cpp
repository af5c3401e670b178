#include "qwalk/error.hpp"

namespace qwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::PortOutOfRange: return "PortOutOfRange";
    case ErrorKind::InvalidPortOrder: return "InvalidPortOrder";
    case ErrorKind::RangeViolated: return "RangeViolated";
    case ErrorKind::RestrictionViolated: return "RestrictionViolated";
    case ErrorKind::EdgeSetMismatch: return "EdgeSetMismatch";
    case ErrorKind::NotSameEdge: return "NotSameEdge";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NonUniformCoin: return "NonUniformCoin";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnitarityViolation: return "UnitarityViolation";
    case ErrorKind::NormViolation: return "NormViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnitarityViolation:
    case ErrorKind::NormViolation:
      return ErrorCategory::Numerical;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DimensionCapExceeded:
      return ErrorCategory::Dimension;
    default:
      return ErrorCategory::Config;
  }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace qwalk
