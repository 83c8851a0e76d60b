#ifndef HCLP_ERROR_HPP
#define HCLP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hclp {

/// Failure categories. Each one maps to a stable identifier used in CLI
/// envelopes, so scripts can branch on the kind of failure.
enum class ErrorCode {
  NameResolution,
  DuplicateName,
  NegativeCost,
  MalformedRational,
  ZeroDenominator,
  MissingCost,
  InvalidModel,
  InvalidPartition,
  InvalidTieOrder,
  InvalidStatement,
  PreconditionViolation,
  SizeGuard,
  InvalidParameter,
  NotACountermodel,
  IncompleteAssignment,
  NameCollision,
  Syntax,
  MissingField,
  WrongType,
  ConflictingOptions,
  Dimacs,
  Io,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NameResolution: return "name_resolution";
    case ErrorCode::DuplicateName: return "duplicate_name";
    case ErrorCode::NegativeCost: return "negative_cost";
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::ZeroDenominator: return "zero_denominator";
    case ErrorCode::MissingCost: return "missing_cost";
    case ErrorCode::InvalidModel: return "invalid_model";
    case ErrorCode::InvalidPartition: return "invalid_partition";
    case ErrorCode::InvalidTieOrder: return "invalid_tie_order";
    case ErrorCode::InvalidStatement: return "invalid_statement";
    case ErrorCode::PreconditionViolation: return "precondition_violation";
    case ErrorCode::SizeGuard: return "size_guard";
    case ErrorCode::InvalidParameter: return "invalid_parameter";
    case ErrorCode::NotACountermodel: return "not_a_countermodel";
    case ErrorCode::IncompleteAssignment: return "incomplete_assignment";
    case ErrorCode::NameCollision: return "name_collision";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::MissingField: return "missing_field";
    case ErrorCode::WrongType: return "wrong_type";
    case ErrorCode::ConflictingOptions: return "conflicting_options";
    case ErrorCode::Dimacs: return "dimacs";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  /// `location` names the offending part of the input, e.g. a line number or
  /// a JSON pointer such as /evaluations/c2.
  Error(ErrorCode code, const std::string& message, std::string location)
      : std::runtime_error(location.empty() ? message : location + ": " + message),
        code_(code),
        location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace hclp

#endif  // HCLP_ERROR_HPP
