#include "zkframes/error.hpp"

namespace zkf {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::SkewViolation: return "SkewViolation";
    case ErrorCode::CongruenceViolation: return "CongruenceViolation";
    case ErrorCode::MembershipViolation: return "MembershipViolation";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnknownLattice: return "UnknownLattice";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace zkf
