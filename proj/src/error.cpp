#include "framecraft/error.hpp"

namespace framecraft {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::RepMismatch: return "RepMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidIrrepTable: return "InvalidIrrepTable";
    case ErrorCode::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::NotInCyclicSpan: return "NotInCyclicSpan";
    case ErrorCode::NotTwoTransitive: return "NotTwoTransitive";
    case ErrorCode::BadPsi: return "BadPsi";
    case ErrorCode::GeneratorsOutsideVJ: return "GeneratorsOutsideVJ";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

}  // namespace framecraft
