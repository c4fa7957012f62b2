#include "ncox/error.hpp"

namespace ncox {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::DiagonalOutOfRange: return "DiagonalOutOfRange";
    case ErrorCode::OffDiagonalOutOfRange: return "OffDiagonalOutOfRange";
    case ErrorCode::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::DegreeExceedsComputation: return "DegreeExceedsComputation";
    case ErrorCode::CaseInapplicable: return "CaseInapplicable";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  return code != ErrorCode::RelationViolation && code != ErrorCode::InvariantViolation;
}

}  // namespace ncox
