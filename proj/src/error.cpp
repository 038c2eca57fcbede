#include "subspectra/error.hpp"

namespace subspectra {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyArcSet: return "EmptyArcSet";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NotOutRegular: return "NotOutRegular";
    case ErrorCode::UnsupportedMatrixKind: return "UnsupportedMatrixKind";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

}  // namespace subspectra
