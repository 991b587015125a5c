#include "crossmap/error.hpp"

namespace crossmap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InvalidLabels: return "InvalidLabels";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::TooManyArcs: return "TooManyArcs";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::OutOfBudget: return "OutOfBudget";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::NetworkError: return "NetworkError";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace crossmap
