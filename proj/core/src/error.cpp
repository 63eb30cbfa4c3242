#include "cwm/error.hpp"

namespace cwm {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateVector: return "DegenerateVector";
    case ErrorCode::DegenerateWord: return "DegenerateWord";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::DegenerateMean: return "DegenerateMean";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::InsufficientNegatives: return "InsufficientNegatives";
    case ErrorCode::InsufficientCoverage: return "InsufficientCoverage";
    case ErrorCode::InfeasibleConstruction: return "InfeasibleConstruction";
    case ErrorCode::IncompatibleVocab: return "IncompatibleVocab";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cwm
