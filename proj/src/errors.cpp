#include "ckforms/errors.hpp"

namespace ckforms {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::SignatureViolation: return "SignatureViolation";
    case ErrorKind::IncompatiblePair: return "IncompatiblePair";
    case ErrorKind::ThetaIncompatibleEmbedding: return "ThetaIncompatibleEmbedding";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotAComplexificationPair: return "NotAComplexificationPair";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::NotARingMap: return "NotARingMap";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ckforms
