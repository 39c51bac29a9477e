#include "ebelyi/error.hpp"

namespace eb {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotEuclidean: return "NotEuclidean";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::WrongCurve: return "WrongCurve";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::LatticePoint: return "LatticePoint";
    case ErrorKind::RecognitionFailed: return "RecognitionFailed";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::NotAKernel: return "NotAKernel";
    case ErrorKind::NoIsomorphism: return "NoIsomorphism";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
  }
  return "Unknown";
}

std::string Error::compose(ErrorKind kind, const std::string& msg, const std::string& stage) {
  std::string s = error_kind_name(kind);
  if (!stage.empty()) s += " [" + stage + "]";
  if (!msg.empty()) s += ": " + msg;
  return s;
}

Error Error::at_stage(const std::string& stage) const { return Error(kind_, msg_, stage); }

bool is_precision_error(ErrorKind k) {
  return k == ErrorKind::RecognitionFailed || k == ErrorKind::AmbiguousMatch ||
         k == ErrorKind::PrecisionExhausted || k == ErrorKind::NotAKernel;
}

}  // namespace eb
