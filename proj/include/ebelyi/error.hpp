#pragma once

#include <stdexcept>
#include <string>

namespace eb {

enum class ErrorKind {
  ParseError,
  DegreeMismatch,
  RelationViolated,
  NotTransitive,
  NotEuclidean,
  InternalInconsistency,
  RankDeficient,
  NonIntegral,
  DivisionByZero,
  WrongCurve,
  PrecisionExhausted,
  LatticePoint,
  RecognitionFailed,
  AmbiguousMatch,
  NotAKernel,
  NoIsomorphism,
  UnsupportedCase,
  ShapeViolation,
  NotInvariant,
  ProfileMismatch,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, std::string stage = {})
      : std::runtime_error(compose(kind, msg, stage)),
        kind_(kind),
        msg_(msg),
        stage_(std::move(stage)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }
  const std::string& message() const { return msg_; }

  // Copy of this error with the pipeline stage attached.
  Error at_stage(const std::string& stage) const;

 private:
  static std::string compose(ErrorKind kind, const std::string& msg, const std::string& stage);

  ErrorKind kind_;
  std::string msg_;
  std::string stage_;
};

// True for errors that a higher working precision may cure.
bool is_precision_error(ErrorKind k);

}  // namespace eb
