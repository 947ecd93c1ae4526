#pragma once

#include <stdexcept>
#include <string>

namespace ssf {

enum class ErrorCode {
  InvalidArgument,
  EmptyWeights,
  WeightOutOfRange,
  DensityOverflow,
  ParseError,
  ModulusTooLarge,
  InstanceTooLarge,
  DegenerateModulus,
  DegenerateDenominator,
  SolutionInstanceMismatch,
  NotACollision,
  HypothesisViolated,
  SetsNotFree,
  NotInjective,
  Surjective,
  NoBoundaryGap,
  OutputTooLarge,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ssf
