#pragma once

#include <stdexcept>
#include <string>

namespace spnt {

/// Coarse failure class; the CLI maps these onto process exit codes.
enum class ErrorKind {
  Config,     // bad input, malformed file, precondition violated
  Capacity,   // a table or buffer is too short for the request
  Tolerance,  // a numerical accuracy target could not be met
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SPNT_DEFINE_ERROR(Name, Kind)                                        \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

SPNT_DEFINE_ERROR(PoleError, Config)
SPNT_DEFINE_ERROR(DomainError, Config)
SPNT_DEFINE_ERROR(RangeError, Config)
SPNT_DEFINE_ERROR(ParseError, Config)
SPNT_DEFINE_ERROR(OrderError, Config)
SPNT_DEFINE_ERROR(EmptySetError, Config)
SPNT_DEFINE_ERROR(NearSingular, Config)
SPNT_DEFINE_ERROR(NormalizationError, Config)
SPNT_DEFINE_ERROR(AliasError, Config)
SPNT_DEFINE_ERROR(CapacityError, Capacity)
SPNT_DEFINE_ERROR(AccuracyError, Tolerance)
SPNT_DEFINE_ERROR(ToleranceError, Tolerance)

#undef SPNT_DEFINE_ERROR

}  // namespace spnt
