#pragma once

#include <stdexcept>
#include <string>

namespace cga {

/// Base of every error raised by the engine. `kind()` is a stable tag used
/// in JSON failure reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CGA_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

CGA_DEFINE_ERROR(NotMonomial)
CGA_DEFINE_ERROR(ZeroDivisor)
CGA_DEFINE_ERROR(ChartMismatch)
CGA_DEFINE_ERROR(RelationViolation)
CGA_DEFINE_ERROR(UnsupportedWeight)
CGA_DEFINE_ERROR(BadEll)
CGA_DEFINE_ERROR(NotClosed)
CGA_DEFINE_ERROR(NoSolution)
CGA_DEFINE_ERROR(NonUniqueSolution)
CGA_DEFINE_ERROR(NotLaurent)
CGA_DEFINE_ERROR(NotProportional)
CGA_DEFINE_ERROR(Mismatch)
CGA_DEFINE_ERROR(NormalizationUnavailable)
CGA_DEFINE_ERROR(NotTriangular)
CGA_DEFINE_ERROR(DiagonalDependsOnC)
CGA_DEFINE_ERROR(Inconsistent)
CGA_DEFINE_ERROR(GradingViolation)
CGA_DEFINE_ERROR(JacobiFailure)
CGA_DEFINE_ERROR(ParseError)

#undef CGA_DEFINE_ERROR

}  // namespace cga
