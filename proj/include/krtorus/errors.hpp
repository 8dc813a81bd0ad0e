#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace krtorus {

/// Failure of a mathematical precondition. `kind()` is a stable identifier
/// used by the command-line front end ("NotAnInvolution", ...).
class MathDomainError : public std::runtime_error {
 public:
  MathDomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define KRTORUS_DEFINE_ERROR(Name)                               \
  class Name : public MathDomainError {                          \
   public:                                                       \
    explicit Name(const std::string& message)                    \
        : MathDomainError(#Name, message) {}                     \
  };

KRTORUS_DEFINE_ERROR(DenominatorNotContained)
KRTORUS_DEFINE_ERROR(DimensionMismatch)
KRTORUS_DEFINE_ERROR(NotAModule)
KRTORUS_DEFINE_ERROR(DegreeZeroUnsupported)
KRTORUS_DEFINE_ERROR(NotAnInvolution)
KRTORUS_DEFINE_ERROR(UnresolvedSignature)
KRTORUS_DEFINE_ERROR(InvalidGerbe)
KRTORUS_DEFINE_ERROR(GradedInput)
KRTORUS_DEFINE_ERROR(LedgerIncomplete)
KRTORUS_DEFINE_ERROR(UnsupportedProduct)
KRTORUS_DEFINE_ERROR(NoFixedPoint)

#undef KRTORUS_DEFINE_ERROR

}  // namespace krtorus
