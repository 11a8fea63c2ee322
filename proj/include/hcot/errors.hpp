#pragma once

#include <stdexcept>
#include <string>

namespace hcot {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define HCOT_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                \
  public:                                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {}           \
  };

// Caller broke a documented precondition (shape mismatch, wrong algebra...).
HCOT_DEFINE_ERROR(ContractViolation)
HCOT_DEFINE_ERROR(NotAdmissible)
HCOT_DEFINE_ERROR(RelationViolated)
HCOT_DEFINE_ERROR(DecompositionInconclusive)
HCOT_DEFINE_ERROR(IsoInconclusive)
HCOT_DEFINE_ERROR(MinimalityInconclusive)
HCOT_DEFINE_ERROR(RadicalInconclusive)
HCOT_DEFINE_ERROR(ApproxNotSurjective)
HCOT_DEFINE_ERROR(NKernelEscapesM)
HCOT_DEFINE_ERROR(RepresentativeEscapesM)
HCOT_DEFINE_ERROR(EnumerationTooLarge)
HCOT_DEFINE_ERROR(UniverseTooLarge)
HCOT_DEFINE_ERROR(InputError)

#undef HCOT_DEFINE_ERROR

}  // namespace hcot
