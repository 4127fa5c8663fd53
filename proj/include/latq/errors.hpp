#pragma once

#include <stdexcept>
#include <string>

namespace latq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input errors.
struct DuplicateLabel final : Error { using Error::Error; };
struct UnknownLabel final : Error { using Error::Error; };
struct UnknownElement final : Error { using Error::Error; };
struct CycleDetected final : Error { using Error::Error; };
struct ParameterOutOfRange final : Error { using Error::Error; };
struct ParseError final : Error { using Error::Error; };
struct UsageError final : Error { using Error::Error; };

// Algebraic / numeric errors.
struct BoundMissing final : Error { using Error::Error; };
struct NotALattice final : Error { using Error::Error; };
struct NonFiniteInput final : Error { using Error::Error; };
struct MissingSeed final : Error { using Error::Error; };
struct DomainError final : Error { using Error::Error; };
struct ShapeMismatch final : Error { using Error::Error; };
struct NotDistributive final : Error { using Error::Error; };
struct NonPositiveValuation final : Error { using Error::Error; };
struct InconsistentValuation final : Error { using Error::Error; };
struct ZeroDenominator final : Error { using Error::Error; };

// Question-lattice errors.
struct UnknownStatement final : Error { using Error::Error; };
struct SpaceMismatch final : Error { using Error::Error; };
struct TooManyAtoms final : Error { using Error::Error; };
struct InvalidPartition final : Error { using Error::Error; };
struct DegeneratePrior final : Error { using Error::Error; };
struct NotReducible final : Error { using Error::Error; };
struct InvalidDistribution final : Error { using Error::Error; };

}  // namespace latq
