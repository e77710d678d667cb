#pragma once

#include <stdexcept>
#include <string>

namespace qcpg {

// Every failure mode surfaced by the library. Witness details (indices,
// offending values) go into the message; tests and the CLI dispatch on the
// code.
enum class ErrorCode {
    NotPrime,
    NotPrimePower,
    DoesNotDivide,
    IndexOutOfRange,
    DuplicateIndex,
    DimensionMismatch,
    DisconnectedMask,
    WrongOrigin,
    ShiftOutOfRange,
    SectionWeightExceeded,
    NotBlockStructured,
    NonIntegral,
    WrongShape,
    ContainsZeroBlock,
    RcViolation,
    DiagonalMismatch,
    TwosCountMismatch,
    EntryOutOfRange,
    AxiomViolation,
    NotBlockCertified,
    TooManyDropped,
    UnsupportedLength,
    DeltaIsOne,
    NotGQ,
    NotBiregular,
    NotRcConstrained,
    NonIntegralMultiplicity,
    AlphaOutOfRange,
    TooLarge,
    SpectrumMismatch,
    EmptySet,
    InconsistentProfile,
    NotANet,
    NotAParallelBundle,
    BudgetExceeded,
    BoundViolation,
    LengthMismatch,
    InvalidRate,
    ConfigInvalid,
    IoFailure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace qcpg
