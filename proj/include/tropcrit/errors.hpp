#pragma once

#include <stdexcept>
#include <string>

namespace tropcrit {

// Every domain failure carries a stable code string; the CLI echoes it in JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TROPCRIT_ERROR(Name)                                                   \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

TROPCRIT_ERROR(ZeroSeries);
TROPCRIT_ERROR(PrecisionExhausted);
TROPCRIT_ERROR(DivisionByZeroSeries);
TROPCRIT_ERROR(NotSubtractionFree);
TROPCRIT_ERROR(NonIntegralWeight);
TROPCRIT_ERROR(RankTooLarge);
TROPCRIT_ERROR(NotDominant);
TROPCRIT_ERROR(NotIdeal);
TROPCRIT_ERROR(DimensionMismatch);
TROPCRIT_ERROR(NoConvergence);
TROPCRIT_ERROR(NotInBigCell);
TROPCRIT_ERROR(SymbolicBlowup);
TROPCRIT_ERROR(FactorizationAmbiguity);
TROPCRIT_ERROR(LowestWeightAmbiguous);
TROPCRIT_ERROR(NoSolution);
TROPCRIT_ERROR(NotIntegral);
TROPCRIT_ERROR(ZeroSection);
TROPCRIT_ERROR(InvalidWord);
TROPCRIT_ERROR(InternalError);

#undef TROPCRIT_ERROR

} // namespace tropcrit
