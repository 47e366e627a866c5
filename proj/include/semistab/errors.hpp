#pragma once

#include <stdexcept>
#include <string>

namespace semistab {

// Base class for all domain errors raised by the library. The CLI maps
// ParseError to exit 2 and every other Error to exit 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SEMISTAB_DEFINE_ERROR(Name)                                 \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

SEMISTAB_DEFINE_ERROR(DivisionByZero);
SEMISTAB_DEFINE_ERROR(DimensionMismatch);
SEMISTAB_DEFINE_ERROR(SingularMatrix);
SEMISTAB_DEFINE_ERROR(SpectrumNotRational);
SEMISTAB_DEFINE_ERROR(NotNilpotent);
SEMISTAB_DEFINE_ERROR(NotUnipotent);
SEMISTAB_DEFINE_ERROR(NotAnEigenvalue);
SEMISTAB_DEFINE_ERROR(SingularConjugator);
SEMISTAB_DEFINE_ERROR(ShapeMismatch);
SEMISTAB_DEFINE_ERROR(HypothesisNotMet);
SEMISTAB_DEFINE_ERROR(UnsupportedEigenvalue);
SEMISTAB_DEFINE_ERROR(InvalidRepresentation);
SEMISTAB_DEFINE_ERROR(NonUnitProduct);
SEMISTAB_DEFINE_ERROR(NoEigenspaceSplit);
SEMISTAB_DEFINE_ERROR(NoSplitPoint);
SEMISTAB_DEFINE_ERROR(NonIntegralDifference);
SEMISTAB_DEFINE_ERROR(BadNuSum);
SEMISTAB_DEFINE_ERROR(ZeroNu);
SEMISTAB_DEFINE_ERROR(TooFewPunctures);
SEMISTAB_DEFINE_ERROR(GenusTooSmall);
SEMISTAB_DEFINE_ERROR(BadRankParity);
SEMISTAB_DEFINE_ERROR(OutOfTheoremRange);
SEMISTAB_DEFINE_ERROR(PreconditionFailed);
SEMISTAB_DEFINE_ERROR(GenericityExhausted);
SEMISTAB_DEFINE_ERROR(UnsupportedMatrix);
SEMISTAB_DEFINE_ERROR(ParseError);

#undef SEMISTAB_DEFINE_ERROR

}  // namespace semistab
