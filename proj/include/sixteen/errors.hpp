#pragma once

#include <stdexcept>
#include <string>

namespace sixteen {

// Base class for every domain error raised by the library. Each subclass
// corresponds to one named failure mode of an operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SIXTEEN_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

SIXTEEN_DEFINE_ERROR(ZeroPolynomial);
SIXTEEN_DEFINE_ERROR(NotASquare);
SIXTEEN_DEFINE_ERROR(CapExceeded);
SIXTEEN_DEFINE_ERROR(NotClosed);
SIXTEEN_DEFINE_ERROR(NotFound);
SIXTEEN_DEFINE_ERROR(ZeroNorm);
SIXTEEN_DEFINE_ERROR(BadPrime);
SIXTEEN_DEFINE_ERROR(DivisionFailure);
SIXTEEN_DEFINE_ERROR(DegenerateRoots);
SIXTEEN_DEFINE_ERROR(NotProportional);
SIXTEEN_DEFINE_ERROR(BudgetExhausted);
SIXTEEN_DEFINE_ERROR(NotMaximal);
SIXTEEN_DEFINE_ERROR(NoSamples);
SIXTEEN_DEFINE_ERROR(DegenerateRestriction);
SIXTEEN_DEFINE_ERROR(ParseError);

#undef SIXTEEN_DEFINE_ERROR

} // namespace sixteen
