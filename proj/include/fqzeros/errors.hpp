#ifndef FQZEROS_ERRORS_HPP
#define FQZEROS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqzeros {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FQZEROS_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

FQZEROS_DEFINE_ERROR(NotPrimePower);
FQZEROS_DEFINE_ERROR(DivisionByZero);
FQZEROS_DEFINE_ERROR(FieldMismatch);
FQZEROS_DEFINE_ERROR(IndexOutOfRange);
FQZEROS_DEFINE_ERROR(MixedParameters);
FQZEROS_DEFINE_ERROR(OutOfValidity);
FQZEROS_DEFINE_ERROR(DegreeTooLarge);
FQZEROS_DEFINE_ERROR(BothZero);
FQZEROS_DEFINE_ERROR(AllZero);
FQZEROS_DEFINE_ERROR(DivisionByZeroPoly);
FQZEROS_DEFINE_ERROR(RankDeficient);
FQZEROS_DEFINE_ERROR(NotClose);
FQZEROS_DEFINE_ERROR(NotCoprimeClose);
FQZEROS_DEFINE_ERROR(StructureViolation);
FQZEROS_DEFINE_ERROR(BadLambdas);
FQZEROS_DEFINE_ERROR(TooMany);
FQZEROS_DEFINE_ERROR(BudgetExceeded);
FQZEROS_DEFINE_ERROR(PointOnL);
FQZEROS_DEFINE_ERROR(ParseError);
FQZEROS_DEFINE_ERROR(TooLarge);
FQZEROS_DEFINE_ERROR(Overflow);

#undef FQZEROS_DEFINE_ERROR

}  // namespace fqzeros

#endif
