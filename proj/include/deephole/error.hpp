#ifndef DEEPHOLE_ERROR_HPP
#define DEEPHOLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace deephole {

enum class Errc {
    InvalidInput,
    DivisionByZero,
    FieldMismatch,
    OddCharRequired,
    DuplicateNode,
    ZeroPolynomial,
    BudgetExceeded,
    DegreeOutOfRange,
    EvaluationSetContainsB,
    SpecViolation,
    SubsetSizeMismatch,
    NonIntegerResult,
    NonPrimeField,
    ZeroParameter,
    CharacteristicDividesTPlusOne,
    SizeOutOfRange,
    RangeViolation,
    NoSolutionFound,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace deephole

#endif
