#include "deephole/error.hpp"

namespace deephole {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::OddCharRequired: return "OddCharRequired";
        case Errc::DuplicateNode: return "DuplicateNode";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::EvaluationSetContainsB: return "EvaluationSetContainsB";
        case Errc::SpecViolation: return "SpecViolation";
        case Errc::SubsetSizeMismatch: return "SubsetSizeMismatch";
        case Errc::NonIntegerResult: return "NonIntegerResult";
        case Errc::NonPrimeField: return "NonPrimeField";
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::CharacteristicDividesTPlusOne: return "CharacteristicDividesTPlusOne";
        case Errc::SizeOutOfRange: return "SizeOutOfRange";
        case Errc::RangeViolation: return "RangeViolation";
        case Errc::NoSolutionFound: return "NoSolutionFound";
    }
    return "Unknown";
}

}  // namespace deephole
