#ifndef QH_ERRORS_HPP
#define QH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qh {

// Validation errors: bad input data or a violated operation precondition.
// The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violations: a proved identity failed at runtime, e.g. a
// counterexample to an algebraic lemma.  The CLI maps these to exit code 2.
struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

#define QH_VALIDATION_ERROR_TYPE(NAME)                                          \
    struct NAME : ValidationError {                                             \
        explicit NAME(const std::string& what) : ValidationError(#NAME ": " + what) {} \
    }

QH_VALIDATION_ERROR_TYPE(ParseError);
QH_VALIDATION_ERROR_TYPE(ZeroElement);
QH_VALIDATION_ERROR_TYPE(NotAUnit);
QH_VALIDATION_ERROR_TYPE(FloorTooHigh);
QH_VALIDATION_ERROR_TYPE(SingularPairing);
QH_VALIDATION_ERROR_TYPE(MissingTableEntry);
QH_VALIDATION_ERROR_TYPE(TableExhausted);
QH_VALIDATION_ERROR_TYPE(DegreeMismatch);
QH_VALIDATION_ERROR_TYPE(ShapeViolation);
QH_VALIDATION_ERROR_TYPE(PatternViolation);
QH_VALIDATION_ERROR_TYPE(WitnessAbsent);
QH_VALIDATION_ERROR_TYPE(ZeroUnitCoefficient);
QH_VALIDATION_ERROR_TYPE(NonPositiveEnergyTail);
QH_VALIDATION_ERROR_TYPE(MissingPairing);
QH_VALIDATION_ERROR_TYPE(DescendentUnderflow);
QH_VALIDATION_ERROR_TYPE(OracleUnavailable);
QH_VALIDATION_ERROR_TYPE(HypothesisViolation);
QH_VALIDATION_ERROR_TYPE(FactorizationIncomplete);

#undef QH_VALIDATION_ERROR_TYPE

} // namespace qh

#endif
