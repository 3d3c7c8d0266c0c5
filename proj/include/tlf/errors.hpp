#ifndef TLF_ERRORS_HPP
#define TLF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tlf {

// Domain errors carry a stable variant name so callers (and the CLI, which
// maps them to exit code 2) can report which contract was violated.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string variant, const std::string& msg)
        : std::runtime_error(variant + ": " + msg), variant_(std::move(variant)) {}
    const std::string& variant() const { return variant_; }

private:
    std::string variant_;
};

#define TLF_ERROR_VARIANT(Name)                                       \
    class Name : public DomainError {                                 \
    public:                                                           \
        explicit Name(const std::string& msg) : DomainError(#Name, msg) {} \
    }

TLF_ERROR_VARIANT(DivisionByZero);          // exact division with nonzero remainder
TLF_ERROR_VARIANT(ZeroDivision);            // inverse of an exact zero
TLF_ERROR_VARIANT(EmptyWindow);             // no exponent range is certified
TLF_ERROR_VARIANT(UndeterminedValuation);   // window cannot certify a leading term
TLF_ERROR_VARIANT(PrecisionLoss);           // coefficient requested outside the window
TLF_ERROR_VARIANT(LengthMismatch);          // Witt vectors of different length/context
TLF_ERROR_VARIANT(TwistViolation);          // form fails a required twist membership
TLF_ERROR_VARIANT(FactorizationBudgetExceeded); // polynomial degree above trial-division budget

// Witness-carrying variant: names the offending monomial.
class NotAPthPower : public DomainError {
public:
    NotAPthPower(const std::string& msg, std::string witness)
        : DomainError("NotAPthPower", msg + " (witness " + witness + ")"),
          witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

#undef TLF_ERROR_VARIANT

// Raised on malformed input text. Deliberately not a DomainError: a string
// that fails to parse is a usage problem (CLI exit 1), not a failure of the
// computation (exit 2).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tlf

#endif
