#pragma once

#include <stdexcept>
#include <string>

namespace eds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands built over different coframe declarations.
struct DeclarationMismatchError : Error {
    using Error::Error;
};

// ext_d met a symbol or scalar variable with no structure rule.
struct IncompleteRulesError : Error {
    std::string symbol;
    explicit IncompleteRulesError(std::string sym)
        : Error("no structure rule for symbol '" + sym + "'"), symbol(std::move(sym)) {}
};

// evaluate met a scalar variable absent from the point assignment.
struct MissingAssignmentError : Error {
    std::string variable;
    explicit MissingAssignmentError(std::string var)
        : Error("point does not assign variable '" + var + "'"), variable(std::move(var)) {}
};

// reduce_mod given generators that are dependent at the evaluation context.
struct DegenerateIdealError : Error {
    using Error::Error;
};

// A dtheta carries pi^pi terms; the system is not a linear Pfaffian system.
struct NonlinearSystemError : Error {
    using Error::Error;
};

// integral_element_dim on a system whose torsion class is nonzero.
struct NoIntegralElementError : Error {
    std::string residual;
    explicit NoIntegralElementError(std::string res)
        : Error("torsion class nonzero; no integral element (residual: " + res + ")"),
          residual(std::move(res)) {}
};

// prolong_system called while torsion is nonzero.
struct MustRestrictFirstError : Error {
    using Error::Error;
};

// restrict_by_torsion given a point off the residual zero locus.
struct InvalidRestrictionError : Error {
    using Error::Error;
};

// Randomized flags failed to certify the Cartan inequality within the trial cap.
struct GenericityFailureError : Error {
    using Error::Error;
};

struct SingularIntegrandError : Error {
    using Error::Error;
};

struct DegenerateMetricError : Error {
    using Error::Error;
};

struct UnsupportedFormatError : Error {
    using Error::Error;
};

struct EmptyGridError : Error {
    using Error::Error;
};

}  // namespace eds
